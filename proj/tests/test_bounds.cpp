#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gqc/bounds.hpp"
#include "gqc/checks.hpp"

using namespace gqc;
using Catch::Approx;

TEST_CASE("closed forms for W and GHZ cuts") {
    CHECK(closed_form_w(3, 1, 2.0) == Approx(4.0 / 9).margin(1e-12));
    CHECK(closed_form_w(4, 2, 3.0) == Approx(3.0 / 4).margin(1e-12));  // 1 - 8/64 - 8/64
    // Balanced cut coincides with the GHZ value for any q.
    for (double q : {2.0, 3.3, 7.0})
        CHECK(closed_form_w(6, 3, q) == Approx(closed_form_ghz(q)).margin(1e-12));

    CHECK(closed_form_ghz(2.0) == Approx(0.5).margin(1e-15));
    CHECK(closed_form_ghz(3.0) == Approx(0.75).margin(1e-15));
    double prev = 0;
    for (double q = 2; q <= 40; q += 1) {  // monotone toward 1
        double v = closed_form_ghz(q);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 0.999999);
    CHECK_THROWS_AS(closed_form_w(4, 3, 2.0), domain_error);
}

TEST_CASE("closed-form aggregates match the numeric path") {
    CHECK(gqc_w_closed(3, 2.0) == Approx(4.0 / 9).margin(1e-12));
    CHECK(gqc_ghz_closed(3, 2.0) == Approx(0.5).margin(1e-15));
    double w4 = std::pow(std::pow(9.0 / 16, 4) * std::pow(3.0 / 4, 3), 1.0 / 7);
    CHECK(gqc_w_closed(4, 3.0) == Approx(w4).margin(1e-12));
    for (int n = 3; n <= 8; ++n)
        for (double q : {2.0, 3.0, 4.5})
            CHECK(gqc_w_closed(n, q) == Approx(gqc_pure(w_state(n), q).aggregate).margin(1e-9));
}

TEST_CASE("W/GHZ ratio trend") {
    double prev = 0;
    for (int n = 5; n <= 21; ++n) {
        double r = gqc_w_closed(n, 3.0) / gqc_ghz_closed(n, 3.0);
        CHECK(r > prev);
        prev = r;
    }
    double at21 = gqc_w_closed(21, 3.0) / gqc_ghz_closed(21, 3.0);
    double at19 = gqc_w_closed(19, 3.0) / gqc_ghz_closed(19, 3.0);
    CHECK(at19 > 0.99 * at21);
}

TEST_CASE("bipartite bound is tight on the GHZ projector") {
    auto rho = DensityMatrix::from_pure(ghz_state(3));
    auto cert = lower_bound_bipartite(rho, ghz_state(3), Bipartition({0}, 3), 2.0);
    CHECK(cert.m == 2);
    CHECK(cert.s1 == Approx(0.5).margin(1e-10));
    CHECK(cert.lambda == Approx(1.0).margin(1e-10));
    CHECK(cert.value == Approx(0.5).margin(1e-10));
    CHECK(cert.value ==
          Approx(q_concurrence_pure(ghz_state(3), Bipartition({0}, 3), 2.0)).margin(1e-10));
}

TEST_CASE("noisy-W bound reproduces the chord formula and threshold") {
    StateVector w = w_state(3);
    for (int i = 0; i <= 100; ++i) {
        double p = i / 100.0;
        auto cert = lower_bound_multipartite(noisy_state({w, p}), w, 2.0);
        double expected = std::max(3 * (7 * p + 1) / 32.0, 0.5) - 0.5;
        CHECK(cert.value == Approx(expected).margin(1e-12));
        if (p > 13.0 / 21 + 1e-9) CHECK(cert.value > 0);
        if (p < 13.0 / 21 - 1e-9) CHECK(cert.value == Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("maximally mixed input clamps lambda to 1/m") {
    DensityMatrix mixed({2, 2, 2}, Eigen::MatrixXcd::Identity(8, 8) / 8.0);
    auto cert = lower_bound_multipartite(mixed, ghz_state(3), 2.0);
    CHECK(cert.lambda == Approx(0.5).margin(1e-12));
    CHECK(cert.value == Approx(0.0).margin(1e-12));
}

TEST_CASE("noisy-GHZ bound: formula, tightness, q-monotonicity") {
    StateVector g = ghz_state(3);
    for (double c : {0.0, 0.3, 3.0 / 7, 0.6, 1.0}) {
        DensityMatrix rho = noisy_state({g, c});
        double prev = -1;
        for (double q : {2.0, 3.0, 5.0, 8.0, 12.0}) {
            auto cert = lower_bound_multipartite(rho, g, q);
            double expected = (std::pow(2.0, q - 1) - 1) / std::pow(2.0, q - 2) *
                              (std::max((7 * c + 1) / 8, 0.5) - 0.5);
            CHECK(cert.value == Approx(expected).margin(1e-12));
            CHECK(cert.value >= prev - 1e-12);  // nondecreasing in q
            prev = cert.value;
        }
        if (c > 3.0 / 7 + 1e-9)
            CHECK(lower_bound_multipartite(rho, g, 2.0).value > 0);
    }
    CHECK(lower_bound_multipartite(noisy_state({g, 1.0}), g, 2.0).value ==
          Approx(0.5).margin(1e-12));
}

TEST_CASE("bound soundness on random pure states") {
    auto rep = run_soundness(404, 50);
    CHECK(rep.violations == 0);
}

TEST_CASE("R curve endpoints") {
    for (int m : {2, 3, 4}) {
        for (double q : {2.0, 3.0, 5.0}) {
            CHECK(r_curve(1.0 / m, m, q) == Approx(0.0).margin(1e-12));
            CHECK(r_curve(1.0, m, q) == Approx(max_fq(m, q)).margin(1e-12));
        }
    }
    CHECK(convex_hull_oracle(2, 2.0, 256).slope == Approx(1.0).margin(1e-9));
    CHECK_THROWS_AS(r_curve(0.1, 2, 2.0), domain_error);
    CHECK_THROWS_AS(convex_hull_oracle(2, 2.0, 32), domain_error);
}

TEST_CASE("convex hull envelope matches the chord coefficient") {
    // The envelope's endpoints and secant slope are pinned to the chord.
    // For small q the curve dips below the chord in the interior (the
    // envelope follows the curve there), so only endpoints/slope are fixed.
    for (int m : {2, 3, 4}) {
        for (double q : {2.0, 2.5, 3.0, 5.0, 12.0}) {
            auto fit = convex_hull_oracle(m, q, 513);
            CHECK(fit.lambda_lo == Approx(1.0 / m).margin(1e-12));
            CHECK(fit.value_lo == Approx(0.0).margin(1e-9));
            CHECK(fit.lambda_hi == Approx(1.0).margin(1e-12));
            CHECK(fit.value_hi == Approx(max_fq(m, q)).margin(1e-9));
            CHECK(fit.slope == Approx(chord_coefficient(m, q)).margin(1e-6));
        }
    }
}

TEST_CASE("continuity bound values") {
    CHECK(continuity_bound_bipartite(2, 0.0, 2.0) == Approx(0.0).margin(1e-15));
    CHECK(continuity_bound_bipartite(2, 0.1, 2.0) == Approx(0.205).margin(1e-12));
    CHECK(continuity_bound_multipartite(3, 2, 0.1, 2.0) ==
          Approx(std::pow(3 * 0.205, 1.0 / 3)).margin(1e-12));
    CHECK(continuity_bound_multipartite(3, 2, 0.1, 2.0) == Approx(0.8504).margin(1e-4));
    CHECK_THROWS_AS(continuity_bound_multipartite(4, 2, 0.1, 2.0), domain_error);
}

TEST_CASE("continuity bounds hold on random perturbed pairs") {
    auto rep = run_continuity(808, 30);
    CHECK(rep.violations == 0);
}

TEST_CASE("roof estimator") {
    // Rank-1 input: the only decomposition is the state itself.
    auto pure = DensityMatrix::from_pure(ghz_state(3));
    for (double q : {2.0, 3.0}) {
        auto est = mixed_gqc_upper_estimate(pure, q, 4, 10, 1);
        CHECK(est.upper == Approx(1.0 - std::pow(2.0, 1.0 - q)).margin(1e-9));
    }

    // Sandwich: upper estimate never below the certified lower bound.
    StateVector g = ghz_state(3);
    for (double c : {0.7, 0.9}) {
        DensityMatrix rho = noisy_state({g, c});
        auto est = mixed_gqc_upper_estimate(rho, 2.0, 10, 60, 7);
        auto lower = lower_bound_multipartite(rho, g, 2.0);
        CHECK(est.upper >= lower.value - 1e-9);
    }

    // Determinism per seed.
    DensityMatrix rho = noisy_state({g, 0.8});
    auto a = mixed_gqc_upper_estimate(rho, 2.0, 9, 40, 5);
    auto b = mixed_gqc_upper_estimate(rho, 2.0, 9, 40, 5);
    CHECK(a.upper == b.upper);

    CHECK_THROWS_AS(mixed_gqc_upper_estimate(rho, 2.0, 3, 10, 1), domain_error);  // rank 8 > 3
}

TEST_CASE("degenerate witness is rejected") {
    auto prod = product_state({StateVector::basis({2}, 0), StateVector::basis({2}, 0),
                               StateVector::basis({2}, 0)});
    DensityMatrix rho = DensityMatrix::from_pure(ghz_state(3));
    CHECK_THROWS_AS(lower_bound_multipartite(rho, prod, 2.0), degenerate_witness_error);
}
