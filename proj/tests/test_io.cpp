#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>

#include "gqc/checks.hpp"
#include "gqc/sweeps.hpp"

using namespace gqc;
using Catch::Approx;

TEST_CASE("state JSON round trip") {
    auto w = w_state(3);
    auto back = state_from_json(to_json(w));
    REQUIRE(back.local_dims() == w.local_dims());
    for (std::int64_t i = 0; i < w.dimension(); ++i) CHECK(back[i] == w[i]);
}

TEST_CASE("density JSON round trip") {
    auto rho = noisy_state({ghz_state(2), 0.4});
    auto back = density_from_json(to_json(rho));
    CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("malformed JSON is rejected") {
    nlohmann::json j;
    j["local_dims"] = {2, 2};
    j["amplitudes"] = {{1.0, 0.0}};  // wrong length
    CHECK_THROWS_AS(state_from_json(j), shape_error);
}

TEST_CASE("12-significant-digit CSV formatting") {
    CHECK(fmt12(0.5) == "0.5");
    CHECK(fmt12(1.0 / 3) == "0.333333333333");
    CHECK(fmt12(13.0 / 21) == "0.619047619048");
}

TEST_CASE("figure CSVs are deterministic and carry the frozen anchor rows") {
    std::string f1 = figure1_csv();
    CHECK(f1 == figure1_csv());
    // p=1 row: lambda = 1/(s1*m) = 3/4 for W_3, bound 1/4.
    CHECK(f1.find("\n1,1,0.75,0.25\n") != std::string::npos);

    std::string f3 = figure3_csv();
    CHECK(f3 == figure3_csv());
    CHECK(f3.rfind("n,gqc_w,gqc_ghz,ratio\n", 0) == 0);

    CHECK(figure2_csv() == figure2_csv());
    CHECK(figure7_csv(64) == figure7_csv(64));
}

TEST_CASE("sweep CSVs") {
    SweepSpec spec;
    spec.family = SweepFamily::GhzNoise;
    spec.steps = 5;
    spec.q_list = {2.0, 3.0};
    std::string csv = sweep_csv(spec);
    CHECK(csv == sweep_csv(spec));
    CHECK(csv.rfind("family,param,q,fidelity,s1,m,lambda,bound,exact_if_pure,roof_upper\n", 0) == 0);
    // 5 grid points x 2 q values + header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);

    SweepSpec ratio;
    ratio.family = SweepFamily::WVsGhz;
    ratio.start = 5;
    ratio.stop = 9;
    ratio.q_list = {3.0};
    CHECK(sweep_csv(ratio).rfind("family,param,q,gqc_w,gqc_ghz,ratio\n", 0) == 0);

    SweepSpec theta;
    theta.family = SweepFamily::Class2;
    theta.start = 0.1;
    theta.stop = 1.4;
    theta.steps = 4;
    CHECK(sweep_csv(theta).rfind("family,param,q,gqc,gmc,ggm\n", 0) == 0);

    SweepSpec bad;
    bad.steps = 1;
    CHECK_THROWS_AS(sweep_csv(bad), domain_error);
    CHECK_THROWS_AS(sweep_family_from_name("nope"), domain_error);
}

TEST_CASE("suite reports are deterministic per seed") {
    auto a = run_lemma1(31, 12);
    auto b = run_lemma1(31, 12);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.violations == 0);
}

TEST_CASE("small propcheck suite runs pass") {
    for (const auto& name : suite_names()) {
        auto rep = run_suite(name, 1234, 10);
        INFO(rep.to_text());
        CHECK(rep.passed());
    }
}

TEST_CASE("ordering scan finds reversals between the two classes") {
    auto scan = ordering_scan(SweepFamily::Class1, SweepFamily::Class2, 4.0, 60);
    CHECK(!scan.gmc_reversals.empty());
    CHECK(!scan.ggm_reversals.empty());
}
