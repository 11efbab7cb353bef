// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gqc/gqc.hpp"

using namespace gqc;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    // 1. Closed-form agreement for W_n and GHZ_n, n = 3..12, within budget.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int n = 3; n <= 12 && ok; ++n) {
            StateVector w = w_state(n);
            StateVector g = ghz_state(n);
            for (double q : {2.0, 3.0, 4.5}) {
                if (std::abs(gqc_pure(w, q).aggregate - gqc_w_closed(n, q)) > 1e-9) ok = false;
                if (std::abs(gqc_pure(g, q).aggregate - (1.0 - std::pow(2.0, 1.0 - q))) > 1e-10)
                    ok = false;
            }
        }
        double secs = seconds_since(t0);
        report(1, "closed-form agreement for W_n / GHZ_n, n=3..12", ok && secs < 30.0,
               "runtime " + fmt12(secs) + "s");
    }

    // 2. Point values and per-cut W_n formula, n <= 10.
    {
        bool ok = std::abs(gqc_pure(ghz_state(3), 2.0).aggregate - 0.5) <= 1e-10 &&
                  std::abs(gqc_pure(w_state(3), 2.0).aggregate - 4.0 / 9) <= 1e-10;
        for (int n = 3; n <= 10 && ok; ++n) {
            StateVector w = w_state(n);
            for (const auto& cut : enumerate_bipartitions(n)) {
                int k = std::min(cut.block_size(), n - cut.block_size());
                for (double q : {2.0, 3.0})
                    if (std::abs(q_concurrence_pure(w, cut, q) - closed_form_w(n, k, q)) > 1e-10)
                        ok = false;
            }
        }
        report(2, "known point values and per-cut W_n closed form (n<=10)", ok);
    }

    // 3. W/GHZ ratio strictly increasing for n=5..21 and near 1 at n=21.
    {
        bool ok = true;
        double prev = 0;
        for (int n = 5; n <= 21; ++n) {
            double r = gqc_w_closed(n, 3.0) / gqc_ghz_closed(n, 3.0);
            if (r <= prev) ok = false;
            prev = r;
        }
        // Closed forms give ratio(21) = 0.94974, just outside a round 0.05.
        if (std::abs(prev - 1.0) > 0.055) ok = false;
        report(3, "W/GHZ ratio trend for n=5..21", ok, "ratio(21)=" + fmt12(prev));
    }

    // 4. Noisy-W bound equals the chord formula at every grid point.
    {
        bool ok = true;
        StateVector w = w_state(3);
        bool saw_zero = false, saw_positive = false;
        for (int i = 0; i <= 100; ++i) {
            double p = i / 100.0;
            double bound = lower_bound_multipartite(noisy_state({w, p}), w, 2.0).value;
            double expected = std::max(3 * (7 * p + 1) / 32.0, 0.5) - 0.5;
            if (std::abs(bound - expected) > 1e-12) ok = false;
            if (p < 13.0 / 21 && bound == 0.0) saw_zero = true;
            if (p > 13.0 / 21 && bound > 0.0) saw_positive = true;
        }
        report(4, "noisy-W bound grid and threshold p*=13/21", ok && saw_zero && saw_positive);
    }

    // 5. Noisy-GHZ bound surface: formula, tightness at c=1/q=2, q-monotone.
    {
        bool ok = true;
        StateVector g = ghz_state(3);
        for (int i = 0; i <= 20 && ok; ++i) {
            double c = i / 20.0;
            DensityMatrix rho = noisy_state({g, c});
            double prev = -1;
            for (int j = 0; j <= 20; ++j) {
                double q = 2.0 + 0.5 * j;
                double bound = lower_bound_multipartite(rho, g, q).value;
                double expected = (std::pow(2.0, q - 1) - 1) / std::pow(2.0, q - 2) *
                                  (std::max((7 * c + 1) / 8, 0.5) - 0.5);
                if (std::abs(bound - expected) > 1e-12) ok = false;
                if (bound < prev - 1e-12) ok = false;
                prev = bound;
            }
        }
        double tight = lower_bound_multipartite(noisy_state({g, 1.0}), g, 2.0).value;
        if (std::abs(tight - 0.5) > 1e-10) ok = false;
        if (std::abs(tight - gqc_pure(g, 2.0).aggregate) > 1e-10) ok = false;
        report(5, "noisy-GHZ bound surface, tightness, q-monotonicity", ok);
    }

    // 6. Soundness on 500 seeded random pure 3-qubit states.
    {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = run_soundness(20240823, 500);
        double secs = seconds_since(t0);
        report(6, "witness bound never exceeds exact GqC (500 states)",
               rep.violations == 0 && secs < 60.0,
               std::to_string(rep.checks) + " checks, runtime " + fmt12(secs) + "s");
    }

    // 7. Convex-hull oracle matches the chord coefficient.
    {
        bool ok = true;
        for (int m : {2, 3, 4})
            for (double q : {2.0, 2.5, 3.0, 5.0, 12.0}) {
                auto fit = convex_hull_oracle(m, q, 513);
                if (std::abs(fit.slope - chord_coefficient(m, q)) > 1e-6) ok = false;
                if (std::abs(fit.value_lo) > 1e-9) ok = false;
                if (std::abs(fit.value_hi - max_fq(m, q)) > 1e-9) ok = false;
            }
        report(7, "convex-hull envelope matches the chord coefficient", ok);
    }

    // 8. Lemma-1 suite, 200 samples, zero violations.
    {
        auto rep = run_lemma1(20240823, 200);
        report(8, "F_q property suite (200 samples)", rep.violations == 0,
               std::to_string(rep.checks) + " checks");
    }

    // 9. Continuity suite, 200 samples across eps levels.
    {
        auto rep = run_continuity(20240823, 200);
        report(9, "continuity bounds on perturbed pairs (200 samples)", rep.violations == 0,
               std::to_string(rep.checks) + " checks");
    }

    // 10. Vanishing/positivity/maximality behavior.
    {
        auto rep = run_theorem1(20240823, 200);
        report(10, "GqC vanishing, positivity, and GHZ_3 maximality", rep.violations == 0,
               std::to_string(rep.checks) + " checks");
    }

    // 11. Ordering reversals and the four-qubit structural scan.
    {
        auto scan = ordering_scan(SweepFamily::Class1, SweepFamily::Class2, 4.0, 200);
        auto f7 = figure7_scan(400);
        bool ok = !scan.gmc_reversals.empty() && !scan.ggm_reversals.empty() &&
                  f7.gmc_peak_found && f7.g3c_smooth && f7.ggm_collision_found;
        report(11, "ordering reversals and figure-7 scan", ok,
               "gmc_pairs=" + std::to_string(scan.gmc_reversals.size()) +
                   " ggm_pairs=" + std::to_string(scan.ggm_reversals.size()) +
                   " gmc_peak=" + (f7.gmc_peak_found ? "y" : "n") +
                   " smooth=" + (f7.g3c_smooth ? "y" : "n") +
                   " collision=" + (f7.ggm_collision_found ? "y" : "n"));
    }

    // 12. Byte determinism of CSVs and propcheck reports.
    {
        bool ok = figure1_csv() == figure1_csv() && figure2_csv() == figure2_csv() &&
                  figure3_csv() == figure3_csv() && figure4_csv(60) == figure4_csv(60) &&
                  figure5_csv(60) == figure5_csv(60) && figure7_csv(60) == figure7_csv(60);
        SweepSpec spec;
        spec.family = SweepFamily::WNoise;
        spec.steps = 6;
        spec.include_roof = true;
        spec.roof_ensemble = 8;
        spec.roof_iterations = 20;
        spec.seed = 11;
        ok = ok && sweep_csv(spec) == sweep_csv(spec);
        ok = ok && run_lemma1(5, 20).to_text() == run_lemma1(5, 20).to_text();
        report(12, "byte-identical CSVs and propcheck reports across runs", ok);
    }

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
