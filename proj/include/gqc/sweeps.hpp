#pragma once

#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "gqc/bounds.hpp"
#include "gqc/measures.hpp"
#include "gqc/states.hpp"

namespace gqc {

// CSV numbers carry 12 significant digits with '.' decimal; output is
// byte-identical across runs for identical inputs.
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Interior grid over (0, pi/2): endpoints of the open interval are skipped.
inline std::vector<double> theta_grid(int steps) {
    if (steps < 2) throw domain_error("grid needs at least 2 steps");
    std::vector<double> out(steps);
    for (int i = 0; i < steps; ++i)
        out[i] = std::numbers::pi / 2.0 * (i + 1) / (steps + 1);
    return out;
}

// Dataset 1: certified lower bound for the noisy W_3 state at q=2.
inline std::string figure1_csv() {
    std::string csv = "p,fidelity,lambda,bound\n";
    StateVector w = w_state(3);
    for (int i = 0; i <= 100; ++i) {
        double p = i / 100.0;
        auto cert = lower_bound_multipartite(noisy_state({w, p}), w, 2.0);
        csv += fmt12(p) + "," + fmt12(cert.witness_fidelity) + "," + fmt12(cert.lambda) + "," +
               fmt12(cert.value) + "\n";
    }
    return csv;
}

// Dataset 2: certified lower bound for the noisy GHZ_3 state over a (c, q) grid.
inline std::string figure2_csv() {
    std::string csv = "c,q,bound\n";
    StateVector ghz = ghz_state(3);
    for (int i = 0; i <= 50; ++i) {
        double c = i / 50.0;
        DensityMatrix rho = noisy_state({ghz, c});
        for (int j = 0; j <= 20; ++j) {
            double q = 2.0 + 0.5 * j;
            auto cert = lower_bound_multipartite(rho, ghz, q);
            csv += fmt12(c) + "," + fmt12(q) + "," + fmt12(cert.value) + "\n";
        }
    }
    return csv;
}

// Dataset 3: closed-form G3C of W_n and the W/GHZ ratio for n = 5..21.
inline std::string figure3_csv() {
    std::string csv = "n,gqc_w,gqc_ghz,ratio\n";
    for (int n = 5; n <= 21; ++n) {
        double w = gqc_w_closed(n, 3.0);
        double g = gqc_ghz_closed(n, 3.0);
        csv += std::to_string(n) + "," + fmt12(w) + "," + fmt12(g) + "," + fmt12(w / g) + "\n";
    }
    return csv;
}

// Figs. 4/5 data: G4C vs GMC (fig 4) or GGM (fig 5) for the two three-qubit
// classes over a theta grid.
inline std::string figure45_csv(bool ggm_variant, int steps = 200) {
    std::string other = ggm_variant ? "ggm" : "gmc";
    std::string csv = "theta,class1_g4c,class1_" + other + ",class2_g4c,class2_" + other + "\n";
    for (double t : theta_grid(steps)) {
        StateVector s1 = class1(t);
        StateVector s2 = class2(t);
        double o1 = ggm_variant ? ggm_pure(s1).aggregate : gmc_pure(s1).aggregate;
        double o2 = ggm_variant ? ggm_pure(s2).aggregate : gmc_pure(s2).aggregate;
        csv += fmt12(t) + "," + fmt12(gqc_pure(s1, 4.0).aggregate) + "," + fmt12(o1) + "," +
               fmt12(gqc_pure(s2, 4.0).aggregate) + "," + fmt12(o2) + "\n";
    }
    return csv;
}

inline std::string figure4_csv(int steps = 200) { return figure45_csv(false, steps); }
inline std::string figure5_csv(int steps = 200) { return figure45_csv(true, steps); }

// Dataset 7: G3C, GMC, GGM of the four-qubit family, with the GMC argmin
// cut recorded per row.
inline std::string figure7_csv(int steps = 400) {
    std::string csv = "theta,g3c,gmc,ggm,gmc_argmin\n";
    for (double t : theta_grid(steps)) {
        StateVector psi = four_qubit_family(t);
        auto gmc = gmc_pure(psi);
        csv += fmt12(t) + "," + fmt12(gqc_pure(psi, 3.0).aggregate) + "," + fmt12(gmc.aggregate) +
               "," + fmt12(ggm_pure(psi).aggregate) + "," + gmc.extremal_cut->to_string() + "\n";
    }
    return csv;
}

// ---------------------------------------------------------------------------
// Parameter sweeps.
// ---------------------------------------------------------------------------

enum class SweepFamily { WNoise, GhzNoise, Class1, Class2, FourQubit, WVsGhz };

inline SweepFamily sweep_family_from_name(const std::string& name) {
    if (name == "w_noise") return SweepFamily::WNoise;
    if (name == "ghz_noise") return SweepFamily::GhzNoise;
    if (name == "class1") return SweepFamily::Class1;
    if (name == "class2") return SweepFamily::Class2;
    if (name == "four_qubit") return SweepFamily::FourQubit;
    if (name == "w_vs_ghz") return SweepFamily::WVsGhz;
    throw domain_error("unknown sweep family: " + name);
}

struct SweepSpec {
    SweepFamily family = SweepFamily::WNoise;
    double start = 0.0;
    double stop = 1.0;
    int steps = 51;
    std::vector<double> q_list = {2.0};
    bool include_roof = false;  // roof estimator column is opt-in
    int roof_ensemble = 10;
    int roof_iterations = 120;
    std::uint64_t seed = 1;
};

inline std::string sweep_csv(const SweepSpec& spec) {
    if (spec.steps < 2) throw domain_error("sweep needs at least 2 steps");
    auto grid = [&](int i) { return spec.start + (spec.stop - spec.start) * i / (spec.steps - 1); };

    auto name = [&] {
        switch (spec.family) {
            case SweepFamily::WNoise: return "w_noise";
            case SweepFamily::GhzNoise: return "ghz_noise";
            case SweepFamily::Class1: return "class1";
            case SweepFamily::Class2: return "class2";
            case SweepFamily::FourQubit: return "four_qubit";
            case SweepFamily::WVsGhz: return "w_vs_ghz";
        }
        return "?";
    }();

    std::string csv;
    if (spec.family == SweepFamily::WNoise || spec.family == SweepFamily::GhzNoise) {
        csv = "family,param,q,fidelity,s1,m,lambda,bound,exact_if_pure,roof_upper\n";
        StateVector base = (spec.family == SweepFamily::WNoise) ? w_state(3) : ghz_state(3);
        for (int i = 0; i < spec.steps; ++i) {
            double p = grid(i);
            if (p < 0.0 || p > 1.0) throw domain_error("visibility grid must stay in [0, 1]");
            DensityMatrix rho = noisy_state({base, p});
            for (double q : spec.q_list) {
                auto cert = lower_bound_multipartite(rho, base, q);
                std::string exact = (p == 1.0) ? fmt12(gqc_pure(base, q).aggregate) : "";
                std::string roof;
                if (spec.include_roof) {
                    auto est = mixed_gqc_upper_estimate(rho, q, spec.roof_ensemble,
                                                        spec.roof_iterations, spec.seed);
                    roof = fmt12(est.upper);
                }
                csv += std::string(name) + "," + fmt12(p) + "," + fmt12(q) + "," +
                       fmt12(cert.witness_fidelity) + "," + fmt12(cert.s1) + "," +
                       std::to_string(cert.m) + "," + fmt12(cert.lambda) + "," + fmt12(cert.value) +
                       "," + exact + "," + roof + "\n";
            }
        }
    } else if (spec.family == SweepFamily::WVsGhz) {
        csv = "family,param,q,gqc_w,gqc_ghz,ratio\n";
        int n_lo = static_cast<int>(spec.start);
        int n_hi = static_cast<int>(spec.stop);
        if (n_lo < 3 || n_hi < n_lo) throw domain_error("w_vs_ghz sweeps over n >= 3");
        for (int n = n_lo; n <= n_hi; ++n)
            for (double q : spec.q_list) {
                double w = gqc_w_closed(n, q);
                double g = gqc_ghz_closed(n, q);
                csv += std::string(name) + "," + std::to_string(n) + "," + fmt12(q) + "," +
                       fmt12(w) + "," + fmt12(g) + "," + fmt12(w / g) + "\n";
            }
    } else {
        csv = "family,param,q,gqc,gmc,ggm\n";
        for (int i = 0; i < spec.steps; ++i) {
            double t = grid(i);
            StateVector psi = (spec.family == SweepFamily::Class1)   ? class1(t)
                              : (spec.family == SweepFamily::Class2) ? class2(t)
                                                                     : four_qubit_family(t);
            double gmc = gmc_pure(psi).aggregate;
            double ggm = ggm_pure(psi).aggregate;
            for (double q : spec.q_list)
                csv += std::string(name) + "," + fmt12(t) + "," + fmt12(q) + "," +
                       fmt12(gqc_pure(psi, q).aggregate) + "," + fmt12(gmc) + "," + fmt12(ggm) + "\n";
        }
    }
    return csv;
}

// ---------------------------------------------------------------------------
// Ordering scans.
// ---------------------------------------------------------------------------

struct OrderingPoint {
    double theta;
    double gqc, gmc, ggm;
};

struct OrderingScan {
    std::vector<std::pair<double, double>> gmc_reversals;  // (theta_a, theta_b)
    std::vector<std::pair<double, double>> ggm_reversals;
};

inline std::vector<OrderingPoint> scan_family(SweepFamily fam, double q, int steps) {
    std::vector<OrderingPoint> out;
    out.reserve(steps);
    for (double t : theta_grid(steps)) {
        StateVector psi = (fam == SweepFamily::Class1)   ? class1(t)
                          : (fam == SweepFamily::Class2) ? class2(t)
                                                         : four_qubit_family(t);
        out.push_back({t, gqc_pure(psi, q).aggregate, gmc_pure(psi).aggregate, ggm_pure(psi).aggregate});
    }
    return out;
}

// Pairs (a, b) across the two grids where the GqC order is the strict
// opposite of the GMC (resp. GGM) order. Capped to keep reports small.
inline OrderingScan ordering_scan(SweepFamily a, SweepFamily b, double q, int steps,
                                  std::size_t max_pairs = 64) {
    auto pa = scan_family(a, q, steps);
    auto pb = scan_family(b, q, steps);
    OrderingScan out;
    for (const auto& x : pa)
        for (const auto& y : pb) {
            double dg = x.gqc - y.gqc;
            if (out.gmc_reversals.size() < max_pairs && dg * (x.gmc - y.gmc) < 0)
                out.gmc_reversals.emplace_back(x.theta, y.theta);
            if (out.ggm_reversals.size() < max_pairs && dg * (x.ggm - y.ggm) < 0)
                out.ggm_reversals.emplace_back(x.theta, y.theta);
        }
    return out;
}

// Structural scan of the four-qubit family: GMC argmin-cut switches, G3C
// smoothness, and a GGM value collision with distinct G3C.
struct Figure7Scan {
    int gmc_argmin_switches = 0;   // informational; 0 for this family
    bool gmc_peak_found = false;   // GMC rises to an interior maximum, then falls
    double gmc_peak_theta = 0;
    bool g3c_smooth = true;  // no second-difference sign flip above threshold
    bool ggm_collision_found = false;
    double collision_theta_a = 0, collision_theta_b = 0;
    double collision_g3c_gap = 0;
};

inline Figure7Scan figure7_scan(int steps = 400, double smooth_tol = 1e-3) {
    Figure7Scan out;
    auto grid = theta_grid(steps);
    std::vector<double> g3c(steps), ggm(steps), gmc(steps);
    std::vector<std::uint32_t> argmin(steps);
    for (int i = 0; i < steps; ++i) {
        StateVector psi = four_qubit_family(grid[i]);
        g3c[i] = gqc_pure(psi, 3.0).aggregate;
        ggm[i] = ggm_pure(psi).aggregate;
        auto rep = gmc_pure(psi);
        gmc[i] = rep.aggregate;
        argmin[i] = rep.extremal_cut->mask();
    }
    for (int i = 1; i < steps; ++i)
        if (argmin[i] != argmin[i - 1]) ++out.gmc_argmin_switches;
    // The GMC extremal cut stays fixed over this family, so the peak shows up
    // as an interior maximum of the minimum-cut curve rather than a branch
    // switch.
    int gmc_peak = 0;
    for (int i = 1; i < steps; ++i)
        if (gmc[i] > gmc[gmc_peak]) gmc_peak = i;
    if (gmc_peak > 0 && gmc_peak + 1 < steps) {
        out.gmc_peak_found = true;
        out.gmc_peak_theta = grid[gmc_peak];
    }
    std::vector<double> d2(steps >= 2 ? steps - 2 : 0);
    for (int i = 1; i + 1 < steps; ++i) d2[i - 1] = g3c[i + 1] - 2 * g3c[i] + g3c[i - 1];
    for (std::size_t i = 0; i + 1 < d2.size(); ++i)
        if (d2[i] * d2[i + 1] < 0 && std::abs(d2[i]) > smooth_tol && std::abs(d2[i + 1]) > smooth_tol)
            out.g3c_smooth = false;

    // GGM is non-monotonic over the family; match a value across the peak by
    // bisection on the continuous parameter.
    int peak = 0;
    for (int i = 1; i < steps; ++i)
        if (ggm[i] > ggm[peak]) peak = i;
    if (peak > 0 && peak + 1 < steps) {
        double target_theta = grid[peak / 2];  // well inside the rising branch
        double target = ggm_pure(four_qubit_family(target_theta)).aggregate;
        double lo = grid[peak], hi = grid[steps - 1];
        double hi_val = ggm[steps - 1];
        if (hi_val <= target) {  // target value is crossed on the falling branch
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                if (ggm_pure(four_qubit_family(mid)).aggregate > target)
                    lo = mid;
                else
                    hi = mid;
            }
            double theta_b = 0.5 * (lo + hi);
            double gap = std::abs(gqc_pure(four_qubit_family(target_theta), 3.0).aggregate -
                                  gqc_pure(four_qubit_family(theta_b), 3.0).aggregate);
            double ggm_gap = std::abs(ggm_pure(four_qubit_family(theta_b)).aggregate - target);
            if (ggm_gap < 1e-6 && gap > 1e-3) {
                out.ggm_collision_found = true;
                out.collision_theta_a = target_theta;
                out.collision_theta_b = theta_b;
                out.collision_g3c_gap = gap;
            }
        }
    }
    return out;
}

}  // namespace gqc
