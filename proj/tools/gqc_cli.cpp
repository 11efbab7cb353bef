// Command-line front end: measures and bound certificates for built-in or
// file-loaded states, figure/sweep CSV generation, property-check suites and
// ordering scans.
//
// Exit codes: 0 ok, 1 property violation, 2 input error, 3 resource cap.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gqc/gqc.hpp"

namespace {

struct StateSource {
    int ghz = 0;
    int w = 0;
    double class1_theta = -1;
    double class2_theta = -1;
    double four_qubit_theta = -1;
    std::string product_bits;
    std::string haar_dims;
    std::string state_file;
};

void add_state_flags(CLI::App* cmd, StateSource& src) {
    cmd->add_option("--ghz", src.ghz, "n-qubit GHZ state");
    cmd->add_option("--w", src.w, "n-qubit W state");
    cmd->add_option("--class1", src.class1_theta, "three-qubit class I state at theta");
    cmd->add_option("--class2", src.class2_theta, "three-qubit class II state at theta");
    cmd->add_option("--four-qubit", src.four_qubit_theta, "four-qubit family state at theta");
    cmd->add_option("--product", src.product_bits, "computational product state, e.g. 010");
    cmd->add_option("--haar", src.haar_dims, "Haar-random state with comma-separated local dims");
    cmd->add_option("--state", src.state_file, "JSON state file");
}

gqc::StateVector resolve_state(const StateSource& src, std::uint64_t seed) {
    if (src.ghz > 0) return gqc::ghz_state(src.ghz);
    if (src.w > 0) return gqc::w_state(src.w);
    if (src.class1_theta >= 0) return gqc::class1(src.class1_theta);
    if (src.class2_theta >= 0) return gqc::class2(src.class2_theta);
    if (src.four_qubit_theta >= 0) return gqc::four_qubit_family(src.four_qubit_theta);
    if (!src.product_bits.empty()) {
        std::vector<gqc::StateVector> factors;
        for (char c : src.product_bits) {
            if (c != '0' && c != '1') throw gqc::domain_error("--product expects a 0/1 string");
            factors.push_back(gqc::StateVector::basis({2}, c - '0'));
        }
        return gqc::product_state(factors);
    }
    if (!src.haar_dims.empty()) {
        std::vector<int> dims;
        std::stringstream ss(src.haar_dims);
        std::string tok;
        while (std::getline(ss, tok, ',')) dims.push_back(std::stoi(tok));
        return gqc::haar_random_pure(dims, seed);
    }
    if (!src.state_file.empty()) {
        std::ifstream in(src.state_file);
        if (!in) throw gqc::error("cannot open state file: " + src.state_file);
        nlohmann::json j;
        in >> j;
        return gqc::state_from_json(j);
    }
    throw gqc::domain_error("no state source given (see --help)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gqc::error("cannot open output file: " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric-mean q-concurrence toolkit"};
    app.require_subcommand(1);

    std::vector<double> q_list{2.0};
    std::uint64_t seed = 1;
    std::string out_path;
    int max_parties = 14;
    double tolerance = 1e-9;
    app.add_option("--q", q_list, "q values (each >= 2)")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--max-parties", max_parties, "party-count cap")->capture_default_str();
    app.add_option("--tolerance", tolerance, "slack used by property checks")->capture_default_str();
    // Let the global options above (--q, --seed, ...) appear after a
    // subcommand name as well.
    app.fallthrough();

    // measure
    auto* measure = app.add_subcommand("measure", "GqC, GMC, GGM and the per-cut table");
    StateSource measure_src;
    add_state_flags(measure, measure_src);
    bool measure_json = false;
    measure->add_flag("--json", measure_json, "emit JSON instead of the table");

    // bound
    auto* bound = app.add_subcommand("bound", "witness-fidelity lower bound for a noisy state");
    StateSource bound_src;
    add_state_flags(bound, bound_src);
    double visibility = 1.0;
    std::string density_file, witness_file;
    bool with_roof = false;
    int roof_ensemble = 10, roof_iterations = 120;
    bound->add_option("--visibility", visibility, "white-noise visibility p in [0,1]")
        ->capture_default_str();
    bound->add_option("--density", density_file, "JSON density-matrix file (overrides state flags)");
    bound->add_option("--witness", witness_file, "JSON witness state file (default: the base state)");
    bound->add_flag("--roof", with_roof, "also run the stochastic convex-roof upper estimator");
    bound->add_option("--roof-ensemble", roof_ensemble)->capture_default_str();
    bound->add_option("--roof-iterations", roof_iterations)->capture_default_str();

    // figure
    auto* figure = app.add_subcommand("figure", "emit one of the built-in CSV datasets");
    int figure_id = 0;
    figure->add_option("id", figure_id, "dataset id: 1, 2, 3, 4, 5 or 7")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "parameter sweep CSV for a state family");
    std::string family_name;
    gqc::SweepSpec spec;
    sweep->add_option("--family", family_name,
                      "w_noise | ghz_noise | class1 | class2 | four_qubit | w_vs_ghz")
        ->required();
    sweep->add_option("--start", spec.start)->capture_default_str();
    sweep->add_option("--stop", spec.stop)->capture_default_str();
    sweep->add_option("--steps", spec.steps)->capture_default_str();
    sweep->add_flag("--roof", spec.include_roof, "include the roof-estimator column");
    sweep->add_option("--roof-ensemble", spec.roof_ensemble)->capture_default_str();
    sweep->add_option("--roof-iterations", spec.roof_iterations)->capture_default_str();

    // propcheck
    auto* propcheck = app.add_subcommand("propcheck", "run a property suite");
    std::string suite_name;
    int samples = 200;
    std::string cex_path = "counterexample.json";
    propcheck->add_option("suite", suite_name, "lemma1 | subadditivity | soundness | continuity | theorem1 | tensor")
        ->required();
    propcheck->add_option("--samples", samples)->capture_default_str();
    propcheck->add_option("--counterexample-out", cex_path)->capture_default_str();

    // ordering-scan
    auto* scan = app.add_subcommand("ordering-scan", "find measure-ordering reversal pairs");
    std::string class_a = "class1", class_b = "class2";
    int scan_steps = 200;
    bool fig7 = false;
    scan->add_option("--class-a", class_a)->capture_default_str();
    scan->add_option("--class-b", class_b)->capture_default_str();
    scan->add_option("--steps", scan_steps)->capture_default_str();
    scan->add_flag("--figure7", fig7, "also run the four-qubit structural scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*measure) {
            gqc::StateVector psi = resolve_state(measure_src, seed);
            nlohmann::json reports = nlohmann::json::array();
            std::ostringstream os;
            for (double q : q_list) {
                auto rep = gqc::gqc_pure(psi, q, max_parties);
                reports.push_back(rep.to_json());
                os << "GqC (q=" << gqc::fmt12(q) << "): " << gqc::fmt12(rep.aggregate) << "\n";
                for (const auto& [cut, v] : rep.per_cut)
                    os << "  C_q " << cut.to_string() << " = " << gqc::fmt12(v) << "\n";
            }
            auto gmc = gqc::gmc_pure(psi, max_parties);
            auto ggm = gqc::ggm_pure(psi, max_parties);
            reports.push_back(gmc.to_json());
            reports.push_back(ggm.to_json());
            os << "GMC: " << gqc::fmt12(gmc.aggregate) << " (argmin cut "
               << gmc.extremal_cut->to_string() << ")\n";
            os << "GGM: " << gqc::fmt12(ggm.aggregate) << "\n";
            write_output(out_path, measure_json ? reports.dump(2) + "\n" : os.str());
        } else if (*bound) {
            std::optional<gqc::DensityMatrix> rho;
            std::optional<gqc::StateVector> witness;
            if (!density_file.empty()) {
                std::ifstream in(density_file);
                if (!in) throw gqc::error("cannot open density file: " + density_file);
                nlohmann::json j;
                in >> j;
                rho = gqc::density_from_json(j);
            } else {
                gqc::StateVector base = resolve_state(bound_src, seed);
                rho = gqc::noisy_state({base, visibility});
                witness = base;
            }
            if (!witness_file.empty()) {
                std::ifstream in(witness_file);
                if (!in) throw gqc::error("cannot open witness file: " + witness_file);
                nlohmann::json j;
                in >> j;
                witness = gqc::state_from_json(j);
            }
            if (!witness) throw gqc::domain_error("a witness state is required with --density");
            nlohmann::json out = nlohmann::json::array();
            for (double q : q_list) {
                auto cert = gqc::lower_bound_multipartite(*rho, *witness, q, max_parties);
                nlohmann::json entry = cert.to_json();
                if (with_roof)
                    entry["roof"] =
                        gqc::mixed_gqc_upper_estimate(*rho, q, roof_ensemble, roof_iterations, seed)
                            .to_json();
                out.push_back(std::move(entry));
            }
            write_output(out_path, out.dump(2) + "\n");
        } else if (*figure) {
            std::string csv;
            switch (figure_id) {
                case 1: csv = gqc::figure1_csv(); break;
                case 2: csv = gqc::figure2_csv(); break;
                case 3: csv = gqc::figure3_csv(); break;
                case 4: csv = gqc::figure4_csv(); break;
                case 5: csv = gqc::figure5_csv(); break;
                case 7: csv = gqc::figure7_csv(); break;
                default: throw gqc::domain_error("unknown figure id (use 1, 2, 3, 4, 5 or 7)");
            }
            write_output(out_path, csv);
        } else if (*sweep) {
            spec.family = gqc::sweep_family_from_name(family_name);
            spec.q_list = q_list;
            spec.seed = seed;
            write_output(out_path, gqc::sweep_csv(spec));
        } else if (*propcheck) {
            auto rep = gqc::run_suite(suite_name, seed, samples, tolerance);
            write_output(out_path, rep.to_text());
            if (!rep.passed()) {
                if (!rep.counterexample.is_null()) {
                    std::ofstream cex(cex_path);
                    cex << rep.counterexample.dump(2) << "\n";
                    std::cerr << "counterexample written to " << cex_path << "\n";
                }
                return 1;
            }
        } else if (*scan) {
            double q = q_list.front();
            auto result = gqc::ordering_scan(gqc::sweep_family_from_name(class_a),
                                             gqc::sweep_family_from_name(class_b), q, scan_steps);
            std::ostringstream os;
            os << "gmc_reversal_pairs: " << result.gmc_reversals.size() << "\n";
            for (std::size_t i = 0; i < std::min<std::size_t>(result.gmc_reversals.size(), 5); ++i)
                os << "  theta_a=" << gqc::fmt12(result.gmc_reversals[i].first)
                   << " theta_b=" << gqc::fmt12(result.gmc_reversals[i].second) << "\n";
            os << "ggm_reversal_pairs: " << result.ggm_reversals.size() << "\n";
            for (std::size_t i = 0; i < std::min<std::size_t>(result.ggm_reversals.size(), 5); ++i)
                os << "  theta_a=" << gqc::fmt12(result.ggm_reversals[i].first)
                   << " theta_b=" << gqc::fmt12(result.ggm_reversals[i].second) << "\n";
            if (fig7) {
                auto f7 = gqc::figure7_scan();
                os << "figure7 gmc_argmin_switches: " << f7.gmc_argmin_switches << "\n";
                os << "figure7 gmc_peak: " << (f7.gmc_peak_found ? "yes" : "no");
                if (f7.gmc_peak_found) os << " theta=" << gqc::fmt12(f7.gmc_peak_theta);
                os << "\n";
                os << "figure7 g3c_smooth: " << (f7.g3c_smooth ? "yes" : "no") << "\n";
                os << "figure7 ggm_collision: " << (f7.ggm_collision_found ? "yes" : "no");
                if (f7.ggm_collision_found)
                    os << " theta_a=" << gqc::fmt12(f7.collision_theta_a)
                       << " theta_b=" << gqc::fmt12(f7.collision_theta_b)
                       << " g3c_gap=" << gqc::fmt12(f7.collision_g3c_gap);
                os << "\n";
            }
            write_output(out_path, os.str());
        }
    } catch (const gqc::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
