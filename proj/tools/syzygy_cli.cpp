// Command-line front end: construct varieties, compute Betti tables, run the
// Grassmannian cohomology sweep and the closed-form checks, and run the full
// acceptance suite.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "syzygy/bwb.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/numerology.hpp"
#include "syzygy/selftest.hpp"
#include "syzygy/varieties.hpp"

namespace {

using namespace syzygy;

struct RunConfig {
    std::uint64_t prime = PrimeField::kDefaultPrime;
    std::uint64_t seed = 0;
    int max_p = -1;  // -1: derive from the variety
    int max_q = 2;
    std::string format = "pretty";
    std::size_t entry_budget = 50'000'000;
    int crosscheck_primes = 0;
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--prime", cfg.prime, "prime modulus");
    cmd->add_option("--seed", cfg.seed, "PRNG seed (SYZYGY_SEED overrides)");
    cmd->add_option("--max-p", cfg.max_p, "largest p in the table");
    cmd->add_option("--max-q", cfg.max_q, "largest q in the table");
    cmd->add_option("--format", cfg.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--entry-budget", cfg.entry_budget, "max entries per differential");
    cmd->add_option("--crosscheck-primes", cfg.crosscheck_primes,
                    "extra primes for table agreement");
}

void apply_env_seed(RunConfig& cfg) {
    if (const char* e = std::getenv("SYZYGY_SEED")) cfg.seed = std::strtoull(e, nullptr, 10);
}

// Reseed-on-degeneracy policy: 3 attempts with seed, seed+1, seed+2.
template <class Fn>
auto with_reseed(VarietySpec spec, Fn&& fn) {
    for (int attempt = 0;; ++attempt) {
        try {
            return fn(spec);
        } catch (const DegenerateSample& e) {
            if (attempt >= 2) {
                std::cerr << "error: " << e.what() << " (after 3 seeds)\n";
                std::exit(2);
            }
            std::cerr << "warning: " << e.what() << "; retrying with seed " << spec.seed + 1
                      << "\n";
            ++spec.seed;
        } catch (const ResourceLimit& e) {
            std::cerr << "error: " << e.what() << "\n";
            std::exit(3);
        }
    }
}

int default_max_p(const VarietySpec& spec) {
    if (spec.constructor == "rnc") return spec.params.at("n");
    if (spec.constructor == "canonical") return spec.params.at("g") - 1;
    return 5;
}

void print_table(const BettiTable& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << betti_to_json(t).dump(2) << "\n";
    } else if (format == "csv") {
        os << betti_to_csv(t);
    } else {
        int max_p = 0, max_q = 0;
        for (const auto& [pq, _] : t.entries) {
            max_p = std::max(max_p, pq.first);
            max_q = std::max(max_q, pq.second);
        }
        os << "betti table for " << t.variety_id << " (prime " << t.prime << ", seed "
           << t.seed << ")\n      ";
        for (int p = 0; p <= max_p; ++p) os << "p=" << p << "\t";
        os << "\n";
        for (int q = 0; q <= max_q; ++q) {
            os << "q=" << q << "   ";
            for (int p = 0; p <= max_p; ++p) {
                if (t.has(p, q))
                    os << t.at(p, q) << "\t";
                else
                    os << ".\t";
            }
            os << "\n";
        }
    }
}

int cmd_betti(const VarietySpec& spec_in, const RunConfig& cfg) {
    VarietySpec spec = spec_in;
    spec.prime = cfg.prime;
    int max_p = cfg.max_p >= 0 ? cfg.max_p : default_max_p(spec);
    BettiTable t = with_reseed(spec, [&](const VarietySpec& s) {
        if (cfg.crosscheck_primes > 0)
            return betti_crosschecked(s, max_p, cfg.max_q, cfg.crosscheck_primes,
                                      cfg.entry_budget);
        return betti_for_spec(s, max_p, cfg.max_q, cfg.entry_budget);
    });
    print_table(t, cfg.format, std::cout);
    return 0;
}

int known_clifford_index(int g) {
    // plane quartic, CI(2,3), three quadrics, plane quintic
    switch (g) {
    case 3: return 1;
    case 4: return 1;
    case 5: return 2;
    case 6: return 1;
    }
    throw std::invalid_argument("no Clifford index on record for g=" + std::to_string(g));
}

int cmd_green_check(int g, const RunConfig& cfg) {
    VarietySpec spec;
    spec.constructor = "canonical";
    spec.params["g"] = g;
    spec.seed = cfg.seed;
    spec.prime = cfg.prime;
    int cliff = known_clifford_index(g);
    BettiTable t = with_reseed(spec, [&](const VarietySpec& s) {
        return betti_for_spec(s, g - 2, 1, cfg.entry_budget);
    });
    bool all_ok = true;
    std::cout << "green-check g=" << g << " cliff=" << cliff << "\n";
    for (const auto& row : green_prediction(g, cliff)) {
        int dim = t.at(row.p, 1);
        bool ok = true;
        switch (row.expected) {
        case SyzygyPrediction::Zero:
        case SyzygyPrediction::ConjecturedZero:
            ok = dim == 0;
            break;
        case SyzygyPrediction::Nonzero:
            ok = dim != 0;
            break;
        case SyzygyPrediction::Unknown:
            break;
        }
        all_ok = all_ok && ok;
        std::cout << "  K_{" << row.p << ",1} = " << dim << "  predicted "
                  << prediction_name(row.expected) << "  " << (ok ? "ok" : "MISMATCH")
                  << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_bwb(int k, bool sweep, std::optional<int> q, std::optional<int> qp) {
    if (sweep) {
        auto rows = verify_appendix(k);
        std::cout << appendix_csv(rows);
        return 0;
    }
    if (!q || !qp) {
        std::cerr << "error: --q and --qp required without --sweep\n";
        return 1;
    }
    CohomologyResult c = bott(appendix_weight(k, *q, *qp));
    std::cout << "k,q,q',degree,dimension\n"
              << k << "," << *q << "," << *qp << ","
              << (c.zero() ? -1 : *c.nonzero_degree) << "," << c.dimension << "\n";
    return 0;
}

int cmd_numerology(std::optional<int> lm_k, std::optional<int> gon_g,
                   std::optional<int> cor2_gmax, std::optional<int> green_g,
                   std::optional<int> green_cliff) {
    nlohmann::ordered_json j;
    if (lm_k) {
        LMInvariants inv = lm_chi(*lm_k);
        j["lm_chi"] = {{"k", inv.k}, {"c1_sq", inv.c1_sq}, {"c2", inv.c2}, {"chi", inv.chi}};
    }
    if (gon_g) j["generic_gonality"] = {{"g", *gon_g}, {"gon", generic_gonality(*gon_g)}};
    if (cor2_gmax) {
        Cor2Report rep = corollary2_range(*cor2_gmax);
        j["corollary2_range"] = {{"g_max", rep.g_max},
                                 {"pairs_in_range", rep.pairs_in_range},
                                 {"pass", rep.pass}};
    }
    if (green_g) {
        int cliff = green_cliff ? *green_cliff : known_clifford_index(*green_g);
        auto rows = green_prediction(*green_g, cliff);
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"p", r.p}, {"expected", prediction_name(r.expected)}});
        j["green_prediction"] = {{"g", *green_g}, {"cliff", cliff}, {"positions", arr}};
    }
    if (j.empty()) {
        std::cerr << "error: no numerology query given\n";
        return 1;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_selftest() {
    auto results = run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all criteria passed\n" : "FAILURES present\n");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Koszul cohomology and Grassmannian cohomology toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;

    // betti
    auto* betti = app.add_subcommand("betti", "Betti table of a variety");
    std::string ctor;
    int opt_n = 3, opt_g = 4;
    int slice_var = -1;
    std::string spec_file;
    betti->add_option("--constructor", ctor, "rnc|canonical|quartic_P3|ci23_P4|ci222_P5");
    betti->add_option("--n", opt_n, "degree for rnc");
    betti->add_option("--g", opt_g, "genus for canonical");
    betti->add_option("--slice", slice_var, "hyperplane-section a K3 at this variable");
    betti->add_option("--spec", spec_file, "read a VarietySpec JSON file");
    add_common_flags(betti, cfg);

    // green-check
    auto* green = app.add_subcommand("green-check", "predicted vs computed syzygy positions");
    int check_g = 4;
    green->add_option("--g", check_g, "genus (3..6)")->required();
    add_common_flags(green, cfg);

    // bwb
    auto* bwbc = app.add_subcommand("bwb", "Grassmannian bundle cohomology");
    int bwb_k = 2;
    bool bwb_sweep = false;
    std::optional<int> bwb_q, bwb_qp;
    bwbc->add_option("--k", bwb_k, "k (Grassmannian G(2, k+2))")->required();
    bwbc->add_flag("--sweep", bwb_sweep, "full q, q' sweep up to this k with assertions");
    bwbc->add_option("--q", bwb_q, "twist exponent q");
    bwbc->add_option("--qp", bwb_qp, "symmetric power q'");

    // numerology
    auto* num = app.add_subcommand("numerology", "closed-form checks, JSON output");
    std::optional<int> lm_k, gon_g, cor2_gmax, green_g, green_cliff;
    num->add_option("--lm-chi", lm_k, "chi of the rank-2 K3 bundle at k");
    num->add_option("--gonality", gon_g, "generic gonality at genus g");
    num->add_option("--corollary2", cor2_gmax, "genus/gonality range check up to g_max");
    num->add_option("--green-g", green_g, "syzygy prediction: genus");
    num->add_option("--green-cliff", green_cliff, "syzygy prediction: Clifford index");

    // selftest
    app.add_subcommand("selftest", "run every acceptance criterion");

    CLI11_PARSE(app, argc, argv);
    apply_env_seed(cfg);

    try {
        if (betti->parsed()) {
            VarietySpec spec;
            if (!spec_file.empty()) {
                std::ifstream in(spec_file);
                if (!in) {
                    std::cerr << "error: cannot open " << spec_file << "\n";
                    return 1;
                }
                nlohmann::json j;
                in >> j;
                spec = variety_from_json(j);
                cfg.prime = spec.prime;
                cfg.seed = spec.seed;
            } else {
                if (ctor.empty()) {
                    std::cerr << "error: --constructor or --spec required\n";
                    return 1;
                }
                spec.constructor = ctor;
                if (ctor == "rnc") spec.params["n"] = opt_n;
                if (ctor == "canonical") spec.params["g"] = opt_g;
                if (slice_var >= 0) spec.params["slice_var"] = slice_var;
            }
            spec.seed = cfg.seed;
            return cmd_betti(spec, cfg);
        }
        if (green->parsed()) return cmd_green_check(check_g, cfg);
        if (bwbc->parsed()) return cmd_bwb(bwb_k, bwb_sweep, bwb_q, bwb_qp);
        if (num->parsed()) return cmd_numerology(lm_k, gon_g, cor2_gmax, green_g, green_cliff);
        return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
