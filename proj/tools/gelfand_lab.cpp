// Command-line front end: exact verification suites, seeded Monte Carlo experiments,
// and table/figure export for the Gelfand/Plancherel random-partition laboratory.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <gelfand/asymptotics.hpp>
#include <gelfand/characters.hpp>
#include <gelfand/chisq.hpp>
#include <gelfand/diagram.hpp>
#include <gelfand/ik_algebra.hpp>
#include <gelfand/involutions.hpp>
#include <gelfand/partition.hpp>
#include <gelfand/report.hpp>
#include <gelfand/rng.hpp>
#include <gelfand/sampling.hpp>
#include <gelfand/series.hpp>
#include <gelfand/svg.hpp>
#include <gelfand/transition.hpp>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitStatisticalFailure = 1;
constexpr int kExitExactFailure = 2;
constexpr int kExitUsage = 64;

struct CheckLog {
    int failures = 0;

    void check(bool ok, const std::string& what) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << what << '\n';
        if (!ok) ++failures;
    }
};

std::string version_string() { return std::string("gelfand-lab ") + GELFAND_LAB_VERSION; }

std::string provenance(const std::string& command) {
    return version_string() + "\n" + command;
}

/// Provenance carrying only the run parameters that determine the sampled data, so
/// identical configurations produce bit-identical files regardless of output paths.
std::string sample_provenance(const gelfand::ExperimentConfig& cfg) {
    std::ostringstream os;
    os << version_string() << "\nmeasure=" << gelfand::measure_name(cfg.measure) << " n=" << cfg.n
       << " trials=" << cfg.trials << " seed=" << cfg.seed << " k=";
    for (std::size_t i = 0; i < cfg.ks.size(); ++i) os << (i ? "," : "") << cfg.ks[i];
    os << " grid_step=" << cfg.grid_step;
    return os.str();
}

int default_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("GELFAND_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------- verify suites

int run_verify_exact(int nmax) {
    using namespace gelfand;
    CheckLog log;
    const int nb = std::min(nmax, 8);

    for (int n = 1; n <= nb; ++n) {
        const auto brute = square_root_counts_by_type_brute(n);
        bool ok = true;
        for (const auto& [type, count] : brute) {
            if (square_root_count(type) != count) ok = false;
        }
        log.check(ok, "square-root product formula vs brute force, S_" + std::to_string(n));
    }

    {
        CharacterEvaluator ev;
        for (int n = 1; n <= nb; ++n) {
            bool ok = true;
            const auto shapes = partitions_of(n);
            for (const auto& type : partitions_of(n)) {
                Int trace = 0;
                for (const auto& lambda : shapes) trace += ev.character(lambda, type);
                if (trace != square_root_count(type)) ok = false;
            }
            log.check(ok, "Gelfand trace identity sum_lambda char = #square roots, S_" + std::to_string(n));
        }
    }

    for (int n = 1; n <= 12; ++n) {
        Int sum_dim = 0, sum_dim2 = 0;
        for (const auto& lambda : partitions_of(n)) {
            const Int d = dim_exact(lambda);
            sum_dim += d;
            sum_dim2 += d * d;
        }
        log.check(sum_dim == involution_count(n) && sum_dim2 == factorial(static_cast<unsigned long>(n)),
                  "sum dim = I_n and sum dim^2 = n! at n = " + std::to_string(n));
    }

    {
        InvolutionCounter counter(12);
        CharacterEvaluator ev;
        bool ok = true;
        for (int m = 1; m <= 6; ++m) {
            for (const auto& mu : partitions_of(m)) {
                for (int n = m; n <= 12; ++n) {
                    if (gelfand_expectation_sigma(n, mu, counter) != gelfand_expectation_sigma_direct(n, mu, ev)) {
                        ok = false;
                    }
                }
            }
        }
        log.check(ok, "G_n[Sigma_mu] closed formula vs direct summation, |mu| <= 6, n <= 12");
    }

    {
        bool ok = true;
        for (int n = 0; n <= 10; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                const auto direct = free_cumulants(lambda, 8);
                const auto via_measure = free_cumulants_from_moments(transition_measure(lambda).moments(8));
                if (via_measure[0] != 0) ok = false;
                for (int k = 2; k <= 8; ++k) {
                    if (direct[static_cast<std::size_t>(k - 2)] != via_measure[static_cast<std::size_t>(k - 1)]) ok = false;
                }
            }
        }
        log.check(ok, "free cumulants via Lagrange inversion vs transition-measure moments, |lambda| <= 10");
    }

    std::cout << (log.failures == 0 ? "verify exact: all checks passed\n"
                                    : "verify exact: FAILURES detected\n");
    return log.failures == 0 ? kExitPass : kExitExactFailure;
}

int run_verify_algebra() {
    using namespace gelfand;
    CheckLog log;

    const std::vector<std::pair<int, int>> cases = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}, {4, 4}};
    for (const auto& [k, m] : cases) {
        const SigmaElement power = sigma_power(k, m);
        const bool ok = top_kerov_part(power, k * m) == power_top_formula(k, m) &&
                        power.max_kerov_degree() <= k * m;
        log.check(ok, "top Kerov component of (Sigma_" + std::to_string(k) + ")^" + std::to_string(m) +
                          " matches the closed formula");
        if (k == 4 && m == 4) {
            const auto top = top_kerov_part(power, 16);
            const bool coeffs = top.coefficient(Partition({4, 4, 4, 4})) == 1 &&
                                top.coefficient(Partition({4, 4, 1, 1, 1, 1})) == 24 &&
                                top.coefficient(Partition({1, 1, 1, 1, 1, 1, 1, 1})) == 48;
            log.check(coeffs, "(Sigma_4)^4 top coefficients are 1, 24, 48");
        }
    }

    {
        const SigmaElement prod = sigma_product(SigmaElement::cyclic(2), 3);
        const SigmaElement top = top_kerov_part(prod, 5);
        log.check(top.terms().size() == 1 && top.coefficient(Partition({3, 2})) == 1,
                  "disjoint-parts law: top of Sigma_2 Sigma_3 is Sigma_{3,2}");
    }

    {
        Rng rng(20250531);
        bool ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            const int s = 2 + static_cast<int>(rng.below(3));
            std::vector<int> mult(static_cast<std::size_t>(s), 1);
            int total = s;
            while (total < 8 && rng.unit() < 0.6) {
                ++mult[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(s)))];
                ++total;
            }
            std::map<std::pair<int, int>, Rat> table;
            auto f = [&](int i, int r) {
                auto key = std::make_pair(i, r);
                if (!table.count(key)) {
                    table[key] = make_rat(1 + static_cast<long>(rng.below(400)), 1 + static_cast<long>(rng.below(40)));
                }
                return table[key];
            };
            if (mobius_identity_check(f, mult) != 0) ok = false;
        }
        log.check(ok, "Moebius inversion lemma: 100 randomized exact-rational instances vanish");

        std::map<std::pair<int, int>, Rat> table;
        auto f = [&](int i, int r) {
            auto key = std::make_pair(i, r);
            if (!table.count(key)) table[key] = make_rat(static_cast<long>(3 + 7 * i + 11 * r), 5);
            return table[key];
        };
        log.check(mobius_identity_check(f, {2, 2}) == 0, "Moebius lemma on the sequence (1,1,2,2) vanishes");
    }

    {
        bool ok = true;
        for (int k = 2; k <= 5; ++k) {
            for (int j = 1; j <= 4 && k + j <= 9; ++j) {
                const SigmaElement prod = sigma_product(SigmaElement::cyclic(k), j);
                if (prod.max_kerov_degree() > kerov_degree(Partition({k})) + kerov_degree(Partition({j}))) ok = false;
            }
        }
        log.check(ok, "Kerov degree is a filtration on computed products");
    }

    std::cout << (log.failures == 0 ? "verify algebra: all checks passed\n"
                                    : "verify algebra: FAILURES detected\n");
    return log.failures == 0 ? kExitPass : kExitExactFailure;
}

int run_verify_oracle(int nmax, long long samples, std::uint64_t seed) {
    using namespace gelfand;
    CheckLog log;
    InvolutionCounter counter(std::max(8, nmax));
    const double significance = 1e-3;

    for (int n = 4; n <= std::min(nmax, 6); ++n) {
        Rng rng(seed + static_cast<std::uint64_t>(n));
        std::map<std::vector<int>, long long> counts;
        for (long long i = 0; i < samples; ++i) ++counts[random_involution(n, rng, counter)];
        const double expected = static_cast<double>(samples) / involution_count(n).get_d();
        std::vector<double> obs, exp;
        for (const auto& [inv, c] : counts) {
            obs.push_back(static_cast<double>(c));
            exp.push_back(expected);
        }
        while (obs.size() < static_cast<std::size_t>(involution_count(n).get_ui())) {
            obs.push_back(0.0);
            exp.push_back(expected);
        }
        const auto chi = pearson_chi_squared(obs, exp);
        std::ostringstream what;
        what << "involution sampler uniformity at n = " << n << " (chi2 p = " << chi.pvalue << ")";
        log.check(chi.pvalue > significance, what.str());
    }

    for (int n = 4; n <= std::min(nmax, 6); ++n) {
        Rng rng(seed + 100 + static_cast<std::uint64_t>(n));
        const auto table = measure_table(n, MeasureKind::gelfand);
        std::map<Partition, long long> counts;
        for (long long i = 0; i < samples; ++i) ++counts[rsk_shape(random_involution(n, rng, counter))];
        std::vector<double> obs, exp;
        for (const auto& [lambda, prob] : table.rows) {
            obs.push_back(static_cast<double>(counts[lambda]));
            exp.push_back(prob.get_d() * static_cast<double>(samples));
        }
        const auto chi = pearson_chi_squared(obs, exp);
        std::ostringstream what;
        what << "RSK pushforward matches exact Gelfand measure at n = " << n << " (chi2 p = " << chi.pvalue << ")";
        log.check(chi.pvalue > significance, what.str());
    }

    std::cout << (log.failures == 0 ? "verify oracle: all checks passed\n"
                                    : "verify oracle: FAILURES detected\n");
    return log.failures == 0 ? kExitPass : kExitStatisticalFailure;
}

// ---------------------------------------------------------------- sample command

nlohmann::json stats_to_json(const gelfand::SampleStats& stats) {
    nlohmann::json j;
    const double t = static_cast<double>(stats.count());
    for (const auto& col : stats.columns()) {
        j[col] = {{"mean", stats.mean(col)},
                  {"variance", stats.variance(col)},
                  {"se_mean", std::sqrt(stats.variance(col) / t)}};
    }
    nlohmann::json cov = nlohmann::json::object();
    for (std::size_t i = 0; i < stats.columns().size(); ++i) {
        for (std::size_t k = i + 1; k < stats.columns().size(); ++k) {
            cov[stats.columns()[i] + ":" + stats.columns()[k]] =
                stats.covariance(static_cast<int>(i), static_cast<int>(k));
        }
    }
    j["covariances"] = cov;
    return j;
}

nlohmann::json verdict_to_json(const gelfand::VerdictTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
        rows.push_back({{"observable", r.observable},
                        {"mean", r.empirical_mean},
                        {"variance", r.empirical_variance},
                        {"target_mean", r.target_mean},
                        {"target_variance", r.target_variance},
                        {"se_mean", r.se_mean},
                        {"se_variance", r.se_variance},
                        {"z_mean", r.z_mean},
                        {"z_variance", r.z_variance},
                        {"pass", r.pass}});
    }
    return {{"z_gate", table.z_gate}, {"rows", rows}, {"all_pass", table.all_pass}};
}

int run_sample(const std::string& measure_arg, int n, long long trials, std::uint64_t seed,
               const std::vector<int>& ks, const std::string& out_dir, int threads,
               const std::vector<std::string>& formats, const std::string& command) {
    using namespace gelfand;
    namespace fs = std::filesystem;

    std::vector<MeasureKind> measures;
    if (measure_arg == "both") {
        measures = {MeasureKind::gelfand, MeasureKind::plancherel};
    } else {
        measures = {parse_measure(measure_arg)};
    }

    fs::create_directories(out_dir);
    InvolutionCounter counter(n);

    const bool want_csv = std::find(formats.begin(), formats.end(), "csv") != formats.end();
    const bool want_json = std::find(formats.begin(), formats.end(), "json") != formats.end();
    const bool want_svg = std::find(formats.begin(), formats.end(), "svg") != formats.end();

    std::map<MeasureKind, ExperimentResult> results;
    bool all_pass = true;
    nlohmann::json summary;
    summary["version"] = version_string();
    summary["config"] = {{"command", command}, {"measure", measure_arg}, {"n", n},     {"trials", trials},
                         {"seed", seed},       {"k", ks},                {"threads", threads}};

    for (MeasureKind measure : measures) {
        ExperimentConfig cfg;
        cfg.measure = measure;
        cfg.n = n;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.ks = ks;
        cfg.threads = threads;
        ExperimentResult result = run_experiment(cfg, counter);

        const std::string stem = std::string(measure_name(measure)) + "_n" + std::to_string(n) + "_t" +
                                 std::to_string(trials) + "_s" + std::to_string(seed);
        if (want_csv) {
            std::ofstream os(fs::path(out_dir) / (stem + ".csv"));
            if (!os) throw std::runtime_error("cannot open output CSV in " + out_dir);
            write_raw_csv(os, result, cfg, sample_provenance(cfg));
        }
        if (want_svg) {
            std::ofstream os(fs::path(out_dir) / (stem + ".svg"));
            if (!os) throw std::runtime_error("cannot open output SVG in " + out_dir);
            write_profile_overlay_svg(os, rescale(result.final_shape, static_cast<double>(n)), n,
                                      sample_provenance(cfg));
        }

        std::cout << "== " << measure_name(measure) << " n=" << n << " trials=" << trials << " seed=" << seed
                  << " ==\n";
        nlohmann::json entry = {{"stats", stats_to_json(result.stats)}};
        if (trials >= 100) {
            std::vector<int> upsilons;
            for (int k = 2; k <= 5; ++k) upsilons.push_back(k);
            const auto targets = clt_targets(measure, ks, upsilons);
            const VerdictTable verdict = clt_report(result.stats, targets);
            print_verdict_table(std::cout, verdict);
            all_pass = all_pass && verdict.all_pass;
            entry["verdicts"] = verdict_to_json(verdict);
        } else {
            std::cout << "(fewer than 100 trials: CLT verdicts skipped)\n";
        }
        summary[measure_name(measure)] = std::move(entry);
        results.emplace(measure, std::move(result));
    }

    if (results.size() == 2) {
        const double ratio = variance_ratio(results.at(MeasureKind::gelfand).stats,
                                            results.at(MeasureKind::plancherel).stats, "X2");
        summary["variance_ratio"] = {{"observable", "X2"},
                                     {"gelfand_over_plancherel", ratio},
                                     {"target", 2.0},
                                     {"band", {1.6, 2.4}}};
        std::cout << "variance ratio gelfand/plancherel for X2: " << ratio << " (target 2)\n";
        all_pass = all_pass && ratio >= 1.6 && ratio <= 2.4;
    }

    if (want_json) {
        std::ofstream os(fs::path(out_dir) / ("summary_n" + std::to_string(n) + "_s" + std::to_string(seed) + ".json"));
        if (!os) throw std::runtime_error("cannot open summary JSON in " + out_dir);
        os << summary.dump(2) << '\n';
    }

    return all_pass ? kExitPass : kExitStatisticalFailure;
}

// ---------------------------------------------------------------- table command

int run_table(const std::string& what, int n, int nmax, const std::string& measure_arg,
              const std::string& mu_arg, std::ostream& os, const std::string& command) {
    using namespace gelfand;
    {
        std::istringstream lines(provenance(command));
        std::string line;
        while (std::getline(lines, line)) os << "# " << line << '\n';
    }
    if (what == "involutions") {
        os << "n,I_n\n";
        InvolutionCounter counter(nmax);
        for (int i = 0; i <= nmax; ++i) os << i << ',' << counter.exact(i).get_str() << '\n';
        return kExitPass;
    }
    if (what == "measure") {
        const auto table = measure_table(n, parse_measure(measure_arg));
        os << "partition,numerator,denominator\n";
        for (const auto& [lambda, prob] : table.rows) {
            os << '"' << lambda.to_string() << "\"," << prob.get_num().get_str() << ','
               << prob.get_den().get_str() << '\n';
        }
        return kExitPass;
    }
    if (what == "expectation") {
        const Partition mu = parse_partition(mu_arg);
        InvolutionCounter counter(nmax);
        os << "mu,n,numerator,denominator\n";
        for (int i = static_cast<int>(mu.size()); i <= nmax; ++i) {
            const Rat e = gelfand_expectation_sigma(i, mu, counter);
            os << '"' << mu.to_string() << "\"," << i << ',' << e.get_num().get_str() << ','
               << e.get_den().get_str() << '\n';
        }
        return kExitPass;
    }
    if (what == "squareroots") {
        if (n > 8) throw std::invalid_argument("table squareroots: oracle fixtures are capped at n = 8");
        os << "cycle_type,count\n";
        for (const auto& [type, count] : square_root_counts_by_type_brute(n)) {
            os << '"' << type.to_string() << "\"," << count.get_str() << '\n';
        }
        return kExitPass;
    }
    throw std::invalid_argument("unknown table kind: " + what);
}

int run_power(int k, int m, std::ostream& os) {
    using namespace gelfand;
    const SigmaElement power = sigma_power(k, m);
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, value] : power.serialized()) j[key] = value;
    os << j.dump(2) << '\n';
    return kExitPass;
}

int run_profile(const std::string& lambda_arg, double t, std::ostream& os) {
    using namespace gelfand;
    const Partition lambda = parse_partition(lambda_arg);
    const double scale = (t > 0.0) ? t : static_cast<double>(std::max<long long>(1, lambda.size()));
    write_profile_csv(os, rescale(lambda, scale));
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("Gelfand/Plancherel random-partition laboratory (") + version_string() + ")"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run exact/algebraic/statistical verification suites");
    std::string suite = "exact";
    int verify_nmax = 8;
    long long oracle_samples = 100000;
    std::uint64_t verify_seed = 424243;
    verify->add_option("suite", suite, "exact | algebra | oracle")->required();
    verify->add_option("--nmax", verify_nmax, "largest symmetric group size for the suite");
    verify->add_option("--samples", oracle_samples, "Monte Carlo samples for the oracle suite");
    verify->add_option("--seed", verify_seed, "seed for the oracle suite");

    // sample
    auto* sample = app.add_subcommand("sample", "run a seeded Monte Carlo experiment and export results");
    std::string measure = "gelfand";
    int n = 500;
    long long trials = 200;
    std::uint64_t seed = 1;
    std::string ks_arg = "2,3,4,5";
    std::string out_dir = "out";
    int threads_flag = 0;
    std::string format_arg = "csv,json,svg";
    sample->add_option("--measure", measure, "gelfand | plancherel | both")->default_val(measure);
    sample->add_option("--n", n, "partition size")->default_val(n);
    sample->add_option("--trials", trials, "number of Monte Carlo trials")->default_val(trials);
    sample->add_option("--seed", seed, "RNG seed (identical seeds give identical outputs)")->default_val(seed);
    sample->add_option("--k", ks_arg, "comma-separated cycle lengths for X_k")->default_val(ks_arg);
    sample->add_option("--out", out_dir, "output directory")->default_val(out_dir);
    sample->add_option("--threads", threads_flag, "worker threads (default: GELFAND_LAB_THREADS or hardware)");
    sample->add_option("--format", format_arg, "comma-separated subset of csv,json,svg")->default_val(format_arg);

    // table
    auto* table = app.add_subcommand("table", "emit exact tables as CSV (or JSON for Sigma-element output)");
    std::string table_what;
    int table_n = 6;
    int table_nmax = 10;
    std::string table_measure = "gelfand";
    std::string table_mu = "2";
    std::string table_lambda = "[2,1]";
    double table_t = 0.0;
    int table_k = 2, table_m = 2;
    std::string table_out;
    table->add_option("what", table_what, "involutions | measure | expectation | squareroots | power | profile")
        ->required();
    table->add_option("--n", table_n, "size for measure/squareroot tables")->default_val(table_n);
    table->add_option("--nmax", table_nmax, "largest n for involutions/expectation tables")->default_val(table_nmax);
    table->add_option("--measure", table_measure, "gelfand | plancherel")->default_val(table_measure);
    table->add_option("--mu", table_mu, "index partition, e.g. 2,2")->default_val(table_mu);
    table->add_option("--lambda", table_lambda, "partition for profile export, e.g. [7,6,4,4,3,1]")
        ->default_val(table_lambda);
    table->add_option("--t", table_t, "profile rescaling parameter (default: |lambda|)");
    table->add_option("--k", table_k, "cycle length for power tables")->default_val(table_k);
    table->add_option("--m", table_m, "exponent for power tables")->default_val(table_m);
    table->add_option("--out", table_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];

    try {
        if (verify->parsed()) {
            if (suite == "exact") return run_verify_exact(verify_nmax);
            if (suite == "algebra") return run_verify_algebra();
            if (suite == "oracle") return run_verify_oracle(std::min(verify_nmax, 6), oracle_samples, verify_seed);
            std::cerr << "unknown verify suite: " << suite << '\n';
            return kExitUsage;
        }
        if (sample->parsed()) {
            std::vector<int> ks;
            std::istringstream is(ks_arg);
            std::string tok;
            while (std::getline(is, tok, ',')) ks.push_back(std::stoi(tok));
            std::vector<std::string> formats;
            std::istringstream fs_(format_arg);
            while (std::getline(fs_, tok, ',')) formats.push_back(tok);
            return run_sample(measure, n, trials, seed, ks, out_dir, default_threads(threads_flag), formats,
                              cmd.str());
        }
        if (table->parsed()) {
            std::ofstream file;
            if (!table_out.empty()) {
                file.open(table_out);
                if (!file) throw std::runtime_error("cannot open " + table_out);
            }
            std::ostream& os = table_out.empty() ? std::cout : file;
            if (table_what == "power") return run_power(table_k, table_m, os);
            if (table_what == "profile") return run_profile(table_lambda, table_t, os);
            return run_table(table_what, table_n, table_nmax, table_measure, table_mu, os, cmd.str());
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitExactFailure;
    }
    return kExitUsage;
}
