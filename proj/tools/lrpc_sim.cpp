// lrpc_sim: Monte-Carlo success-rate experiments for LRPC support recovery.
//
// Exit status: 0 success, 1 I/O error, 2 configuration error,
// 3 resource bound exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrpc/harness.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LRPC error support recovery experiments"};

    lrpc::ExperimentConfig cfg;
    std::uint32_t n = 0;
    int c = 0;
    std::uint32_t t = 0;
    std::string algorithm = "intersect";
    std::string output = "json";
    std::string sweep_param;
    std::vector<std::int64_t> values;
    std::string out_path;

    app.add_option("--q", cfg.q, "Base field size (prime)")->capture_default_str();
    app.add_option("--m", cfg.m, "Extension degree")->capture_default_str();
    auto* n_opt = app.add_option("--n", n, "Code length (default r*d - c + k)");
    app.add_option("--k", cfg.k, "Code dimension")->capture_default_str();
    app.add_option("--r", cfg.r, "Error rank")->capture_default_str();
    app.add_option("--d", cfg.d, "Dual rank weight")->capture_default_str();
    auto* c_opt = app.add_option("--c", c, "Syndrome codimension, n - k = r*d - c (default 1)");
    auto* t_opt = app.add_option("--t", t, "Intersection arity (default q^ceil(log_q(r/c)))");
    app.add_option("--algorithm", algorithm, "basic | multiset | intersect")
        ->check(CLI::IsMember({"basic", "multiset", "intersect"}))
        ->capture_default_str();
    app.add_option("--trials", cfg.trials, "Number of trials")->capture_default_str();
    app.add_option("--seed", cfg.seed, "64-bit experiment seed")->capture_default_str();
    app.add_option("--max-rounds", cfg.max_rounds, "Round budget of the intersection decoder")->capture_default_str();
    app.add_option("--candidate-cap", cfg.candidate_cap, "Bound on multiset entries scanned")->capture_default_str();
    app.add_option("--max-resamples", cfg.max_resamples, "Instance redraws per trial before exclusion")->capture_default_str();
    app.add_flag("--full-decode", cfg.full_decode, "Also recover the error coordinates");
    app.add_flag("--faithful-guard", cfg.strict_guard, "Multiset decoder guard c < d-2 instead of c <= d-2");
    app.add_flag("--verbose", cfg.verbose, "Include per-trial reports in JSON output");
    app.add_option("--output", output, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--parallelism", cfg.parallelism, "Worker threads")->capture_default_str();
    auto* sweep_opt = app.add_option("--sweep", sweep_param, "Parameter to vary: m, c, t, r, d, k, trials");
    app.add_option("--values", values, "Comma-separated values for --sweep")->delimiter(',')->needs(sweep_opt);
    app.add_option("--out", out_path, "Write results to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    if (*n_opt) cfg.n = n;
    if (*c_opt) cfg.c = c;
    if (*t_opt) cfg.t = t;

    try {
        cfg.algorithm = lrpc::parse_algorithm(algorithm);
        std::vector<lrpc::ExperimentSummary> summaries;
        if (*sweep_opt) {
            if (values.empty()) throw lrpc::ConfigError("--sweep needs --values");
            summaries = lrpc::sweep(cfg, sweep_param, values);
        } else {
            summaries.push_back(lrpc::run_experiment(cfg));
        }

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                std::cerr << "error: cannot open " << out_path << " for writing\n";
                return kExitIo;
            }
        }
        std::ostream& os = out_path.empty() ? std::cout : file;
        if (output == "csv") {
            os << lrpc::csv_header() << '\n';
            for (const auto& s : summaries) os << lrpc::csv_row(s) << '\n';
        } else if (summaries.size() == 1 && !*sweep_opt) {
            os << lrpc::to_json(summaries.front()).dump(2) << '\n';
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : summaries) arr.push_back(lrpc::to_json(s));
            os << arr.dump(2) << '\n';
        }
        os.flush();
        if (!os) {
            std::cerr << "error: write failed\n";
            return kExitIo;
        }
    } catch (const lrpc::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    return 0;
}
