#pragma once

// Monte-Carlo harness: planted LRPC instances, one decoder run per trial,
// aggregated success statistics.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrpc/decoders.hpp"
#include "lrpc/lrpc_code.hpp"

namespace lrpc {

inline constexpr std::string_view kSummarySchema = "lrpc-experiment/1";

/// Invalid or inconsistent experiment parameters.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Algorithm { Basic, Multiset, Intersect };
enum class OutputFormat { Json, Csv };

std::string_view to_string(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view name);

struct ExperimentConfig {
    std::uint32_t q = 2;
    std::uint32_t m = 41;
    std::optional<std::uint32_t> n;  // default r*d - c + k
    std::uint32_t k = 1;
    std::uint32_t r = 5;
    std::uint32_t d = 5;
    std::optional<int> c;            // default 1, or implied by n
    std::optional<std::uint32_t> t;  // default q^ceil(log_q(r/c))
    Algorithm algorithm = Algorithm::Intersect;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::uint32_t max_rounds = 4096;
    std::uint64_t candidate_cap = kDefaultEnumerationCap;
    bool full_decode = false;
    bool strict_guard = false;
    bool verbose = false;
    unsigned parallelism = 1;
    /// Instance redraws allowed per trial before the trial is excluded.
    std::uint32_t max_resamples = 1000;
};

/// Fills in n and c and checks n - k = rd - c, rd <= m, r <= min(n, m),
/// 0 < k < n, trials >= 1 and q prime. Throws ConfigError.
ExperimentConfig resolve(const ExperimentConfig& config);

/// A planted instance with dim(A.E) = rd and, when n - k <= rd, dim S = n - k.
struct Instance {
    LrpcCode code;
    RankError error;
    Syndrome syndrome;
    std::uint32_t resamples = 0;
};

/// Draws (code, error) pairs until the instance is non-degenerate. Returns
/// nullopt after more than `max_resamples` redraws.
std::optional<Instance> generate_instance(const FieldPtr& field, std::uint32_t n, std::uint32_t k, std::uint32_t r,
                                          std::uint32_t d, Rng& rng, std::uint32_t max_resamples);

struct TrialReport {
    std::uint64_t trial_index = 0;
    RecoveryStatus status = RecoveryStatus::Failure;
    FailureReason reason = FailureReason::None;
    std::uint32_t iterations = 0;
    std::uint64_t candidates_examined = 0;
    std::uint32_t syndrome_dim = 0;
    int codimension = 0;  // rd - dim S
    bool support_correct = false;
    std::optional<bool> full_decode_correct;
    std::uint32_t resamples = 0;
    bool degenerate = false;  // at least one redraw was needed
    bool excluded = false;    // resample budget exhausted; not counted
    double elapsed_us = 0;
};

struct ExperimentSummary {
    ExperimentConfig config;  // resolved
    std::optional<std::uint32_t> t_effective;
    std::uint64_t trials = 0;
    std::uint64_t counted = 0;
    std::uint64_t successes = 0;
    std::uint64_t wrong_support = 0;
    std::uint64_t failures = 0;
    std::uint64_t excluded = 0;
    std::uint64_t degenerate = 0;  // total redraws over all trials
    std::optional<std::uint64_t> full_decode_successes;
    double success_rate = 0;
    double mean_rounds = 0;
    double wall_ms = 0;
    std::map<std::string, std::uint64_t> failure_reasons;
    ProbabilityEstimate fill_estimate;
    ProbabilityEstimate basic_estimate;
    std::optional<ProbabilityEstimate> stray_estimate;
    std::vector<TrialReport> reports;  // kept only when config.verbose
};

/// Runs one trial on the stream trial_seed(config.seed, trial_index).
/// `config` must be resolved. ResourceError propagates.
TrialReport run_trial(const ExperimentConfig& config, const FieldPtr& field, std::uint64_t trial_index);
TrialReport run_trial(const ExperimentConfig& config, std::uint64_t trial_index);

/// Runs all trials on config.parallelism threads. Counts do not depend on
/// the thread count.
ExperimentSummary run_experiment(const ExperimentConfig& config);

/// One experiment per value of `param` (m, c, t, r, d, k or trials).
std::vector<ExperimentSummary> sweep(const ExperimentConfig& config, std::string_view param,
                                     const std::vector<std::int64_t>& values);

nlohmann::json to_json(const ExperimentSummary& summary);
nlohmann::json to_json(const TrialReport& report);
std::string csv_header();
std::string csv_row(const ExperimentSummary& summary);

}  // namespace lrpc
