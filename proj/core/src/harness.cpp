#include "lrpc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

namespace lrpc {

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
        case Algorithm::Basic: return "basic";
        case Algorithm::Multiset: return "multiset";
        case Algorithm::Intersect: return "intersect";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "basic") return Algorithm::Basic;
    if (name == "multiset") return Algorithm::Multiset;
    if (name == "intersect") return Algorithm::Intersect;
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (basic, multiset, intersect)");
}

ExperimentConfig resolve(const ExperimentConfig& config) {
    ExperimentConfig out = config;
    if (!is_prime(out.q) || out.q > kMaxBaseField) throw ConfigError("q must be a prime below 2^16");
    if (out.m == 0 || out.m > kMaxExtensionDegree) throw ConfigError("m must lie in [1, 1024]");
    if (out.d == 0) throw ConfigError("d must be positive");
    if (out.k == 0) throw ConfigError("k must be positive");
    if (out.trials == 0) throw ConfigError("trials must be at least 1");
    if (out.parallelism == 0) throw ConfigError("parallelism must be at least 1");
    const long long rd = static_cast<long long>(out.r) * out.d;
    if (rd > out.m) throw ConfigError("r*d must not exceed m");

    if (out.n && out.c) {
        if (static_cast<long long>(*out.n) - out.k != rd - *out.c) throw ConfigError("inconsistent n, k, c: need n - k = r*d - c");
    } else if (out.n) {
        out.c = static_cast<int>(rd - (static_cast<long long>(*out.n) - out.k));
    } else {
        if (!out.c) out.c = 1;
        const long long n = rd - *out.c + out.k;
        if (n <= static_cast<long long>(out.k)) throw ConfigError("r*d - c must be positive");
        out.n = static_cast<std::uint32_t>(n);
    }
    if (*out.n <= out.k) throw ConfigError("need k < n");
    if (out.r > *out.n) throw ConfigError("r must not exceed n");
    if (out.t && *out.t == 0) throw ConfigError("t must be positive");
    return out;
}

std::optional<Instance> generate_instance(const FieldPtr& field, std::uint32_t n, std::uint32_t k, std::uint32_t r,
                                          std::uint32_t d, Rng& rng, std::uint32_t max_resamples) {
    const std::uint32_t rd = r * d;
    const std::uint32_t redundancy = n - k;
    for (std::uint32_t resamples = 0; resamples <= max_resamples; ++resamples) {
        LrpcCode code = gen_code(field, n, k, d, rng);
        RankError error = gen_error(field, n, r, rng);
        if (product_space(code.support, error.support).dim() != rd) continue;
        Syndrome syn = syndrome(code, error.e);
        // Only in the n - k <= rd regime is a full-rank syndrome expected.
        if (redundancy <= rd && syn.support.dim() != redundancy) continue;
        return Instance{std::move(code), std::move(error), std::move(syn), resamples};
    }
    return std::nullopt;
}

namespace {

std::optional<std::uint32_t> effective_t(const ExperimentConfig& cfg) {
    if (cfg.t) return cfg.t;
    if (cfg.algorithm != Algorithm::Intersect || *cfg.c <= 0) return std::nullopt;
    return static_cast<std::uint32_t>(default_intersection_arity(cfg.q, cfg.r, static_cast<std::uint32_t>(*cfg.c)));
}

}  // namespace

TrialReport run_trial(const ExperimentConfig& cfg, const FieldPtr& field, std::uint64_t trial_index) {
    const auto start = std::chrono::steady_clock::now();
    TrialReport report;
    report.trial_index = trial_index;
    Rng rng(trial_seed(cfg.seed, trial_index));

    auto instance = generate_instance(field, *cfg.n, cfg.k, cfg.r, cfg.d, rng, cfg.max_resamples);
    if (!instance) {
        report.excluded = true;
        report.degenerate = true;
        report.resamples = cfg.max_resamples + 1;
        return report;
    }
    report.resamples = instance->resamples;
    report.degenerate = instance->resamples > 0;

    const Subspace& s = instance->syndrome.support;
    const Subspace& a = instance->code.support;
    report.syndrome_dim = s.dim();
    report.codimension = static_cast<int>(cfg.r * cfg.d) - static_cast<int>(s.dim());

    RecoveryOutcome outcome;
    try {
        switch (cfg.algorithm) {
            case Algorithm::Basic: outcome = basic_recover(s, a, cfg.r); break;
            case Algorithm::Multiset: {
                MultisetOptions opts;
                opts.strict_guard = cfg.strict_guard;
                opts.candidate_cap = cfg.candidate_cap;
                outcome = multiset_recover(s, a, cfg.r, cfg.d, report.codimension, opts);
                break;
            }
            case Algorithm::Intersect: {
                IntersectOptions opts;
                opts.t = cfg.t;
                opts.max_rounds = cfg.max_rounds;
                outcome = intersect_recover(s, a, cfg.r, cfg.d, report.codimension, opts, rng);
                break;
            }
        }
    } catch (const ResourceError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    outcome = classify(std::move(outcome), instance->error.support);
    report.status = outcome.status;
    report.reason = outcome.reason;
    report.iterations = outcome.iterations;
    report.candidates_examined = outcome.candidates_examined;
    report.support_correct = outcome.status == RecoveryStatus::Success;

    if (cfg.full_decode) {
        bool ok = false;
        if (report.support_correct) {
            const auto solved = recover_coordinates(instance->code, instance->syndrome, *outcome.support);
            ok = solved.status == CoordinateStatus::Unique && solved.error->e == instance->error.e;
        }
        report.full_decode_correct = ok;
    }
    report.elapsed_us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
    return report;
}

TrialReport run_trial(const ExperimentConfig& config, std::uint64_t trial_index) {
    const ExperimentConfig cfg = resolve(config);
    return run_trial(cfg, Field::make(cfg.q, cfg.m), trial_index);
}

ExperimentSummary run_experiment(const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const ExperimentConfig cfg = resolve(config);
    const FieldPtr field = Field::make(cfg.q, cfg.m);

    std::vector<TrialReport> reports(cfg.trials);
    std::vector<std::exception_ptr> errors(cfg.trials);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < cfg.trials; i = next++) {
            try {
                reports[i] = run_trial(cfg, field, i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(cfg.parallelism, cfg.trials));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    }
    // Report the lowest-index error so the outcome is schedule independent.
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    ExperimentSummary sum;
    sum.config = cfg;
    sum.t_effective = effective_t(cfg);
    sum.trials = cfg.trials;
    std::uint64_t rounds = 0;
    std::uint64_t decoded = 0;
    for (const auto& rep : reports) {
        sum.degenerate += rep.resamples;
        if (rep.excluded) {
            ++sum.excluded;
            continue;
        }
        ++sum.counted;
        rounds += rep.iterations;
        switch (rep.status) {
            case RecoveryStatus::Success: ++sum.successes; break;
            case RecoveryStatus::WrongSupport:
                ++sum.wrong_support;
                ++sum.failure_reasons["wrong_support"];
                break;
            case RecoveryStatus::Failure:
                ++sum.failures;
                ++sum.failure_reasons[std::string(to_string(rep.reason))];
                break;
        }
        if (rep.full_decode_correct.value_or(false)) ++decoded;
    }
    if (cfg.full_decode) sum.full_decode_successes = decoded;
    if (sum.counted) {
        sum.success_rate = static_cast<double>(sum.successes) / static_cast<double>(sum.counted);
        sum.mean_rounds = static_cast<double>(rounds) / static_cast<double>(sum.counted);
    }
    sum.fill_estimate = estimate_syndrome_fill(cfg.q, cfg.r, cfg.d, *cfg.n, cfg.k);
    sum.basic_estimate = estimate_basic_intersect(cfg.q, cfg.m, cfg.r, cfg.d);
    if (sum.t_effective) sum.stray_estimate = estimate_stray(cfg.q, cfg.m, cfg.r, cfg.d, *cfg.c, *sum.t_effective);
    if (cfg.verbose) sum.reports = std::move(reports);
    sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return sum;
}

std::vector<ExperimentSummary> sweep(const ExperimentConfig& config, std::string_view param,
                                     const std::vector<std::int64_t>& values) {
    static constexpr std::string_view kParams[] = {"m", "c", "t", "r", "d", "k", "trials"};
    if (std::find(std::begin(kParams), std::end(kParams), param) == std::end(kParams))
        throw ConfigError("cannot sweep over '" + std::string(param) + "' (m, c, t, r, d, k, trials)");
    const ExperimentConfig base = resolve(config);
    std::vector<ExperimentSummary> out;
    for (const std::int64_t v : values) {
        if (v < 0 && param != "c") throw ConfigError("sweep value must be non-negative");
        ExperimentConfig cfg = base;
        const auto u = static_cast<std::uint32_t>(v);
        if (param == "m") cfg.m = u;
        else if (param == "t") cfg.t = u;
        else if (param == "trials") cfg.trials = static_cast<std::uint64_t>(v);
        else {
            if (param == "c") cfg.c = static_cast<int>(v);
            else if (param == "r") cfg.r = u;
            else if (param == "d") cfg.d = u;
            else cfg.k = u;
            cfg.n.reset();  // re-derive n = rd - c + k
        }
        out.push_back(run_experiment(cfg));
    }
    return out;
}

namespace {

nlohmann::json estimate_json(const ProbabilityEstimate& e) {
    return {{"log_q_failure", e.log_q_failure}, {"value", e.value}, {"vacuous", e.vacuous()}};
}

}  // namespace

nlohmann::json to_json(const TrialReport& r) {
    nlohmann::json j = {
        {"trial_index", r.trial_index},
        {"status", to_string(r.status)},
        {"reason", to_string(r.reason)},
        {"iterations", r.iterations},
        {"candidates_examined", r.candidates_examined},
        {"syndrome_dim", r.syndrome_dim},
        {"codimension", r.codimension},
        {"support_correct", r.support_correct},
        {"resamples", r.resamples},
        {"degenerate", r.degenerate},
        {"excluded", r.excluded},
        {"elapsed_us", r.elapsed_us},
    };
    if (r.full_decode_correct) j["full_decode_correct"] = *r.full_decode_correct;
    return j;
}

nlohmann::json to_json(const ExperimentSummary& s) {
    const auto& c = s.config;
    nlohmann::json j = {
        {"schema", kSummarySchema},
        {"config",
         {{"q", c.q},
          {"m", c.m},
          {"n", *c.n},
          {"k", c.k},
          {"r", c.r},
          {"d", c.d},
          {"c", *c.c},
          {"t", s.t_effective ? nlohmann::json(*s.t_effective) : nlohmann::json(nullptr)},
          {"algorithm", to_string(c.algorithm)},
          {"trials", c.trials},
          {"seed", c.seed},
          {"max_rounds", c.max_rounds},
          {"candidate_cap", c.candidate_cap},
          {"full_decode", c.full_decode},
          {"strict_guard", c.strict_guard},
          {"parallelism", c.parallelism}}},
        {"counted", s.counted},
        {"successes", s.successes},
        {"wrong_support", s.wrong_support},
        {"failures", s.failures},
        {"excluded", s.excluded},
        {"degenerate", s.degenerate},
        {"success_rate", {{"numerator", s.successes}, {"denominator", s.counted}, {"value", s.success_rate}}},
        {"mean_rounds", s.mean_rounds},
        {"failure_reasons", s.failure_reasons},
        {"estimates",
         {{"syndrome_fill", estimate_json(s.fill_estimate)},
          {"basic_intersect", estimate_json(s.basic_estimate)},
          {"stray", s.stray_estimate ? estimate_json(*s.stray_estimate) : nlohmann::json(nullptr)}}},
        {"wall_ms", s.wall_ms},
    };
    if (s.full_decode_successes) j["full_decode_successes"] = *s.full_decode_successes;
    if (c.verbose) {
        nlohmann::json trials = nlohmann::json::array();
        for (const auto& r : s.reports) trials.push_back(to_json(r));
        j["trials_detail"] = std::move(trials);
    }
    return j;
}

std::string csv_header() { return "q,m,n,k,r,d,c,t,algorithm,trials,successes,degenerate,success_rate,mean_rounds,seed,wall_ms"; }

std::string csv_row(const ExperimentSummary& s) {
    const auto& c = s.config;
    std::ostringstream os;
    os << c.q << ',' << c.m << ',' << *c.n << ',' << c.k << ',' << c.r << ',' << c.d << ',' << *c.c << ',';
    if (s.t_effective) os << *s.t_effective;
    os << ',' << to_string(c.algorithm) << ',' << s.trials << ',' << s.successes << ',' << s.degenerate << ','
       << std::fixed << std::setprecision(6) << s.success_rate << ',' << std::setprecision(4) << s.mean_rounds << ','
       << c.seed << ',' << std::setprecision(1) << s.wall_ms;
    return os.str();
}

}  // namespace lrpc
