// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "lrpc/decoders.hpp"
#include "lrpc/harness.hpp"
#include "oracles.hpp"

using namespace lrpc;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr std::uint64_t kRowTrials = 1000;

struct ReferenceRow {
    std::uint32_t r, d;
    int c;
    std::uint32_t m;
    double lo, hi;  // accepted success-rate interval
};

// Rows reported at 100% accept >= 0.997; the others accept the reported
// rate plus or minus the stated band. Full decode runs on the first row.
constexpr ReferenceRow kRows[] = {
    {5, 5, 1, 41, 0.997, 1.0},         {5, 6, 1, 47, 0.997, 1.0},         {5, 5, 2, 43, 0.997, 1.0},
    {5, 6, 2, 49, 0.997, 1.0},         {5, 5, 1, 40, 0.999 - 0.004, 1.0}, {5, 6, 1, 46, 0.994 - 0.008, 1.0},
    {5, 5, 2, 42, 0.999 - 0.004, 1.0}, {5, 6, 2, 48, 0.999 - 0.004, 1.0},
};

constexpr double kBasicFloor = 0.85;
constexpr std::uint64_t kOracleInstances = 100;
constexpr std::uint64_t kBoundInstances = 1000;
constexpr std::uint64_t kContainmentInstances = 500;
constexpr std::uint64_t kIdentityPairs = 10000;

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Planted {
    Subspace a, e, s;
    int c;
};

Planted plant(const FieldPtr& f, std::uint32_t r, std::uint32_t d, int c, Rng& rng) {
    const auto n = static_cast<std::uint32_t>(static_cast<int>(r * d) - c + 1);
    for (;;) {
        auto inst = generate_instance(f, n, 1, r, d, rng, 1000);
        if (!inst) continue;
        const int actual = static_cast<int>(r * d) - static_cast<int>(inst->syndrome.support.dim());
        return {inst->code.support, inst->error.support, inst->syndrome.support, actual};
    }
}

ExperimentSummary table_row(const ReferenceRow& row, bool full_decode) {
    ExperimentConfig cfg;
    cfg.q = 2;
    cfg.k = 1;
    cfg.t = 4;
    cfg.r = row.r;
    cfg.d = row.d;
    cfg.c = row.c;
    cfg.m = row.m;
    cfg.trials = kRowTrials;
    cfg.seed = kSeed;
    cfg.full_decode = full_decode;
    cfg.parallelism = workers();
    return run_experiment(cfg);
}

std::uint64_t first_row_successes = 0, first_row_decoded = 0;

void table_reproduction() {
    bool all = true;
    std::string detail;
    for (std::size_t i = 0; i < std::size(kRows); ++i) {
        const auto& row = kRows[i];
        const auto sum = table_row(row, i == 0);
        const bool ok = sum.success_rate >= row.lo - 1e-12 && sum.success_rate <= row.hi + 1e-12 && sum.excluded == 0;
        all = all && ok;
        detail += fmt("%s(d=%u,c=%d,m=%u) %llu/%llu=%.3f in [%.3f,%.3f]", i ? "; " : "", row.d, row.c, row.m,
                      static_cast<unsigned long long>(sum.successes), static_cast<unsigned long long>(sum.counted),
                      sum.success_rate, row.lo, row.hi);
        if (!ok) detail += " <- out of range";
        if (i == 0) {
            first_row_successes = sum.successes;
            first_row_decoded = sum.full_decode_successes.value_or(0);
        }
    }
    report(1, all, "reference rows, q=2 t=4 k=1, 1000 trials, seed 1: " + detail);
}

void full_decode() {
    report(7, first_row_decoded == first_row_successes && first_row_successes > 0,
           fmt("full decode on row (d=5,c=1,m=41): %llu of %llu support successes give the planted e",
               static_cast<unsigned long long>(first_row_decoded), static_cast<unsigned long long>(first_row_successes)));
}

void multiplicity_oracle() {
    auto f = Field::make(2, 10);
    Rng rng(kSeed + 2);
    std::uint64_t checked = 0, mismatches = 0;
    for (std::uint64_t i = 0; i < kOracleInstances; ++i) {
        const auto p = plant(f, 3, 3, 1, rng);
        for (const auto& [x, count] : oracle::multiset(p.s, p.a)) {
            ++checked;
            mismatches += multiplicity(x, p.s, p.a) == count ? 0 : 1;
        }
    }
    report(2, mismatches == 0,
           fmt("closed-form multiplicity vs brute-force multiset, %llu instances, %llu elements, %llu mismatches",
               static_cast<unsigned long long>(kOracleInstances), static_cast<unsigned long long>(checked),
               static_cast<unsigned long long>(mismatches)));
}

void intersection_bounds() {
    Rng rng(kSeed + 3);
    std::uint64_t single_checks = 0, single_bad = 0, multi_checks = 0, multi_bad = 0;
    for (std::uint64_t i = 0; i < kBoundInstances; ++i) {
        const std::uint32_t q = i % 2 ? 3 : 2;
        const auto r = 1 + static_cast<std::uint32_t>(rng.below(5));
        const auto d = 2 + static_cast<std::uint32_t>(rng.below(4));
        const auto c = static_cast<std::uint32_t>(rng.below(d - 1));  // c <= d - 2
        const auto m = r * d + 2 + static_cast<std::uint32_t>(rng.below(3));
        auto f = Field::make(q, m);
        Subspace a(f), e(f), ae(f);
        do {
            a = random_subspace(f, d, rng);
            e = random_subspace(f, r, rng);
            ae = product_space(a, e);
        } while (ae.dim() != r * d);
        const auto s = random_subspace_within(ae, r * d - c, rng);

        std::vector<FieldElement> nonzero;
        for (const auto& x : a.enumerate())
            if (!x.is_zero()) nonzero.push_back(x);
        std::vector<Subspace> shifted;
        for (const auto& x : nonzero) {
            shifted.push_back(shift(s, f->inv(x)));
            ++single_checks;
            if (intersect(shifted.back(), e).dim() + c < r) ++single_bad;
        }
        for (int k = 0; k < 4; ++k) {
            const auto t = 2 + static_cast<std::uint32_t>(rng.below(std::min<std::size_t>(4, nonzero.size() - 1)));
            std::vector<std::size_t> idx(nonzero.size());
            for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
            for (std::uint32_t j = 0; j < t; ++j) std::swap(idx[j], idx[j + rng.below(idx.size() - j)]);
            Subspace meet = shifted[idx[0]];
            for (std::uint32_t j = 1; j < t; ++j) meet = intersect(meet, shifted[idx[j]]);
            ++multi_checks;
            if (static_cast<long>(intersect(meet, e).dim()) < static_cast<long>(r) - static_cast<long>(t * c)) ++multi_bad;
        }
    }
    report(3, single_bad == 0 && multi_bad == 0,
           fmt("%llu instances (q in {2,3}): dim(Sa^-1 ∩ E) >= r-c violated %llu/%llu, t-fold >= r-tc violated %llu/%llu",
               static_cast<unsigned long long>(kBoundInstances), static_cast<unsigned long long>(single_bad),
               static_cast<unsigned long long>(single_checks), static_cast<unsigned long long>(multi_bad),
               static_cast<unsigned long long>(multi_checks)));
}

void containment() {
    auto f = Field::make(2, 16);
    Rng rng(kSeed + 4);
    std::uint64_t violations = 0, strict = 0, recovered = 0;
    for (std::uint64_t i = 0; i < kContainmentInstances; ++i) {
        const auto p = plant(f, 3, 4, 1, rng);
        const auto set = high_multiplicity_set(p.s, p.a, static_cast<std::uint32_t>(p.c), {});
        for (const auto& b : p.e.enumerate())
            if (!std::binary_search(set.begin(), set.end(), b)) {
                ++violations;
                break;
            }
        strict += set.size() > 8 ? 1 : 0;
        recovered += classify(multiset_recover(p.s, p.a, 3, 4, p.c), p.e).ok() ? 1 : 0;
    }
    report(4, violations == 0,
           fmt("q=2 r=3 d=4 c=1 m=16, %llu instances: E not inside candidate set in %llu (candidate set larger than E "
               "in %llu; multiset decoder recovered E in %llu)",
               static_cast<unsigned long long>(kContainmentInstances), static_cast<unsigned long long>(violations),
               static_cast<unsigned long long>(strict), static_cast<unsigned long long>(recovered)));
}

void basic_regime() {
    ExperimentConfig cfg;
    cfg.q = 2;
    cfg.r = 3;
    cfg.d = 3;
    cfg.m = 24;
    cfg.k = 1;
    cfg.n = 13;
    cfg.algorithm = Algorithm::Basic;
    cfg.trials = 1000;
    cfg.seed = kSeed;
    cfg.parallelism = workers();
    const auto sum = run_experiment(cfg);
    report(5, sum.success_rate >= kBasicFloor,
           fmt("basic decoder q=2 r=3 d=3 m=24 n-k=12: %llu/%llu=%.3f, floor %.2f (estimate %.3f)",
               static_cast<unsigned long long>(sum.successes), static_cast<unsigned long long>(sum.counted),
               sum.success_rate, kBasicFloor, 1 - sum.basic_estimate.value - std::ldexp(1.0, -3)));
}

void dimension_identities() {
    Rng rng(kSeed + 6);
    std::uint64_t bad_formula = 0, bad_shift = 0, bad_product = 0;
    for (std::uint64_t i = 0; i < kIdentityPairs; ++i) {
        const std::uint32_t q = i % 4 == 3 ? 3 : 2;
        const std::uint32_t m = q == 2 ? 8 + static_cast<std::uint32_t>(rng.below(40)) : 4 + static_cast<std::uint32_t>(rng.below(8));
        auto f = Field::make(q, m);
        const auto u = random_subspace(f, static_cast<std::uint32_t>(rng.below(m + 1)), rng);
        const auto v = random_subspace(f, static_cast<std::uint32_t>(rng.below(m + 1)), rng);
        if (intersect(u, v).dim() + sum(u, v).dim() != u.dim() + v.dim()) ++bad_formula;
        const auto a = f->random_nonzero(rng);
        if (shift(shift(u, a), f->inv(a)) != u || shift(u, a).dim() != u.dim()) ++bad_shift;
        const auto d = 1 + static_cast<std::uint32_t>(rng.below(std::min<std::uint32_t>(m, 6)));
        const auto r = 1 + static_cast<std::uint32_t>(rng.below(std::min<std::uint32_t>(m, 6)));
        if (product_space(random_subspace(f, d, rng), random_subspace(f, r, rng)).dim() > std::min(r * d, m)) ++bad_product;
    }
    report(6, bad_formula + bad_shift + bad_product == 0,
           fmt("%llu random pairs: dimension formula violations %llu, shift round-trip violations %llu, "
               "product-space bound violations %llu",
               static_cast<unsigned long long>(kIdentityPairs), static_cast<unsigned long long>(bad_formula),
               static_cast<unsigned long long>(bad_shift), static_cast<unsigned long long>(bad_product)));
}

void determinism() {
    bool same = true;
    std::string detail;
    for (auto [m, c] : {std::pair{40u, 1}, {42u, 2}}) {
        ExperimentConfig cfg;
        cfg.m = m;
        cfg.c = c;
        cfg.t = 4;
        cfg.trials = 300;
        cfg.seed = kSeed;
        cfg.verbose = true;
        std::vector<ExperimentSummary> runs;
        for (unsigned p : {1U, 3U, 8U}) {
            cfg.parallelism = p;
            runs.push_back(run_experiment(cfg));
        }
        for (const auto& s : runs) {
            same = same && s.successes == runs[0].successes && s.degenerate == runs[0].degenerate;
            for (std::size_t i = 0; i < s.reports.size(); ++i)
                same = same && s.reports[i].status == runs[0].reports[i].status &&
                       s.reports[i].iterations == runs[0].reports[i].iterations;
        }
        detail += fmt("%s(m=%u,c=%d) successes %llu degenerate %llu", detail.empty() ? "" : "; ", m, c,
                      static_cast<unsigned long long>(runs[0].successes),
                      static_cast<unsigned long long>(runs[0].degenerate));
    }
    report(8, same, "parallelism 1, 3, 8 give identical per-trial outcomes: " + detail);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::function<void()>> steps = {table_reproduction, multiplicity_oracle, intersection_bounds,
                                                       containment,        basic_regime,        dimension_identities,
                                                       full_decode,        determinism};
    for (const auto& step : steps) step();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("acceptance: %d failing criteria, %.1f s\n", failures, secs);
    return failures ? 1 : 0;
}
