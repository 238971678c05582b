#include "lrpc/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace lrpc {

std::string_view to_string(RecoveryStatus s) noexcept {
    switch (s) {
        case RecoveryStatus::Success: return "success";
        case RecoveryStatus::WrongSupport: return "wrong_support";
        case RecoveryStatus::Failure: return "failure";
    }
    return "unknown";
}

std::string_view to_string(FailureReason r) noexcept {
    switch (r) {
        case FailureReason::None: return "none";
        case FailureReason::GuardViolation: return "support recovery failure: guard";
        case FailureReason::DimensionMismatch: return "dimension_mismatch";
        case FailureReason::FilterStuck: return "filter_stuck";
        case FailureReason::NotSubspace: return "not_subspace";
        case FailureReason::StrayElements: return "stray_elements";
        case FailureReason::RoundBudget: return "round_budget";
    }
    return "unknown";
}

namespace {

RecoveryOutcome failure(FailureReason reason) {
    RecoveryOutcome out;
    out.status = RecoveryStatus::Failure;
    out.reason = reason;
    return out;
}

RecoveryOutcome zero_support_success(const Subspace& s) {
    RecoveryOutcome out;
    out.status = RecoveryStatus::Success;
    out.support = Subspace(s.field());
    return out;
}

void check_codimension(const Subspace& s, std::uint32_t r, std::uint32_t d, int c) {
    const long long expected = static_cast<long long>(r) * d - s.dim();
    if (expected != c) throw std::invalid_argument("codimension c must equal r*d - dim(S)");
}

}  // namespace

RecoveryOutcome classify(RecoveryOutcome outcome, const Subspace& planted) {
    if (outcome.status == RecoveryStatus::Success && !(outcome.support && *outcome.support == planted))
        outcome.status = RecoveryStatus::WrongSupport;
    return outcome;
}

RecoveryOutcome basic_recover(const Subspace& s, const Subspace& a, std::uint32_t r) {
    if (a.is_zero()) throw std::invalid_argument("basic_recover: A is the zero subspace");
    const Field& f = *s.field();
    std::optional<Subspace> acc;
    for (const auto& alpha : a.basis()) {
        Subspace shifted = shift(s, f.inv(alpha));
        acc = acc ? intersect(*acc, shifted) : std::move(shifted);
    }
    RecoveryOutcome out;
    out.iterations = a.dim();
    out.support = std::move(acc);
    if (out.support->dim() == r) {
        out.status = RecoveryStatus::Success;
    } else {
        out.status = RecoveryStatus::Failure;
        out.reason = FailureReason::DimensionMismatch;
    }
    return out;
}

std::uint64_t multiplicity(const FieldElement& x, const Subspace& s, const Subspace& a) {
    const Field& f = *s.field();
    f.check(x);
    const std::uint64_t q = f.q();
    if (x.is_zero()) return checked_pow(q, a.dim()) - 1;
    // dim(S·x^{-1} ∩ A) = dim(S ∩ x·A) = d - (dim(S + x·A) - dim S).
    std::vector<FqVector> residues;
    residues.reserve(a.dim());
    for (const auto& alpha : a.basis()) residues.push_back(s.reduce(f.mul(alpha, x).coeffs()));
    const std::size_t growth = rank_of(std::move(residues));
    return checked_pow(q, a.dim() - growth) - 1;
}

std::vector<FieldElement> high_multiplicity_set(const Subspace& s, const Subspace& a, std::uint32_t c,
                                                const MultisetOptions& options, std::uint64_t* examined) {
    const Field& f = *s.field();
    const std::uint64_t q = f.q();
    const std::uint32_t d = a.dim();
    std::uint64_t entries = 0;
    try {
        const std::uint64_t shifts = checked_pow(q, d) - 1;
        const std::uint64_t per_shift = checked_pow(q, s.dim());
        if (shifts > ~std::uint64_t{0} / per_shift) throw std::overflow_error("multiset size");
        entries = shifts * per_shift;
    } catch (const std::overflow_error&) {
        throw ResourceError("multiset size overflows 64 bits");
    }
    if (entries > options.candidate_cap)
        throw ResourceError("multiset has " + std::to_string(entries) + " entries, candidate cap is " +
                            std::to_string(options.candidate_cap));

    std::unordered_set<FqVector, FqVectorHash> candidates;
    a.for_each(
        [&](const FieldElement& alpha) {
            if (alpha.is_zero()) return;
            shift(s, f.inv(alpha)).for_each([&](const FieldElement& x) { candidates.insert(x.coeffs()); },
                                            options.candidate_cap);
        },
        options.candidate_cap);
    if (examined) *examined = candidates.size();

    const std::uint64_t threshold = checked_pow(q, d - c) - 1;
    std::vector<FieldElement> kept;
    for (const auto& v : candidates) {
        FieldElement x(f.id(), v);
        if (multiplicity(x, s, a) >= threshold) kept.push_back(std::move(x));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<FieldElement> filter_candidates(const Field& field, std::vector<FieldElement> set, std::uint64_t target,
                                            const MultisetOptions& options) {
    Rng rng(options.filter_seed);
    std::sort(set.begin(), set.end());
    while (set.size() > target) {
        std::unordered_set<FqVector, FqVectorHash> members;
        for (const auto& y : set) members.insert(y.coeffs());

        std::vector<std::size_t> order(set.size());
        std::iota(order.begin(), order.end(), 0);
        if (options.random_filter) {
            for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
        }

        bool shrunk = false;
        for (const std::size_t idx : order) {
            const FieldElement& x = set[idx];
            // X ∩ (X + x) = {y ∈ X : y - x ∈ X}
            std::vector<FieldElement> next;
            for (const auto& y : set) {
                if (members.count(field.sub(y, x).coeffs())) next.push_back(y);
            }
            if (next.size() < set.size() && next.size() >= target) {
                set = std::move(next);
                shrunk = true;
                break;
            }
        }
        if (!shrunk) break;
    }
    return set;
}

RecoveryOutcome multiset_recover(const Subspace& s, const Subspace& a, std::uint32_t r, std::uint32_t d, int c,
                                 const MultisetOptions& options) {
    if (a.dim() != d) throw std::invalid_argument("multiset_recover: dim(A) differs from d");
    if (r == 0) return zero_support_success(s);
    check_codimension(s, r, d, c);
    if (c < 0) throw std::invalid_argument("multiset_recover: dim(S) exceeds r*d");
    const int bound = static_cast<int>(d) - 2;
    if (options.strict_guard ? !(c < bound) : !(c <= bound)) return failure(FailureReason::GuardViolation);

    const Field& f = *s.field();
    std::uint64_t examined = 0;
    auto set = high_multiplicity_set(s, a, static_cast<std::uint32_t>(c), options, &examined);
    const std::uint64_t target = checked_pow(f.q(), r);
    if (set.size() > target) set = filter_candidates(f, std::move(set), target, options);

    RecoveryOutcome out;
    out.candidates_examined = examined;
    if (set.size() != target) {
        out.status = RecoveryStatus::Failure;
        out.reason = set.size() > target ? FailureReason::FilterStuck : FailureReason::NotSubspace;
        return out;
    }
    Subspace spanned = Subspace::span(s.field(), set);
    if (spanned.dim() != r) {
        out.status = RecoveryStatus::Failure;
        out.reason = FailureReason::NotSubspace;
        return out;
    }
    out.status = RecoveryStatus::Success;
    out.support = std::move(spanned);
    return out;
}

std::uint64_t default_intersection_arity(std::uint32_t q, std::uint32_t r, std::uint32_t c) {
    if (c == 0) throw std::invalid_argument("intersection arity undefined for c = 0");
    std::uint64_t t = 1;
    while (t * c < r) t *= q;
    return t;
}

RecoveryOutcome intersect_recover(const Subspace& s, const Subspace& a, std::uint32_t r, std::uint32_t d, int c,
                                  const IntersectOptions& options, Rng& rng) {
    if (a.dim() != d) throw std::invalid_argument("intersect_recover: dim(A) differs from d");
    if (r == 0) return zero_support_success(s);
    check_codimension(s, r, d, c);
    if (!(c < static_cast<int>(d))) return failure(FailureReason::GuardViolation);

    const Field& f = *s.field();
    std::uint64_t t = 0;
    if (options.t) {
        t = *options.t;
    } else {
        if (c <= 0) throw std::invalid_argument("intersect_recover: c <= 0 needs an explicit t; use basic_recover");
        t = default_intersection_arity(f.q(), r, static_cast<std::uint32_t>(c));
    }
    if (t == 0 || t > checked_pow(f.q(), d) - 1)
        throw std::invalid_argument("intersect_recover: t must lie in [1, q^d - 1]");

    RecoveryOutcome out;
    Subspace acc(s.field());
    for (std::uint32_t round = 1; round <= options.max_rounds; ++round) {
        std::vector<FieldElement> picks;
        picks.reserve(t);
        while (picks.size() < t) {
            FieldElement x = random_member(a, rng);
            if (x.is_zero() || std::find(picks.begin(), picks.end(), x) != picks.end()) continue;
            picks.push_back(std::move(x));
        }
        Subspace meet = shift(s, f.inv(picks.front()));
        for (std::size_t i = 1; i < picks.size() && !meet.is_zero(); ++i) meet = intersect(meet, shift(s, f.inv(picks[i])));
        acc = sum(acc, meet);
        out.iterations = round;
        if (acc.dim() == r) {
            out.status = RecoveryStatus::Success;
            out.support = std::move(acc);
            return out;
        }
        if (acc.dim() > r) {
            out.status = RecoveryStatus::Failure;
            out.reason = FailureReason::StrayElements;
            out.support = std::move(acc);
            return out;
        }
    }
    out.status = RecoveryStatus::Failure;
    out.reason = FailureReason::RoundBudget;
    out.support = std::move(acc);
    return out;
}

namespace {

ProbabilityEstimate make_estimate(std::uint32_t q, std::int64_t exponent) {
    return {exponent, std::pow(static_cast<double>(q), static_cast<double>(exponent))};
}

}  // namespace

ProbabilityEstimate estimate_syndrome_fill(std::uint32_t q, std::uint32_t r, std::uint32_t d, std::uint32_t n,
                                           std::uint32_t k) {
    const std::int64_t rd = std::int64_t{r} * d;
    return make_estimate(q, rd - (std::int64_t{n} - k));
}

ProbabilityEstimate estimate_basic_intersect(std::uint32_t q, std::uint32_t m, std::uint32_t r, std::uint32_t d) {
    const std::int64_t rd = std::int64_t{r} * d;
    return make_estimate(q, -(std::int64_t{d} - 1) * (std::int64_t{m} - rd - r));
}

ProbabilityEstimate estimate_stray(std::uint32_t q, std::uint32_t m, std::uint32_t r, std::uint32_t d, int c,
                                   std::uint32_t t) {
    // The codimension cancels in the final bound q^{-t(m - rd) + m - r}.
    (void)c;
    const std::int64_t rd = std::int64_t{r} * d;
    return make_estimate(q, -((std::int64_t{t} - 1) * m + r - std::int64_t{t} * rd));
}

}  // namespace lrpc
