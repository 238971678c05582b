#pragma once

// Error support recovery for LRPC codes.
//
// All decoders take the syndrome support S, the parity-check support A and
// the target rank r. With d = dim A and c = rd - dim S (the codimension of S
// inside A.E when dim A.E = rd):
//
//   basic_recover      E = ∩_i S·α_i^{-1} over a basis α of A (needs c <= 0)
//   multiset_recover   keep x with Mul(x) >= q^{d-c} - 1, where Mul(x) counts
//                      the a ∈ A* with x ∈ S·a^{-1}; then filter
//   intersect_recover  accumulate intersections of t random shifts S·a_i^{-1}

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lrpc/subspace.hpp"

namespace lrpc {

enum class RecoveryStatus { Success, WrongSupport, Failure };

enum class FailureReason {
    None,
    GuardViolation,     // dimension of S outside the decoder's regime
    DimensionMismatch,  // recovered space does not have dimension r
    FilterStuck,        // candidate set cannot be filtered down to q^r elements
    NotSubspace,        // filtered candidate set is not a subspace of dim r
    StrayElements,      // accumulated space overshot dimension r
    RoundBudget,        // max_rounds exhausted
};

std::string_view to_string(RecoveryStatus s) noexcept;
std::string_view to_string(FailureReason r) noexcept;

struct RecoveryOutcome {
    RecoveryStatus status = RecoveryStatus::Failure;
    FailureReason reason = FailureReason::None;
    std::optional<Subspace> support;
    std::uint32_t iterations = 0;
    std::uint64_t candidates_examined = 0;

    bool ok() const noexcept { return status == RecoveryStatus::Success; }
};

/// Marks a Success whose support differs from `planted` as WrongSupport.
RecoveryOutcome classify(RecoveryOutcome outcome, const Subspace& planted);

/// Intersection of S·α_i^{-1} over the RREF basis of A. Success iff the
/// result has dimension r. Throws std::invalid_argument when A = {0}.
RecoveryOutcome basic_recover(const Subspace& s, const Subspace& a, std::uint32_t r);

/// Number of a ∈ A* with x ∈ S·a^{-1}: q^{dim(S·x^{-1} ∩ A)} - 1 for x ≠ 0,
/// q^d - 1 for x = 0. Evaluated as dim(S ∩ x·A), which is the same space
/// multiplied by x.
std::uint64_t multiplicity(const FieldElement& x, const Subspace& s, const Subspace& a);

struct MultisetOptions {
    /// Use the guard c < d-2 instead of c <= d-2.
    bool strict_guard = false;
    /// Bound on (q^d - 1)·q^{dim S}, the number of multiset entries scanned.
    std::uint64_t candidate_cap = kDefaultEnumerationCap;
    /// Pick filter pivots at random instead of in ascending order.
    bool random_filter = false;
    std::uint64_t filter_seed = 0;
};

/// Distinct elements of ∪_{a ∈ A*} S·a^{-1} whose multiplicity reaches
/// q^{d-c} - 1, sorted ascending. `examined` receives the number of distinct
/// candidates. Throws ResourceError past options.candidate_cap.
std::vector<FieldElement> high_multiplicity_set(const Subspace& s, const Subspace& a, std::uint32_t c,
                                                const MultisetOptions& options, std::uint64_t* examined = nullptr);

/// Repeatedly replaces X by X ∩ (X + x) for pivots x ∈ X that shrink X
/// without dropping below `target` elements. Returns the final set.
std::vector<FieldElement> filter_candidates(const Field& field, std::vector<FieldElement> set, std::uint64_t target,
                                            const MultisetOptions& options);

/// Multiset decoder. Requires c = rd - dim S; c < 0 is an invalid argument.
RecoveryOutcome multiset_recover(const Subspace& s, const Subspace& a, std::uint32_t r, std::uint32_t d, int c,
                                 const MultisetOptions& options = {});

/// t = q^{ceil(log_q(r/c))}: the smallest power of q that is >= r/c.
std::uint64_t default_intersection_arity(std::uint32_t q, std::uint32_t r, std::uint32_t c);

struct IntersectOptions {
    std::optional<std::uint32_t> t;
    std::uint32_t max_rounds = 4096;
};

/// Randomized t-fold intersection decoder. Each round draws t distinct
/// elements of A*, and adds ∩_i S·a_i^{-1} to the accumulated space.
/// Success when the accumulated space reaches dimension r; Failure on
/// overshoot or when max_rounds is used up.
/// Throws std::invalid_argument when c <= 0 and no t is given, or when t
/// exceeds |A*|.
RecoveryOutcome intersect_recover(const Subspace& s, const Subspace& a, std::uint32_t r, std::uint32_t d, int c,
                                  const IntersectOptions& options, Rng& rng);

/// Failure probability ≈ q^exponent.
struct ProbabilityEstimate {
    std::int64_t log_q_failure = 0;
    double value = 1.0;
    /// exponent >= 0: the bound says nothing.
    bool vacuous() const noexcept { return log_q_failure >= 0; }
};

/// S ≠ A.E: exponent rd - (n-k).
ProbabilityEstimate estimate_syndrome_fill(std::uint32_t q, std::uint32_t r, std::uint32_t d, std::uint32_t n,
                                           std::uint32_t k);
/// ∩ S·α_i^{-1} ≠ E: exponent -(d-1)(m-rd-r).
ProbabilityEstimate estimate_basic_intersect(std::uint32_t q, std::uint32_t m, std::uint32_t r, std::uint32_t d);
/// t-fold intersection holds elements outside E: exponent -((t-1)m + r - t·rd).
ProbabilityEstimate estimate_stray(std::uint32_t q, std::uint32_t m, std::uint32_t r, std::uint32_t d, int c,
                                   std::uint32_t t);

}  // namespace lrpc
