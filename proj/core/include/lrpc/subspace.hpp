#pragma once

// F_q-linear subspaces of F_{q^m}, stored by their reduced row echelon basis.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lrpc/gf.hpp"

namespace lrpc {

/// Thrown when an operation would exceed a configured size bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// q^e, throwing std::overflow_error past 2^64 - 1.
std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e);

class Subspace {
public:
    /// Zero subspace of `field`.
    explicit Subspace(FieldPtr field);

    static Subspace span(FieldPtr field, std::span<const FieldElement> generators);
    static Subspace span_vectors(FieldPtr field, std::vector<FqVector> rows);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(rows_.size()); }
    bool is_zero() const noexcept { return rows_.empty(); }

    /// RREF rows (coordinate vectors over the polynomial basis).
    std::span<const FqVector> rows() const noexcept { return rows_; }
    std::span<const std::uint32_t> pivots() const noexcept { return pivots_; }
    std::vector<FieldElement> basis() const;

    bool contains(const FieldElement& x) const;
    /// Residue of x modulo the subspace; zero iff x is a member.
    FqVector reduce(const FqVector& x) const { return reduce_against(x, rows_, pivots_); }

    /// Element sum_j digit_j(index) * basis_j, digits of index in base q.
    FieldElement element_at(std::uint64_t index) const;
    /// Number of elements q^dim; throws std::overflow_error if not representable.
    std::uint64_t cardinality() const { return checked_pow(field_->q(), dim()); }

    /// Visits all q^dim elements once, in base-q counting order of the
    /// coordinates (basis row 0 is the least significant digit).
    /// Throws ResourceError if q^dim exceeds `cap`.
    void for_each(const std::function<void(const FieldElement&)>& visit, std::uint64_t cap = kDefaultEnumerationCap) const;
    std::vector<FieldElement> enumerate(std::uint64_t cap = kDefaultEnumerationCap) const;

    friend bool operator==(const Subspace& u, const Subspace& v) noexcept {
        return u.field_->id() == v.field_->id() && u.rows_ == v.rows_;
    }

private:
    FieldPtr field_;
    std::vector<FqVector> rows_;
    std::vector<std::uint32_t> pivots_;
};

inline bool equals(const Subspace& u, const Subspace& v) { return u == v; }

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus: row reduce [[u, u], [v, 0]]; rows with zero left half span U ∩ V.
Subspace intersect(const Subspace& u, const Subspace& v);
/// S·a = {s·a : s ∈ S}; throws std::invalid_argument for a = 0.
Subspace shift(const Subspace& s, const FieldElement& a);
/// A.E = span of all products of basis elements.
Subspace product_space(const Subspace& a, const Subspace& e);

/// Uniform random subspace of dimension r; throws std::invalid_argument if r > m.
Subspace random_subspace(const FieldPtr& field, std::uint32_t r, Rng& rng);
/// Uniform random subspace of dimension r inside `parent`.
Subspace random_subspace_within(const Subspace& parent, std::uint32_t r, Rng& rng);
/// Uniform random element of `s` (possibly zero).
FieldElement random_member(const Subspace& s, Rng& rng);

}  // namespace lrpc
