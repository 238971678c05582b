#pragma once

// Vectors and row reduction over a prime field F_q.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace lrpc {

/// Scalar arithmetic modulo a prime q < 2^16.
class PrimeField {
public:
    PrimeField() = default;
    explicit PrimeField(std::uint32_t q) : q_(q) {}

    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % q_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + q_ - b) % q_; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % q_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// a^(q-2); throws std::domain_error for a = 0.
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t q_ = 2;
};

/// Fixed-length vector over F_q, packed into 64-bit words.
///
/// q = 2 uses one bit per coordinate; odd q uses a 16-bit lane per
/// coordinate. Coordinate 0 sits in the least significant bits of word 0,
/// so the ordering below coincides with the base-q integer sum_i v_i q^i.
class FqVector {
public:
    using Words = boost::container::small_vector<std::uint64_t, 2>;

    FqVector() = default;
    FqVector(std::uint32_t q, std::uint32_t length);

    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t size() const noexcept { return len_; }

    std::uint32_t get(std::size_t i) const noexcept {
        if (q_ == 2) return static_cast<std::uint32_t>((words_[i >> 6] >> (i & 63)) & 1U);
        return static_cast<std::uint32_t>((words_[i >> 2] >> ((i & 3) * 16)) & 0xFFFFU);
    }
    void set(std::size_t i, std::uint32_t value) noexcept;

    bool is_zero() const noexcept;
    /// Index of the first nonzero coordinate, or size() for the zero vector.
    std::uint32_t first_nonzero() const noexcept;

    /// this += s * other
    void add_scaled(const FqVector& other, std::uint32_t s) noexcept;
    void add(const FqVector& other) noexcept { add_scaled(other, 1); }
    void sub(const FqVector& other) noexcept { add_scaled(other, q_ - 1); }
    void scale(std::uint32_t s) noexcept;
    void negate() noexcept { scale(q_ - 1); }

    /// Coordinates [0, a.size()) from a followed by b.
    static FqVector concat(const FqVector& a, const FqVector& b);
    FqVector slice(std::uint32_t begin, std::uint32_t length) const;

    std::span<const std::uint64_t> words() const noexcept { return {words_.data(), words_.size()}; }
    std::span<std::uint64_t> words() noexcept { return {words_.data(), words_.size()}; }

    std::size_t hash() const noexcept;

    friend bool operator==(const FqVector& a, const FqVector& b) noexcept {
        return a.q_ == b.q_ && a.len_ == b.len_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const FqVector& a, const FqVector& b) noexcept;

private:
    std::uint32_t q_ = 2;
    std::uint32_t len_ = 0;
    Words words_;
};

struct FqVectorHash {
    std::size_t operator()(const FqVector& v) const noexcept { return v.hash(); }
};

/// Gauss-Jordan elimination in place. On return `rows` holds the reduced row
/// echelon form with zero rows dropped; the returned vector lists the pivot
/// column of each row (ascending).
std::vector<std::uint32_t> row_reduce(std::vector<FqVector>& rows);

/// Reduces v against an RREF basis with the given pivots. The result is zero
/// iff v lies in the row space.
FqVector reduce_against(FqVector v, std::span<const FqVector> rref, std::span<const std::uint32_t> pivots);

/// Rank of a list of vectors (copies them).
std::size_t rank_of(std::vector<FqVector> rows);

}  // namespace lrpc
