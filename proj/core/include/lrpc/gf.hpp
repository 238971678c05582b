#pragma once

// Extension field F_{q^m} = F_q[X]/(f) for a prime q and a fixed monic
// irreducible f of degree m.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lrpc/fq.hpp"
#include "lrpc/rng.hpp"

namespace lrpc {

inline constexpr std::uint32_t kMaxExtensionDegree = 1024;
inline constexpr std::uint32_t kMaxBaseField = 1U << 16;

bool is_prime(std::uint32_t n) noexcept;

/// Element of F_{q^m}: the coefficient vector of a polynomial of degree < m,
/// coefficient 0 being the constant term. Tagged with the id of its field.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(std::uint64_t field_id, FqVector coeffs) : field_id_(field_id), coeffs_(std::move(coeffs)) {}

    std::uint64_t field_id() const noexcept { return field_id_; }
    const FqVector& coeffs() const noexcept { return coeffs_; }
    FqVector& coeffs() noexcept { return coeffs_; }
    std::uint32_t coeff(std::size_t i) const noexcept { return coeffs_.get(i); }
    bool is_zero() const noexcept { return coeffs_.is_zero(); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_id_ == b.field_id_ && a.coeffs_ == b.coeffs_;
    }
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
        if (auto c = a.field_id_ <=> b.field_id_; c != 0) return c;
        return a.coeffs_ <=> b.coeffs_;
    }

private:
    std::uint64_t field_id_ = 0;
    FqVector coeffs_;
};

struct FieldElementHash {
    std::size_t operator()(const FieldElement& x) const noexcept { return x.coeffs().hash(); }
};

/// Parameters and arithmetic of F_{q^m}. Immutable once built and safe to
/// share between threads.
class Field {
public:
    /// Builds F_{q^m} with the smallest monic irreducible modulus, where
    /// candidates X^m + sum_{i<m} f_i X^i are visited in increasing order of
    /// the integer sum_{i<m} f_i q^i.
    /// Throws std::invalid_argument for non-prime q, m = 0, or sizes beyond
    /// kMaxBaseField / kMaxExtensionDegree.
    static std::shared_ptr<const Field> make(std::uint32_t q, std::uint32_t m);

    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t m() const noexcept { return m_; }
    /// Coefficients of the modulus, length m+1, leading coefficient 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    std::uint64_t id() const noexcept { return id_; }
    const PrimeField& base() const noexcept { return base_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// X^k reduced modulo f.
    FieldElement x_power(std::uint64_t k) const;
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    /// Wraps an existing coordinate vector (length m, same q).
    FieldElement from_vector(FqVector v) const;
    /// Element whose coefficients are the base-q digits of `index`.
    FieldElement from_index(std::uint64_t index) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// Multiplication by a base-field scalar.
    FieldElement scale(const FieldElement& a, std::uint32_t s) const;
    /// Throws std::domain_error for a = 0.
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;
    /// a^(q^k)
    FieldElement frobenius(const FieldElement& a, std::uint32_t k) const;

    FieldElement random_element(Rng& rng) const;
    FieldElement random_nonzero(Rng& rng) const;

    /// Throws std::invalid_argument if x was not built by a field with the
    /// same parameters.
    void check(const FieldElement& x) const;

private:
    Field(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus);

    bool binary_word() const noexcept { return q_ == 2 && m_ <= 64; }
    FqVector random_vector(Rng& rng) const;

    std::uint32_t q_;
    std::uint32_t m_;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t id_;
    PrimeField base_;
    std::uint64_t reduction_word_ = 0;  // modulus minus X^m, q = 2 and m <= 64
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace lrpc
