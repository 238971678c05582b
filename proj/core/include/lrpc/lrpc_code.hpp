#pragma once

// LRPC codes: parity-check matrices with entries in a small subspace A,
// rank errors, syndromes and coordinate recovery from a known support.

#include <cstdint>
#include <optional>
#include <vector>

#include "lrpc/subspace.hpp"

namespace lrpc {

using Vector = std::vector<FieldElement>;
using Matrix = std::vector<Vector>;  // row-major

/// Dense matrix over F_q, one FqVector per row.
using FqMatrix = std::vector<FqVector>;

struct LrpcCode {
    FieldPtr field;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t d = 0;
    Subspace support;  // A, dim d
    Matrix h;          // (n-k) x n, entries in A
};

struct RankError {
    Subspace support;               // E, dim r
    std::vector<FieldElement> beta; // ordered basis of E
    FqMatrix coords;                // C_e, r x n over F_q
    Vector e;                       // e = beta · C_e
};

struct Syndrome {
    Vector s;
    Subspace support;  // span of the components of s
};

/// Rank of a matrix over F_{q^m}.
std::size_t rank_over_extension(const Field& field, Matrix m);

/// F_q-dimension of the span of the components of v.
std::uint32_t rank_weight(const FieldPtr& field, const Vector& v);

/// Random LRPC code: A uniform of dimension d, entries of H uniform in A,
/// H resampled until it has rank n-k over F_{q^m}.
/// Throws std::invalid_argument on bad parameters and std::runtime_error if
/// 100 draws of H are all rank deficient.
LrpcCode gen_code(const FieldPtr& field, std::uint32_t n, std::uint32_t k, std::uint32_t d, Rng& rng);

/// Random error of rank r: E uniform of dimension r, C_e uniform among
/// rank-r r x n matrices.
RankError gen_error(const FieldPtr& field, std::uint32_t n, std::uint32_t r, Rng& rng);

/// s = e·H^T.
Syndrome syndrome(const LrpcCode& code, const Vector& e);

enum class CoordinateStatus { Unique, NoSolution, Ambiguous };

struct CoordinateResult {
    CoordinateStatus status = CoordinateStatus::NoSolution;
    std::optional<RankError> error;  // set iff status == Unique
};

/// Solves e·H^T = s for e ∈ E^n: (n-k)·m equations over F_q in the n·r
/// entries of C_e, with E's RREF rows as the basis beta.
/// When the solution is unique the returned C_e has rank <= r.
CoordinateResult recover_coordinates(const LrpcCode& code, const Syndrome& s, const Subspace& support);

}  // namespace lrpc
