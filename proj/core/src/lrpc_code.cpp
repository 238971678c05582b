#include "lrpc/lrpc_code.hpp"

#include <stdexcept>
#include <utility>

namespace lrpc {

std::size_t rank_over_extension(const Field& field, Matrix m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pick = rank;
        while (pick < m.size() && m[pick][col].is_zero()) ++pick;
        if (pick == m.size()) continue;
        std::swap(m[pick], m[rank]);
        const FieldElement lead_inv = field.inv(m[rank][col]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            const FieldElement factor = field.mul(m[i][col], lead_inv);
            for (std::size_t j = col; j < cols; ++j) m[i][j] = field.sub(m[i][j], field.mul(factor, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::uint32_t rank_weight(const FieldPtr& field, const Vector& v) { return Subspace::span(field, v).dim(); }

LrpcCode gen_code(const FieldPtr& field, std::uint32_t n, std::uint32_t k, std::uint32_t d, Rng& rng) {
    if (k == 0 || k >= n) throw std::invalid_argument("gen_code: need 0 < k < n");
    if (d == 0 || d > field->m()) throw std::invalid_argument("gen_code: need 1 <= d <= m");
    Subspace a = random_subspace(field, d, rng);
    const std::uint32_t rows = n - k;
    for (int attempt = 0; attempt < 100; ++attempt) {
        Matrix h(rows, Vector{});
        for (auto& row : h) {
            row.reserve(n);
            for (std::uint32_t j = 0; j < n; ++j) row.push_back(random_member(a, rng));
        }
        if (rank_over_extension(*field, h) == rows) return LrpcCode{field, n, k, d, std::move(a), std::move(h)};
    }
    throw std::runtime_error("gen_code: parity-check matrix rank deficient after 100 draws");
}

RankError gen_error(const FieldPtr& field, std::uint32_t n, std::uint32_t r, Rng& rng) {
    if (r > n || r > field->m()) throw std::invalid_argument("gen_error: need r <= min(n, m)");
    const std::uint32_t q = field->q();
    Subspace support = random_subspace(field, r, rng);
    std::vector<FieldElement> beta = support.basis();
    FqMatrix coords;
    do {
        coords.assign(r, FqVector(q, n));
        for (auto& row : coords)
            for (std::uint32_t j = 0; j < n; ++j) row.set(j, static_cast<std::uint32_t>(rng.below(q)));
    } while (rank_of(coords) != r);
    Vector e(n, field->zero());
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t l = 0; l < r; ++l) e[j].coeffs().add_scaled(beta[l].coeffs(), coords[l].get(j));
    return RankError{std::move(support), std::move(beta), std::move(coords), std::move(e)};
}

Syndrome syndrome(const LrpcCode& code, const Vector& e) {
    const Field& f = *code.field;
    if (e.size() != code.n) throw std::invalid_argument("syndrome: error length differs from n");
    Vector s;
    s.reserve(code.h.size());
    for (const auto& row : code.h) {
        FieldElement acc = f.zero();
        for (std::uint32_t j = 0; j < code.n; ++j) {
            if (e[j].is_zero()) continue;
            acc.coeffs().add(f.mul(e[j], row[j]).coeffs());
        }
        s.push_back(std::move(acc));
    }
    Subspace support = Subspace::span(code.field, s);
    return Syndrome{std::move(s), std::move(support)};
}

CoordinateResult recover_coordinates(const LrpcCode& code, const Syndrome& syn, const Subspace& support) {
    const Field& f = *code.field;
    const std::uint32_t n = code.n;
    const std::uint32_t m = f.m();
    const std::uint32_t q = f.q();
    const std::uint32_t r = support.dim();
    if (syn.s.size() != code.h.size()) throw std::invalid_argument("recover_coordinates: syndrome length differs from n-k");
    if (support.field()->id() != f.id()) throw std::invalid_argument("recover_coordinates: support in a different field");

    const auto beta = support.basis();
    const std::uint32_t unknowns = n * r;  // column j*r + l holds C_e[l][j]
    FqMatrix system;
    system.reserve(code.h.size() * m);
    for (std::size_t i = 0; i < code.h.size(); ++i) {
        std::vector<FieldElement> products;
        products.reserve(unknowns);
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t l = 0; l < r; ++l) products.push_back(f.mul(beta[l], code.h[i][j]));
        for (std::uint32_t t = 0; t < m; ++t) {
            FqVector row(q, unknowns + 1);
            for (std::uint32_t u = 0; u < unknowns; ++u) row.set(u, products[u].coeff(t));
            row.set(unknowns, syn.s[i].coeff(t));
            system.push_back(std::move(row));
        }
    }
    const auto pivots = row_reduce(system);
    CoordinateResult result;
    if (!pivots.empty() && pivots.back() == unknowns) {
        result.status = CoordinateStatus::NoSolution;
        return result;
    }
    if (pivots.size() < unknowns) {
        result.status = CoordinateStatus::Ambiguous;
        return result;
    }
    FqMatrix coords(r, FqVector(q, n));
    for (std::uint32_t u = 0; u < unknowns; ++u) coords[u % r].set(u / r, system[u].get(unknowns));
    Vector e(n, f.zero());
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t l = 0; l < r; ++l) e[j].coeffs().add_scaled(beta[l].coeffs(), coords[l].get(j));
    result.status = CoordinateStatus::Unique;
    result.error = RankError{support, beta, std::move(coords), std::move(e)};
    return result;
}

}  // namespace lrpc
