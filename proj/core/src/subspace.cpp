#include "lrpc/subspace.hpp"

#include <string>
#include <utility>

namespace lrpc {

std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (out > ~std::uint64_t{0} / q) throw std::overflow_error("q^e does not fit in 64 bits");
        out *= q;
    }
    return out;
}

namespace {

void require_same_field(const Subspace& u, const Subspace& v) {
    if (u.field()->id() != v.field()->id()) throw std::invalid_argument("subspaces live in different fields");
}

}  // namespace

Subspace::Subspace(FieldPtr field) : field_(std::move(field)) {}

Subspace Subspace::span_vectors(FieldPtr field, std::vector<FqVector> rows) {
    Subspace out(std::move(field));
    out.pivots_ = row_reduce(rows);
    out.rows_ = std::move(rows);
    return out;
}

Subspace Subspace::span(FieldPtr field, std::span<const FieldElement> generators) {
    std::vector<FqVector> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        field->check(g);
        rows.push_back(g.coeffs());
    }
    return span_vectors(std::move(field), std::move(rows));
}

std::vector<FieldElement> Subspace::basis() const {
    std::vector<FieldElement> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.emplace_back(field_->id(), r);
    return out;
}

bool Subspace::contains(const FieldElement& x) const {
    field_->check(x);
    return reduce(x.coeffs()).is_zero();
}

FieldElement Subspace::element_at(std::uint64_t index) const {
    const std::uint32_t q = field_->q();
    FqVector acc(q, field_->m());
    for (std::size_t j = 0; j < rows_.size() && index != 0; ++j) {
        acc.add_scaled(rows_[j], static_cast<std::uint32_t>(index % q));
        index /= q;
    }
    return {field_->id(), std::move(acc)};
}

void Subspace::for_each(const std::function<void(const FieldElement&)>& visit, std::uint64_t cap) const {
    const std::uint32_t q = field_->q();
    std::uint64_t count = 0;
    try {
        count = cardinality();
    } catch (const std::overflow_error&) {
        throw ResourceError("subspace too large to enumerate");
    }
    if (count > cap) throw ResourceError("subspace has " + std::to_string(count) + " elements, enumeration cap is " + std::to_string(cap));
    std::vector<std::uint32_t> digits(rows_.size(), 0);
    FieldElement acc(field_->id(), FqVector(q, field_->m()));
    visit(acc);
    for (std::uint64_t n = 1; n < count; ++n) {
        std::size_t j = 0;
        // A digit wrapping from q-1 to 0 adds one more copy of its row: q·row = 0.
        while (digits[j] == q - 1) {
            digits[j] = 0;
            acc.coeffs().add(rows_[j]);
            ++j;
        }
        ++digits[j];
        acc.coeffs().add(rows_[j]);
        visit(acc);
    }
}

std::vector<FieldElement> Subspace::enumerate(std::uint64_t cap) const {
    std::vector<FieldElement> out;
    for_each([&](const FieldElement& x) { out.push_back(x); }, cap);
    return out;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    require_same_field(u, v);
    std::vector<FqVector> rows(u.rows().begin(), u.rows().end());
    rows.insert(rows.end(), v.rows().begin(), v.rows().end());
    return Subspace::span_vectors(u.field(), std::move(rows));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_same_field(u, v);
    if (u.is_zero() || v.is_zero()) return Subspace(u.field());
    const std::uint32_t q = u.field()->q();
    const std::uint32_t m = u.field()->m();
    const FqVector zero(q, m);
    std::vector<FqVector> block;
    block.reserve(u.dim() + v.dim());
    for (const auto& r : u.rows()) block.push_back(FqVector::concat(r, r));
    for (const auto& r : v.rows()) block.push_back(FqVector::concat(r, zero));
    const auto pivots = row_reduce(block);
    std::vector<FqVector> meet;
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (pivots[i] >= m) meet.push_back(block[i].slice(m, m));
    }
    return Subspace::span_vectors(u.field(), std::move(meet));
}

Subspace shift(const Subspace& s, const FieldElement& a) {
    const Field& f = *s.field();
    f.check(a);
    if (a.is_zero()) throw std::invalid_argument("shift by zero");
    std::vector<FqVector> rows;
    rows.reserve(s.dim());
    for (const auto& b : s.basis()) rows.push_back(f.mul(b, a).coeffs());
    return Subspace::span_vectors(s.field(), std::move(rows));
}

Subspace product_space(const Subspace& a, const Subspace& e) {
    require_same_field(a, e);
    const Field& f = *a.field();
    std::vector<FqVector> rows;
    rows.reserve(std::size_t{a.dim()} * e.dim());
    const auto eb = e.basis();
    for (const auto& x : a.basis())
        for (const auto& y : eb) rows.push_back(f.mul(x, y).coeffs());
    return Subspace::span_vectors(a.field(), std::move(rows));
}

namespace {

// Keeps drawing until `target` independent draws have been collected.
template <typename Draw>
Subspace grow_random(const FieldPtr& field, std::uint32_t target, Draw&& draw) {
    Subspace acc(field);
    while (acc.dim() < target) {
        FqVector v = draw();
        if (acc.reduce(v).is_zero()) continue;
        std::vector<FqVector> rows(acc.rows().begin(), acc.rows().end());
        rows.push_back(std::move(v));
        acc = Subspace::span_vectors(field, std::move(rows));
    }
    return acc;
}

}  // namespace

Subspace random_subspace(const FieldPtr& field, std::uint32_t r, Rng& rng) {
    if (r > field->m()) throw std::invalid_argument("random_subspace: dimension exceeds m");
    return grow_random(field, r, [&] { return field->random_element(rng).coeffs(); });
}

FieldElement random_member(const Subspace& s, Rng& rng) {
    const std::uint32_t q = s.field()->q();
    FqVector acc(q, s.field()->m());
    std::uint64_t bits = 0;
    unsigned left = 0;
    for (const auto& row : s.rows()) {
        std::uint32_t c;
        if (q == 2) {
            if (left == 0) {
                bits = rng.next();
                left = 64;
            }
            c = static_cast<std::uint32_t>(bits & 1U);
            bits >>= 1;
            --left;
        } else {
            c = static_cast<std::uint32_t>(rng.below(q));
        }
        acc.add_scaled(row, c);
    }
    return {s.field()->id(), std::move(acc)};
}

Subspace random_subspace_within(const Subspace& parent, std::uint32_t r, Rng& rng) {
    if (r > parent.dim()) throw std::invalid_argument("random_subspace_within: dimension exceeds parent");
    return grow_random(parent.field(), r, [&] { return random_member(parent, rng).coeffs(); });
}

}  // namespace lrpc
