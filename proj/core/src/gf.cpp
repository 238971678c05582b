#include "lrpc/gf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace lrpc {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

namespace {

// Dense polynomials over F_q, low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a nonzero polynomial b.
Poly poly_mod(Poly a, const Poly& b, const PrimeField& fq) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = fq.inv(b.back());
    while (a.size() > db) {
        const std::uint32_t factor = fq.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = fq.sub(a[shift + i], fq.mul(factor, b[i]));
        trim(a);
    }
    return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, const PrimeField& fq) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) return {Poly{}, a};
    Poly quot(a.size() - db, 0);
    const std::uint32_t lead_inv = fq.inv(b.back());
    while (a.size() > db) {
        const std::uint32_t factor = fq.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        quot[shift] = factor;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = fq.sub(a[shift + i], fq.mul(factor, b[i]));
        trim(a);
    }
    trim(quot);
    return {std::move(quot), std::move(a)};
}

Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& fq) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = fq.add(out[i + j], fq.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

Poly poly_sub(Poly a, const Poly& b, const PrimeField& fq) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = fq.sub(a[i], b[i]);
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& fq) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, fq);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, const PrimeField& fq) {
    Poly result{1};
    base = poly_mod(std::move(base), f, fq);
    while (e != 0) {
        if (e & 1U) result = poly_mod(poly_mul(result, base, fq), f, fq);
        e >>= 1;
        if (e != 0) base = poly_mod(poly_mul(base, base, fq), f, fq);
    }
    return result;
}

bool has_root(const Poly& f, const PrimeField& fq) {
    for (std::uint32_t x = 0; x < fq.q(); ++x) {
        std::uint32_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = fq.add(fq.mul(acc, x), f[i]);
        if (acc == 0) return true;
    }
    return false;
}

// f monic of degree m is irreducible iff gcd(f, X^{q^i} - X) = 1 for all
// 1 <= i <= m/2.
bool irreducible(const Poly& f, const PrimeField& fq) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    if (fq.q() <= 257 && has_root(f, fq)) return false;
    const Poly x{0, 1};
    Poly h = x;
    for (std::size_t i = 1; i <= m / 2; ++i) {
        h = poly_powmod(h, fq.q(), f, fq);
        const Poly g = poly_gcd(f, poly_sub(h, x, fq), fq);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t q, std::uint32_t m) {
    const PrimeField fq(q);
    Poly f(m + 1, 0);
    f[m] = 1;
    for (;;) {
        if (irreducible(f, fq)) return f;
        // Next candidate: increment the base-q counter f_0 + f_1 q + ...
        std::size_t i = 0;
        while (i < m && f[i] == q - 1) f[i++] = 0;
        if (i == m) throw std::logic_error("no irreducible polynomial found");
        ++f[i];
    }
}

std::uint64_t fingerprint(std::uint32_t q, std::uint32_t m, const std::vector<std::uint32_t>& modulus) {
    std::uint64_t h = splitmix64((std::uint64_t{q} << 32) | m);
    for (auto c : modulus) h = splitmix64(h ^ c);
    return h == 0 ? 1 : h;
}

__extension__ typedef unsigned __int128 u128;

// Degree of a nonzero 128-bit binary polynomial.
int deg128(u128 x) {
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    if (hi != 0) return 127 - std::countl_zero(hi);
    return 63 - std::countl_zero(static_cast<std::uint64_t>(x));
}

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint32_t q, std::uint32_t m) {
    if (!is_prime(q)) throw std::invalid_argument("field base q=" + std::to_string(q) + " is not prime");
    if (m == 0) throw std::invalid_argument("extension degree m must be at least 1");
    if (q > kMaxBaseField) throw std::invalid_argument("q exceeds 2^16");
    if (m > kMaxExtensionDegree) throw std::invalid_argument("m exceeds 1024");
    return std::shared_ptr<const Field>(new Field(q, m, smallest_irreducible(q, m)));
}

Field::Field(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)), id_(fingerprint(q, m, modulus_)), base_(q) {
    if (binary_word()) {
        for (std::uint32_t i = 0; i < m_; ++i)
            if (modulus_[i]) reduction_word_ |= std::uint64_t{1} << i;
    }
}

void Field::check(const FieldElement& x) const {
    if (x.field_id() != id_ || x.coeffs().size() != m_)
        throw std::invalid_argument("field element belongs to a different field");
}

FieldElement Field::zero() const { return {id_, FqVector(q_, m_)}; }

FieldElement Field::one() const {
    FqVector v(q_, m_);
    v.set(0, 1);
    return {id_, std::move(v)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != m_) throw std::invalid_argument("coefficient vector must have length m");
    FqVector v(q_, m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (coeffs[i] >= q_) throw std::invalid_argument("coefficient out of range [0, q)");
        v.set(i, coeffs[i]);
    }
    return {id_, std::move(v)};
}

FieldElement Field::from_vector(FqVector v) const {
    if (v.q() != q_ || v.size() != m_) throw std::invalid_argument("vector does not match field dimensions");
    return {id_, std::move(v)};
}

FieldElement Field::from_index(std::uint64_t index) const {
    FqVector v(q_, m_);
    for (std::uint32_t i = 0; i < m_ && index != 0; ++i) {
        v.set(i, static_cast<std::uint32_t>(index % q_));
        index /= q_;
    }
    return {id_, std::move(v)};
}

FieldElement Field::x_power(std::uint64_t k) const {
    FieldElement x = zero();
    if (m_ >= 2) {
        x.coeffs().set(1, 1);
    } else {
        x.coeffs().set(0, base_.neg(modulus_[0]));  // X = -f_0 mod (X + f_0)
    }
    return pow(x, k);
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out = a;
    out.coeffs().add(b.coeffs());
    return out;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out = a;
    out.coeffs().sub(b.coeffs());
    return out;
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    FieldElement out = a;
    out.coeffs().negate();
    return out;
}

FieldElement Field::scale(const FieldElement& a, std::uint32_t s) const {
    check(a);
    FieldElement out = a;
    out.coeffs().scale(s);
    return out;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    if (binary_word()) {
        std::uint64_t x = a.coeffs().words()[0];
        std::uint64_t y = b.coeffs().words()[0];
        const std::uint64_t mask = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
        std::uint64_t acc = 0;
        while (y != 0) {
            if (y & 1U) acc ^= x;
            y >>= 1;
            const std::uint64_t carry = (x >> (m_ - 1)) & 1U;
            x = (x << 1) & mask;
            if (carry) x ^= reduction_word_;
        }
        FqVector v(q_, m_);
        v.words()[0] = acc;
        return {id_, std::move(v)};
    }
    Poly pa(m_), pb(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        pa[i] = a.coeff(i);
        pb[i] = b.coeff(i);
    }
    trim(pa);
    trim(pb);
    const Poly r = poly_mod(poly_mul(pa, pb, base_), modulus_, base_);
    FqVector v(q_, m_);
    for (std::size_t i = 0; i < r.size(); ++i) v.set(i, r[i]);
    return {id_, std::move(v)};
}

FieldElement Field::inv(const FieldElement& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    if (binary_word()) {
        // Extended Euclid on binary polynomials held in 128-bit words.
        u128 u = a.coeffs().words()[0];
        u128 v = (u128{1} << m_) | reduction_word_;
        u128 g1 = 1, g2 = 0;
        while (u != 1) {
            int j = deg128(u) - deg128(v);
            if (j < 0) {
                std::swap(u, v);
                std::swap(g1, g2);
                j = -j;
            }
            u ^= v << j;
            g1 ^= g2 << j;
        }
        FqVector out(q_, m_);
        out.words()[0] = static_cast<std::uint64_t>(g1);
        return {id_, std::move(out)};
    }
    Poly r0 = modulus_;
    Poly r1(m_);
    for (std::uint32_t i = 0; i < m_; ++i) r1[i] = a.coeff(i);
    trim(r1);
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        auto [quot, rem] = poly_divmod(r0, r1, base_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly next = poly_sub(s0, poly_mul(quot, s1, base_), base_);
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    // r0 is a nonzero constant since f is irreducible.
    const std::uint32_t c_inv = base_.inv(r0[0]);
    s0 = poly_mod(std::move(s0), modulus_, base_);
    FqVector out(q_, m_);
    for (std::size_t i = 0; i < s0.size(); ++i) out.set(i, base_.mul(s0[i], c_inv));
    return {id_, std::move(out)};
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
    check(a);
    FieldElement result = one();
    FieldElement base = a;
    while (e != 0) {
        if (e & 1U) result = mul(result, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

FieldElement Field::frobenius(const FieldElement& a, std::uint32_t k) const {
    FieldElement x = a;
    for (std::uint32_t i = 0; i < k; ++i) x = pow(x, q_);
    return x;
}

FqVector Field::random_vector(Rng& rng) const {
    FqVector v(q_, m_);
    if (q_ == 2) {
        auto words = v.words();
        for (std::size_t k = 0; k < words.size(); ++k) {
            const std::uint32_t bits = std::min<std::uint32_t>(64, m_ - static_cast<std::uint32_t>(k * 64));
            const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
            words[k] = rng.next() & mask;
        }
        return v;
    }
    for (std::uint32_t i = 0; i < m_; ++i) v.set(i, static_cast<std::uint32_t>(rng.below(q_)));
    return v;
}

FieldElement Field::random_element(Rng& rng) const { return {id_, random_vector(rng)}; }

FieldElement Field::random_nonzero(Rng& rng) const {
    for (;;) {
        FqVector v = random_vector(rng);
        if (!v.is_zero()) return {id_, std::move(v)};
    }
}

}  // namespace lrpc
