#include "lrpc/fq.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace lrpc {

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t result = 1 % q_;
    std::uint32_t base = a % q_;
    while (e != 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % q_ == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    return pow(a, q_ - 2);
}

namespace {

constexpr std::size_t word_count(std::uint32_t q, std::uint32_t len) {
    return q == 2 ? (len + 63) / 64 : (len + 3) / 4;
}

}  // namespace

FqVector::FqVector(std::uint32_t q, std::uint32_t length) : q_(q), len_(length), words_(word_count(q, length), 0) {}

void FqVector::set(std::size_t i, std::uint32_t value) noexcept {
    if (q_ == 2) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value & 1U)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
        return;
    }
    const unsigned shift = static_cast<unsigned>(i & 3) * 16;
    std::uint64_t& w = words_[i >> 2];
    w = (w & ~(std::uint64_t{0xFFFF} << shift)) | (std::uint64_t{value % q_} << shift);
}

bool FqVector::is_zero() const noexcept {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

std::uint32_t FqVector::first_nonzero() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const std::uint64_t w = words_[k];
        if (w == 0) continue;
        const auto tz = static_cast<std::uint32_t>(std::countr_zero(w));
        if (q_ == 2) return static_cast<std::uint32_t>(k * 64) + tz;
        return static_cast<std::uint32_t>(k * 4) + tz / 16;
    }
    return len_;
}

void FqVector::add_scaled(const FqVector& other, std::uint32_t s) noexcept {
    s %= q_;
    if (s == 0) return;
    if (q_ == 2) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
        return;
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const std::uint64_t b = other.words_[k];
        if (b == 0) continue;
        const std::uint64_t a = words_[k];
        std::uint64_t out = 0;
        for (unsigned lane = 0; lane < 4; ++lane) {
            const unsigned shift = lane * 16;
            const std::uint64_t x = (a >> shift) & 0xFFFF;
            const std::uint64_t y = (b >> shift) & 0xFFFF;
            out |= ((x + s * y) % q_) << shift;
        }
        words_[k] = out;
    }
}

void FqVector::scale(std::uint32_t s) noexcept {
    s %= q_;
    if (s == 1) return;
    if (s == 0) {
        for (auto& w : words_) w = 0;
        return;
    }
    // q = 2 never reaches here.
    for (auto& w : words_) {
        std::uint64_t out = 0;
        for (unsigned lane = 0; lane < 4; ++lane) {
            const unsigned shift = lane * 16;
            out |= ((((w >> shift) & 0xFFFF) * s) % q_) << shift;
        }
        w = out;
    }
}

FqVector FqVector::concat(const FqVector& a, const FqVector& b) {
    FqVector out(a.q_, a.len_ + b.len_);
    for (std::uint32_t i = 0; i < a.len_; ++i) out.set(i, a.get(i));
    for (std::uint32_t i = 0; i < b.len_; ++i) out.set(a.len_ + i, b.get(i));
    return out;
}

FqVector FqVector::slice(std::uint32_t begin, std::uint32_t length) const {
    FqVector out(q_, length);
    for (std::uint32_t i = 0; i < length; ++i) out.set(i, get(begin + i));
    return out;
}

std::size_t FqVector::hash() const noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL ^ len_;
    for (auto w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001B3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

std::strong_ordering operator<=>(const FqVector& a, const FqVector& b) noexcept {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    for (std::size_t k = a.words_.size(); k-- > 0;) {
        if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::vector<std::uint32_t> row_reduce(std::vector<FqVector>& rows) {
    std::vector<std::uint32_t> pivots;
    if (rows.empty()) return pivots;
    const std::uint32_t q = rows.front().q();
    const PrimeField fq(q);
    const std::uint32_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::uint32_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pick = rank;
        while (pick < rows.size() && rows[pick].get(col) == 0) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[pick], rows[rank]);
        FqVector& pivot_row = rows[rank];
        if (const auto lead = pivot_row.get(col); lead != 1) pivot_row.scale(fq.inv(lead));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank) continue;
            if (const auto c = rows[i].get(col); c != 0) rows[i].add_scaled(pivot_row, q - c);
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

FqVector reduce_against(FqVector v, std::span<const FqVector> rref, std::span<const std::uint32_t> pivots) {
    const std::uint32_t q = v.q();
    for (std::size_t i = 0; i < rref.size(); ++i) {
        if (const auto c = v.get(pivots[i]); c != 0) v.add_scaled(rref[i], q - c);
    }
    return v;
}

std::size_t rank_of(std::vector<FqVector> rows) { return row_reduce(rows).size(); }

}  // namespace lrpc
