#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "lrpc/gf.hpp"
#include "oracles.hpp"

using namespace lrpc;

namespace {

void expect_smallest_irreducible(std::uint32_t q, std::uint32_t m) {
    auto f = Field::make(q, m);
    const oracle::Poly modulus = f->modulus();
    ASSERT_EQ(modulus.size(), m + 1);
    EXPECT_EQ(modulus.back(), 1U);
    EXPECT_TRUE(oracle::irreducible_by_trial_division(modulus, q));
    std::uint64_t index = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i, scale *= q) index += modulus[i] * scale;
    for (std::uint64_t j = 0; j < index; ++j)
        EXPECT_FALSE(oracle::irreducible_by_trial_division(oracle::monic_from_index(j, m, q), q))
            << "smaller irreducible candidate " << j << " for q=" << q << " m=" << m;
}

}  // namespace

TEST(Gf, DegreeOneModulusIsX) {
    auto f = Field::make(2, 1);
    EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{0, 1}));
    auto g = Field::make(5, 1);
    EXPECT_EQ(g->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Gf, Gf256ModulusIsSmallestIrreducible) {
    auto f = Field::make(2, 8);
    // X^8 + X^4 + X^3 + X + 1
    EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1, 1, 0, 0, 0, 1}));
    expect_smallest_irreducible(2, 8);
}

TEST(Gf, ModulusSearchMatchesTrialDivision) {
    for (std::uint32_t m = 1; m <= 12; ++m) expect_smallest_irreducible(2, m);
    for (std::uint32_t m = 1; m <= 6; ++m) expect_smallest_irreducible(3, m);
    for (std::uint32_t m = 1; m <= 4; ++m) expect_smallest_irreducible(5, m);
    expect_smallest_irreducible(7, 3);
}

TEST(Gf, LargeDegreeModulusIsIrreducible) {
    for (std::uint32_t m : {40u, 41u, 42u, 46u, 47u, 48u, 49u, 64u, 100u}) {
        auto f = Field::make(2, m);
        EXPECT_TRUE(oracle::irreducible_rabin(f->modulus(), 2)) << m;
    }
    EXPECT_TRUE(oracle::irreducible_rabin(Field::make(3, 20)->modulus(), 3));
}

TEST(Gf, RabinOracleAgreesWithTrialDivision) {
    for (std::uint32_t m = 2; m <= 10; ++m)
        for (std::uint64_t j = 0; j < (1U << m); ++j) {
            const auto p = oracle::monic_from_index(j, m, 2);
            ASSERT_EQ(oracle::irreducible_rabin(p, 2), oracle::irreducible_by_trial_division(p, 2)) << m << ' ' << j;
        }
}

TEST(Gf, ConstructionIsDeterministic) {
    EXPECT_EQ(Field::make(3, 7)->modulus(), Field::make(3, 7)->modulus());
    EXPECT_EQ(Field::make(2, 43)->id(), Field::make(2, 43)->id());
}

TEST(Gf, RejectsBadParameters) {
    EXPECT_THROW(Field::make(4, 3), std::invalid_argument);
    EXPECT_THROW(Field::make(1, 3), std::invalid_argument);
    EXPECT_THROW(Field::make(0, 3), std::invalid_argument);
    EXPECT_THROW(Field::make(2, 0), std::invalid_argument);
    EXPECT_THROW(Field::make(2, 1025), std::invalid_argument);
    EXPECT_THROW(Field::make(65537, 1), std::invalid_argument);
}

TEST(Gf, FieldAxiomsOnRandomTriples) {
    for (auto [q, m] : {std::pair{2u, 41u}, {2u, 8u}, {2u, 70u}, {3u, 5u}, {5u, 4u}, {7u, 9u}}) {
        auto f = Field::make(q, m);
        Rng rng(1000 + q * 100 + m);
        for (int i = 0; i < 1000; ++i) {
            const auto a = f->random_element(rng), b = f->random_element(rng), c = f->random_element(rng);
            ASSERT_EQ(f->add(a, b), f->add(b, a));
            ASSERT_EQ(f->mul(a, b), f->mul(b, a));
            ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            ASSERT_EQ(f->add(a, f->neg(a)), f->zero());
            ASSERT_EQ(f->sub(a, b), f->add(a, f->neg(b)));
            ASSERT_EQ(f->mul(a, f->one()), a);
            if (!b.is_zero()) {
                ASSERT_EQ(f->mul(f->mul(a, b), f->inv(b)), a);
                ASSERT_EQ(f->mul(b, f->inv(b)), f->one());
            }
        }
    }
}

TEST(Gf, MultiplicationMatchesSchoolbookReduction) {
    for (auto [q, m] : {std::pair{2u, 41u}, {2u, 64u}, {2u, 100u}, {3u, 7u}, {11u, 5u}}) {
        auto f = Field::make(q, m);
        Rng rng(q * 7 + m);
        for (int i = 0; i < 300; ++i) {
            const auto a = f->random_element(rng), b = f->random_element(rng);
            const auto expect = oracle::mul_mod(oracle::coeffs_of(a, m), oracle::coeffs_of(b, m), f->modulus(), q);
            ASSERT_EQ(oracle::coeffs_of(f->mul(a, b), m), expect);
        }
    }
}

TEST(Gf, TopPowerTimesXReducesToModulusTail) {
    for (auto [q, m] : {std::pair{2u, 41u}, {2u, 8u}, {3u, 5u}}) {
        auto f = Field::make(q, m);
        const auto product = f->mul(f->x_power(m - 1), f->x_power(1));
        // X^m = -(f - X^m)
        for (std::uint32_t i = 0; i < m; ++i) EXPECT_EQ(product.coeff(i), f->base().neg(f->modulus()[i]));
    }
}

TEST(Gf, InverseOfZeroThrows) {
    auto f = Field::make(2, 10);
    EXPECT_THROW(f->inv(f->zero()), std::domain_error);
    auto g = Field::make(3, 4);
    EXPECT_THROW(g->inv(g->zero()), std::domain_error);
}

TEST(Gf, MixedFieldsThrow) {
    auto f = Field::make(2, 10);
    auto g = Field::make(2, 11);
    auto h = Field::make(3, 10);
    EXPECT_THROW(f->add(f->one(), g->one()), std::invalid_argument);
    EXPECT_THROW(f->mul(f->one(), h->one()), std::invalid_argument);
    EXPECT_THROW(f->inv(g->one()), std::invalid_argument);
}

TEST(Gf, FrobeniusHasOrderM) {
    for (auto [q, m] : {std::pair{2u, 41u}, {2u, 20u}, {3u, 7u}, {5u, 3u}}) {
        auto f = Field::make(q, m);
        Rng rng(m);
        for (int i = 0; i < 100; ++i) {
            const auto x = f->random_element(rng);
            EXPECT_EQ(f->frobenius(x, m), x);
            if (m <= 20 || q == 2) {
                std::uint64_t qm = 1;
                for (std::uint32_t j = 0; j < m; ++j) qm *= q;
                EXPECT_EQ(f->pow(x, qm), x);
            }
        }
    }
}

TEST(Gf, FrobeniusIsAdditive) {
    auto f = Field::make(3, 6);
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto a = f->random_element(rng), b = f->random_element(rng);
        EXPECT_EQ(f->frobenius(f->add(a, b), 1), f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
        EXPECT_EQ(f->frobenius(a, 1), f->pow(a, 3));
    }
}

TEST(Gf, RandomSequencesAreDeterministic) {
    auto f = Field::make(2, 41);
    Rng r1(42), r2(42);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(f->random_element(r1), f->random_element(r2));
}

TEST(Gf, RandomElementIsUniformOverGf16) {
    auto f = Field::make(2, 4);
    Rng rng(2024);
    std::vector<std::uint64_t> counts(16, 0);
    const int draws = 16000;
    for (int i = 0; i < draws; ++i) {
        const auto x = f->random_element(rng);
        std::uint32_t v = 0;
        for (std::uint32_t j = 0; j < 4; ++j) v |= x.coeff(j) << j;
        ++counts[v];
    }
    EXPECT_LT(oracle::chi2_statistic(counts, draws / 16.0), oracle::chi2_critical(15, 0.001));
}

TEST(Gf, RandomNonzeroIsNeverZero) {
    auto f = Field::make(2, 2);
    auto g = Field::make(3, 1);
    Rng rng(5);
    for (int i = 0; i < 100000; ++i) {
        ASSERT_FALSE(f->random_nonzero(rng).is_zero());
        ASSERT_FALSE(g->random_nonzero(rng).is_zero());
    }
}

TEST(Gf, FromIndexEnumeratesTheField) {
    auto f = Field::make(3, 3);
    std::set<FieldElement> seen;
    for (std::uint64_t i = 0; i < 27; ++i) seen.insert(f->from_index(i));
    EXPECT_EQ(seen.size(), 27U);
    EXPECT_EQ(f->from_index(0), f->zero());
    EXPECT_EQ(f->from_index(1), f->one());
    EXPECT_EQ(f->from_index(3), f->x_power(1));
}

TEST(Gf, MultiplicativeGroupOrder) {
    auto f = Field::make(2, 13);
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const auto x = f->random_nonzero(rng);
        EXPECT_EQ(f->pow(x, (1U << 13) - 1), f->one());
    }
}

TEST(PrimeFieldTest, Inverses) {
    PrimeField p(65521);
    for (std::uint32_t a : {1u, 2u, 3u, 1000u, 65520u}) EXPECT_EQ(p.mul(a, p.inv(a)), 1U);
    EXPECT_THROW(p.inv(0), std::domain_error);
}

TEST(FqVectorTest, RowReduceRankAndMembership) {
    for (std::uint32_t q : {2u, 3u, 7u}) {
        Rng rng(q);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<FqVector> rows;
            for (int i = 0; i < 6; ++i) {
                FqVector v(q, 70);
                for (std::uint32_t j = 0; j < 70; ++j) v.set(j, static_cast<std::uint32_t>(rng.below(q)));
                rows.push_back(v);
            }
            // Append a dependent combination.
            FqVector dep = rows[0];
            dep.add_scaled(rows[3], q - 1);
            rows.push_back(dep);
            auto original = rows;
            auto pivots = row_reduce(rows);
            EXPECT_LE(rows.size(), 6U);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                EXPECT_EQ(rows[i].get(pivots[i]), 1U);
                for (std::size_t k = 0; k < rows.size(); ++k)
                    if (k != i) {
                        EXPECT_EQ(rows[k].get(pivots[i]), 0U);
                    }
            }
            for (const auto& v : original) EXPECT_TRUE(reduce_against(v, rows, pivots).is_zero());
        }
    }
}
