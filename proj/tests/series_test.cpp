#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

namespace germ {
namespace {

using testing::Gen;
using testing::P;
using testing::Q;
using testing::random_unit;

TruncatedSeries S(const std::string& text, std::size_t n, unsigned order) { return {P(text, n), order}; }

// Coefficients of sqrt(1 + u) from the binomial series, binom(1/2, k).
std::vector<Rational> binomial_half(unsigned terms) {
    std::vector<Rational> out;
    Rational c = 1;
    for (unsigned k = 0; k < terms; ++k) {
        out.push_back(c);
        c = c * (Rational(1, 2) - k) / (k + 1);
    }
    return out;
}

TEST(TsMul, Examples) {
    EXPECT_EQ(S("1 + z1", 1, 2) * S("1 - z1", 1, 2), S("1 - z1^2", 1, 2));
    EXPECT_TRUE((S("1 + z1 + z2^3", 2, 4) * TruncatedSeries(Polynomial(2), 4)).is_zero());

    // (z3 - z2 r)(z3 + z2 r) with r^2 = 1 + z1 is the shifted counterexample.
    auto r = square_root(S("1 + z1", 3, 8));
    ASSERT_TRUE(r);
    TruncatedSeries z3 = S("z3", 3, 8), z2 = S("z2", 3, 8);
    TruncatedSeries product = (z3 - z2 * *r) * (z3 + z2 * *r);
    EXPECT_EQ(product, S("z3^2 - z2^2 - z1*z2^2", 3, 8));
}

TEST(TsMul, OrderIsMinimumAndDimensionsChecked) {
    TruncatedSeries a = S("1 + z1 + z1^5", 1, 6);
    TruncatedSeries b = S("1 + z1", 1, 3);
    EXPECT_EQ((a * b).order(), 3u);
    EXPECT_EQ((a * b).body(), P("1 + 2*z1 + z1^2", 1));
    EXPECT_THROW(S("z1", 1, 2) * S("z1", 2, 2), DimensionMismatch);
}

TEST(TsMul, CommutativeAssociative) {
    Gen gen(21);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        unsigned order = static_cast<unsigned>(gen.integer(1, 6));
        TruncatedSeries a(gen.polynomial(n, 7), order), b(gen.polynomial(n, 7), order),
            c(gen.polynomial(n, 7), order);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(TsInverse, Examples) {
    EXPECT_EQ(inverse(S("1 - z1", 1, 2)), S("1 + z1 + z1^2", 1, 2));
    EXPECT_EQ(inverse(S("2", 1, 3)), S("1/2", 1, 3));
    EXPECT_EQ(inverse(S("1 + z1 + z2", 2, 1)), S("1 - z1 - z2", 2, 1));
    EXPECT_THROW(inverse(S("z1 + z2", 2, 3)), NotAUnit);
}

TEST(TsInverse, RandomUnits) {
    Gen gen(22);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        unsigned order = static_cast<unsigned>(gen.integer(0, 7));
        TruncatedSeries a = random_unit(gen, n, order, false);
        EXPECT_EQ(a * inverse(a), TruncatedSeries::constant(n, 1, order));
    }
}

TEST(TsSqrt, Examples) {
    auto a = square_root(S("1 + z1", 1, 3));
    ASSERT_TRUE(a);
    EXPECT_EQ(*a, S("1 + 1/2*z1 - 1/8*z1^2 + 1/16*z1^3", 1, 3));

    auto b = square_root(S("4 + 4*z1", 1, 2));
    ASSERT_TRUE(b);
    EXPECT_EQ(*b, S("2 + z1 - 1/4*z1^2", 1, 2));

    auto c = square_root(S("1", 2, 4));
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, S("1", 2, 4));

    EXPECT_FALSE(square_root(S("2", 1, 4)));
    EXPECT_FALSE(square_root(S("-1 + z1", 1, 4)));
    EXPECT_THROW(square_root(S("z1", 1, 4)), NotAUnit);
}

TEST(TsSqrt, MatchesBinomialSeries) {
    const unsigned order = 12;
    auto r = square_root(S("1 + z1", 1, order));
    ASSERT_TRUE(r);
    auto coeffs = binomial_half(order + 1);
    Polynomial expected(1);
    for (unsigned k = 0; k <= order; ++k) expected.add_term(Monomial{k}, coeffs[k]);
    EXPECT_EQ(r->body(), expected);
}

TEST(TsSqrt, RandomUnitsSquareBackAndAreUnique) {
    Gen gen(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        unsigned order = static_cast<unsigned>(gen.integer(1, 6));
        TruncatedSeries a = random_unit(gen, n, order, true);
        auto r = square_root(a);
        ASSERT_TRUE(r);
        EXPECT_EQ(*r * *r, a);
        EXPECT_GT(r->constant_term(), 0);

        // Any perturbation within the order breaks r^2 == a.
        Monomial m = gen.monomial(n, order);
        TruncatedSeries perturbed = *r + TruncatedSeries(Polynomial::term(m, gen.nonzero_rational()), order);
        EXPECT_NE(perturbed * perturbed, a);
    }
}

TEST(TruncatedSeries, TruncationConsistency) {
    Gen gen(24);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
        unsigned high = static_cast<unsigned>(gen.integer(2, 7));
        unsigned low = static_cast<unsigned>(gen.integer(0, static_cast<int>(high) - 1));
        TruncatedSeries a = random_unit(gen, n, high, true);
        TruncatedSeries b(gen.polynomial(n, high), high);
        EXPECT_EQ(inverse(a).truncated(low), inverse(a.truncated(low)));
        EXPECT_EQ(square_root(a)->truncated(low), *square_root(a.truncated(low)));
        EXPECT_EQ((a * b).truncated(low), a.truncated(low) * b.truncated(low));
    }
}

TEST(TruncatedSeries, ConstructionDropsHighDegrees) {
    TruncatedSeries a = S("1 + z1*z2 + z1^3", 2, 2);
    EXPECT_EQ(a.body(), P("1 + z1*z2", 2));
    EXPECT_TRUE(congruent(P("z1 + z1^3", 1), P("z1 - z1^4", 1), 2));
    EXPECT_FALSE(congruent(P("z1 + z1^3", 1), P("z1", 1), 3));
}

}  // namespace
}  // namespace germ
