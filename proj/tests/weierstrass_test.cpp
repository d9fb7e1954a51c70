#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

namespace germ {
namespace {

using testing::Gen;
using testing::P;
using testing::random_regular;

TEST(RegularOrder, Examples) {
    auto a = regular_order(P("z3^2 - z1*z2^2", 3), 2);
    EXPECT_TRUE(a.regular);
    EXPECT_EQ(a.order, 2u);
    EXPECT_TRUE(a.shear.empty());

    auto b = regular_order(P("z1*z2", 2), 1);
    EXPECT_FALSE(b.regular);
    EXPECT_EQ(b.order, infinite_order);

    auto c = regular_order(P("z2^2 - z1^3", 2), 1);
    EXPECT_TRUE(c.regular);
    EXPECT_EQ(c.order, 2u);

    EXPECT_THROW(regular_order(Polynomial(2), 0), ZeroPolynomial);
}

TEST(MakeRegular, Examples) {
    auto a = make_regular(P("z3^2 - z1*z2^2", 3), 2);
    EXPECT_EQ(a.poly, P("z3^2 - z1*z2^2", 3));
    EXPECT_TRUE(a.report.shear.empty());

    auto b = make_regular(P("z1*z2", 2), 1);
    EXPECT_EQ(b.poly, P("z1*z2 + z2^2", 2));
    EXPECT_EQ(b.report.order, 2u);
    EXPECT_EQ(b.report.shear, (std::vector<Rational>{1, 0}));

    auto c = make_regular(P("z1", 2), 1);
    EXPECT_EQ(c.poly, P("z1 + z2", 2));
    EXPECT_EQ(c.report.order, 1u);
}

TEST(MakeRegular, Errors) {
    EXPECT_THROW(make_regular(Polynomial(2), 1), ZeroPolynomial);
    EXPECT_THROW(make_regular(P("1 + z1", 2), 1), InvalidArgument);
    // A uniform shear cannot separate z1 and z2.
    EXPECT_THROW(make_regular(P("z1 - z2", 3), 2), ShearExhausted);
    EXPECT_THROW(make_regular(P("z1 - z2", 3), 2, 3), NotRegular);
}

TEST(MakeRegular, ShearSequence) {
    std::vector<Rational> seq;
    for (unsigned k = 0; k < 5; ++k) seq.push_back(shear_candidate(k));
    EXPECT_EQ(seq, (std::vector<Rational>{0, 1, -1, 2, -2}));
    // f(c z2, z2) = (c^3 - c) z2^3 vanishes for c = 0, 1, -1; c = 2 works.
    auto r = make_regular(P("z1^3 - z1*z2^2", 2), 1);
    EXPECT_EQ(r.report.shear, (std::vector<Rational>{2, 0}));
    EXPECT_EQ(r.poly, P("z1^3 + 6*z1^2*z2 + 11*z1*z2^2 + 6*z2^3", 2));
}

TEST(WeierstrassPrepare, Examples) {
    auto a = weierstrass_prepare(P("z3^2 - z1*z2^2", 3), 2, 8);
    EXPECT_EQ(a.degree, 2u);
    EXPECT_EQ(a.unit, TruncatedSeries(P("1", 3), 8));
    EXPECT_TRUE(a.coefficients[0].is_zero());
    EXPECT_EQ(a.coefficients[1].body(), P("-z1*z2^2", 3));
    EXPECT_EQ(a.polynomial().body(), P("z3^2 - z1*z2^2", 3));

    auto b = weierstrass_prepare(P("z2 + z2^2", 2), 1, 4);
    EXPECT_EQ(b.degree, 1u);
    EXPECT_EQ(b.unit.body(), P("1 + z2", 2));
    EXPECT_EQ(b.polynomial().body(), P("z2", 2));

    auto c = weierstrass_prepare(P("z2^2 - z1^3", 2), 1, 6);
    EXPECT_EQ(c.unit.body(), P("1", 2));
    EXPECT_EQ(c.polynomial().body(), P("z2^2 - z1^3", 2));
}

TEST(WeierstrassPrepare, NontrivialUnit) {
    // (1 + z1) z2 - z1 = (1 + z1) (z2 - z1/(1 + z1)).
    auto w = weierstrass_prepare(P("z2 + z1*z2 - z1", 2), 1, 5);
    EXPECT_EQ(w.unit.body(), P("1 + z1", 2));
    EXPECT_EQ(w.coefficients[0].body(), P("-z1 + z1^2 - z1^3 + z1^4 - z1^5", 2));
}

TEST(WeierstrassPrepare, Errors) {
    EXPECT_THROW(weierstrass_prepare(P("z1*z2", 2), 1, 4), NotRegular);
    EXPECT_THROW(weierstrass_prepare(P("z2^3 - z1", 2), 1, 2), OrderTooSmall);
    EXPECT_THROW(weierstrass_prepare(P("1 + z2", 2), 1, 4), InvalidArgument);
}

TEST(WeierstrassPrepare, RandomMultiplyBackAndInvariants) {
    Gen gen(31);
    const unsigned order = 8;
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        std::size_t var = n - 1;
        Polynomial f = random_regular(gen, n, var);
        auto reg = regular_order(f, var);
        auto w = weierstrass_prepare(f, var, order);

        ASSERT_EQ(w.degree, reg.order);
        EXPECT_TRUE(congruent((w.unit * w.polynomial()).body(), f, order)) << format_poly(f);
        Monomial y_d(n, 0);
        y_d[var] = w.degree;
        EXPECT_EQ(w.unit.constant_term(), f.coefficient(y_d));
        for (const auto& e : w.coefficients) {
            EXPECT_EQ(e.constant_term(), 0);
            EXPECT_EQ(e.body().degree_in(var), 0u);
        }
        // w(0, ..., 0, y) = y^d
        Polynomial restricted = w.polynomial().body().filtered(
            [var](const Monomial& m) { return total_degree(m) == m[var]; });
        EXPECT_EQ(restricted, Polynomial::term(y_d, 1));
        EXPECT_EQ(weierstrass_prepare(f, var, order), w);
    }
}

}  // namespace
}  // namespace germ
