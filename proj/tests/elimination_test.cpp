#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

namespace germ {
namespace {

using testing::Gen;
using testing::P;
using testing::Q;
using testing::euclid_resultant;
using testing::random_monicish;
using testing::specialize;

TEST(Resultant, Examples) {
    Polynomial cusp = P("z2^2 - z1^3", 2);
    EXPECT_EQ(resultant(cusp, derivative(cusp, 1), 1), P("-4*z1^3", 2));
    Polynomial f = P("z3^2 - z1*z2^2", 3);
    EXPECT_EQ(resultant(f, derivative(f, 2), 2), P("-4*z1*z2^2", 3));
    EXPECT_TRUE(resultant(P("(z2 - z1)*(z2 + 1)", 2), P("(z2 - z1)*(z2 - 2)", 2), 1).is_zero());
    // Res(y - a, y - b) = a - b
    EXPECT_EQ(resultant(P("z2 - z1", 2), P("z2 + 3", 2), 1), P("z1 + 3", 2));
}

TEST(Resultant, Errors) {
    EXPECT_THROW(resultant(P("z1", 2), P("z2", 2), 1), DegreeZero);
    EXPECT_THROW(resultant(P("z2", 2), P("z2", 3), 1), DimensionMismatch);
    EXPECT_THROW(resultant(P("z2", 2), P("z2", 2), 2), IndexOutOfRange);
}

TEST(Discriminant, Examples) {
    EXPECT_EQ(discriminant(P("z3^2 - z1*z2^2", 3), 2), P("4*z1*z2^2", 3));
    EXPECT_EQ(discriminant(P("z2^2 - z1^3", 2), 1), P("4*z1^3", 2));
    EXPECT_TRUE(discriminant(P("z2^2", 2), 1).is_zero());
    // y^3 + p y + q has discriminant -4 p^3 - 27 q^2; size 5 goes through Bareiss.
    EXPECT_EQ(discriminant(P("z2^3 - z1*z2 + z1", 2), 1), P("4*z1^3 - 27*z1^2", 2));
    EXPECT_EQ(discriminant(P("2*z2^2 + z1*z2", 2), 1), P("z1^2", 2));
}

TEST(Discriminant, Errors) {
    EXPECT_THROW(discriminant(P("z2 + z1", 2), 1), DegreeTooSmall);
    EXPECT_THROW(discriminant(P("z1*z2^2 + 1", 2), 1), NonConstantLeadingCoefficient);
}

TEST(Discriminant, MonicQuadraticIsASquaredMinusFourB) {
    Gen gen(41);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial a = gen.polynomial(2, 4), b = gen.polynomial(2, 4);
        Polynomial a3(3), b3(3);
        for (const auto& [m, c] : a.terms()) a3.add_term({m[0], m[1], 0}, c);
        for (const auto& [m, c] : b.terms()) b3.add_term({m[0], m[1], 0}, c);
        Polynomial f = P("z3^2", 3) + a3 * P("z3", 3) + b3;
        EXPECT_EQ(discriminant(f, 2), a3 * a3 - Rational(4) * b3);
    }
}

TEST(Resultant, SpecializationCommutes) {
    Gen gen(42);
    for (int instance = 0; instance < 10; ++instance) {
        std::size_t n = static_cast<std::size_t>(gen.integer(2, 3));
        std::size_t var = n - 1;
        Polynomial f = random_monicish(gen, n, var, static_cast<unsigned>(gen.integer(1, 3)));
        Polynomial g = random_monicish(gen, n, var, static_cast<unsigned>(gen.integer(1, 3)));
        Polynomial r = resultant(f, g, var);
        EXPECT_EQ(r.degree_in(var), 0u);
        for (int k = 0; k < 20; ++k) {
            Point p = gen.point(n);
            EXPECT_EQ(evaluate(r, p), euclid_resultant(specialize(f, p, var), specialize(g, p, var)))
                << format_poly(f) << " | " << format_poly(g);
        }
    }
}

TEST(Resultant, PlantedCommonFactorAndAntisymmetry) {
    Gen gen(43);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(2, 3));
        std::size_t var = n - 1;
        Polynomial h = random_monicish(gen, n, var, 1);
        Polynomial f = random_monicish(gen, n, var, static_cast<unsigned>(gen.integer(1, 2)));
        Polynomial g = random_monicish(gen, n, var, static_cast<unsigned>(gen.integer(1, 2)));
        EXPECT_TRUE(resultant(h * f, h * g, var).is_zero());

        unsigned df = f.degree_in(var), dg = g.degree_in(var);
        Polynomial fg = resultant(f, g, var), gf = resultant(g, f, var);
        EXPECT_EQ(gf, (df * dg) % 2 ? -fg : fg);
    }
}

TEST(Determinant, BareissMatchesCofactor) {
    Gen gen(44);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t size = static_cast<std::size_t>(gen.integer(2, 5));
        PolyMatrix m(size);
        for (auto& row : m)
            for (std::size_t c = 0; c < size; ++c)
                row.push_back(gen.integer(0, 3) == 0 ? Polynomial(2) : gen.polynomial(2, 2, 3));
        EXPECT_EQ(detail::bareiss_determinant(m, 2), detail::cofactor_determinant(m, 2));
    }
}

TEST(CoprimeAt, CounterexampleAtOrigin) {
    Polynomial f = P("z3^2 - z1*z2^2", 3);
    auto r = coprime_at(f, derivative(f, 2), {0, 0, 0}, 2);
    EXPECT_TRUE(r.coprime_germ_at_point);
    EXPECT_TRUE(r.vanishing_at_point);
    EXPECT_EQ(r.resultant, P("-4*z1*z2^2", 3));
    EXPECT_TRUE(r.shear.empty());
}

TEST(CoprimeAt, CommonFactorAndShear) {
    auto common = coprime_at(P("z2^2 - z1^2", 2), P("z2 - z1", 2), {0, 0}, 1);
    EXPECT_FALSE(common.coprime_germ_at_point);

    auto sheared = coprime_at(P("z1", 2), P("z2", 2), {0, 0}, 1);
    EXPECT_EQ(sheared.shear, (std::vector<Rational>{1, 0}));
    EXPECT_TRUE(sheared.coprime_germ_at_point);
    EXPECT_EQ(sheared.resultant, P("-z1", 2));

    auto away = coprime_at(P("z2^2 - z1", 2), P("z2 - 1", 2), {1, 1}, 1);
    EXPECT_TRUE(away.coprime_germ_at_point);
    EXPECT_TRUE(away.vanishing_at_point);
}

TEST(ZeroSetDiscrete, Examples) {
    EXPECT_TRUE(zero_set_discrete(P("-4*z1^3", 1), {0}));
    EXPECT_FALSE(zero_set_discrete(P("-4*z1*z2^2", 2), {0, 0}));
    EXPECT_TRUE(zero_set_discrete(P("-4*z1*z2^2", 2), {1, 1}));
    EXPECT_FALSE(zero_set_discrete(Polynomial(1), {0}));
    EXPECT_THROW(zero_set_discrete(P("z1", 1), {0, 0}), DimensionMismatch);
}

}  // namespace
}  // namespace germ
