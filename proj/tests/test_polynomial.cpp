#include <gtest/gtest.h>

#include "lsob/polynomial.hpp"

using namespace lsob;
using Q = Rational;
using P = Polynomial<Q>;

TEST(Polynomial, ZeroHasDegreeMinusOne) {
    P z;
    EXPECT_EQ(z.degree(), -1);
    EXPECT_TRUE((P{Q(0), Q(0)}).is_zero());
    EXPECT_EQ(lcoef(z).degree, -1);
}

TEST(Polynomial, ArithmeticTrims) {
    const P a{Q(1), Q(2), Q(1)};
    const P b{Q(-1), Q(0), Q(-1)};
    EXPECT_EQ((a + b), (P{Q(0), Q(2)}));
    EXPECT_EQ(P::linear_factor(Q(2)) * P::linear_factor(Q(-2)), (P{Q(-4), Q(0), Q(1)}));
    EXPECT_EQ(a(Q(3)), Q(16));
}

TEST(Polynomial, DerivativeAndTaylor) {
    const P p{Q(1), Q(1), Q(1), Q(1)};
    EXPECT_EQ(derivative(p), (P{Q(1), Q(2), Q(3)}));
    EXPECT_EQ(derivative(p, 3), P::constant(Q(6)));
    EXPECT_TRUE(derivative(p, 4).is_zero());
    // Taylor polynomial of degree 1 at y = 1: p(1) + p'(1)(x - 1)
    EXPECT_EQ(taylor_poly(p, Q(1), 1), (P{Q(4) - Q(6), Q(6)}));
}

TEST(Polynomial, DivisionRemainder) {
    const P num{Q(-1), Q(0), Q(0), Q(1)};
    const auto dr = divmod(num, P::linear_factor(Q(1)));
    EXPECT_EQ(dr.quotient, (P{Q(1), Q(1), Q(1)}));
    EXPECT_TRUE(dr.remainder.is_zero());
    EXPECT_THROW(exact_divide(num, P::linear_factor(Q(2))), InexactDivision);
}

TEST(Polynomial, FloatNegligible) {
    PrecisionScope s(128);
    Polynomial<BigFloat> r{ldexp(BigFloat(1), -100)};
    EXPECT_TRUE(negligible(r, BigFloat(1)));
    Polynomial<BigFloat> big{ldexp(BigFloat(1), -20)};
    EXPECT_FALSE(negligible(big, BigFloat(1)));
}

TEST(Polynomial, ComplexEvaluation) {
    PrecisionScope s(128);
    const auto p = to_bigfloat(P{Q(1), Q(0), Q(1)});
    const ComplexF v = evaluate(p, ComplexF(BigFloat(0), BigFloat(1)));
    EXPECT_TRUE(v.re.is_zero());
    EXPECT_TRUE(v.im.is_zero());
}
