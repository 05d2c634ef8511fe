#include <gtest/gtest.h>

#include "lsob/bigfloat.hpp"
#include "lsob/complex.hpp"
#include "lsob/errors.hpp"
#include "lsob/scalar.hpp"

using namespace lsob;

TEST(Rational, ParsesDecimalAndFraction) {
    EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
    EXPECT_EQ(parse_rational("010/3"), Rational(10, 3));
    EXPECT_EQ(parse_rational("0.0625"), Rational(1, 16));
}

TEST(Rational, RejectsGarbage) {
    EXPECT_THROW(parse_rational(""), ConfigError);
    EXPECT_THROW(parse_rational("abc"), ConfigError);
    EXPECT_THROW(parse_rational("1/0"), ConfigError);
    EXPECT_THROW(parse_rational("1.2.3"), ConfigError);
}

TEST(BigFloat, PrecisionScopeRestores) {
    const auto before = BigFloat::default_precision();
    {
        PrecisionScope s(512);
        EXPECT_EQ(BigFloat::default_precision(), 512);
        EXPECT_EQ(BigFloat(1).precision(), 512);
    }
    EXPECT_EQ(BigFloat::default_precision(), before);
}

TEST(BigFloat, ArithmeticAndRoundTrip) {
    PrecisionScope s(256);
    const BigFloat third = BigFloat(1) / BigFloat(3);
    EXPECT_LT(abs(third * BigFloat(3) - BigFloat(1)), ldexp(BigFloat(1), -250));
    EXPECT_EQ(BigFloat::parse(third.to_string()), third);
    EXPECT_EQ(BigFloat(Rational(1, 4)), BigFloat::parse("0.25"));
    EXPECT_NEAR(sqrt(BigFloat(2)).to_double(), 1.4142135623730951, 1e-15);
}

TEST(BigFloat, GammaMatchesFactorial) {
    PrecisionScope s(128);
    EXPECT_EQ(tgamma(BigFloat(6)), BigFloat(120));
    EXPECT_NEAR(tgamma(BigFloat(0.5)).to_double(), 1.7724538509055159, 1e-15);
}

TEST(BigFloat, BinaryOpsUseWiderPrecision) {
    const BigFloat a(BigFloat(1), 64);
    const BigFloat b(BigFloat(3), 200);
    EXPECT_EQ((a / b).precision(), 200);
}

TEST(Complex, Basics) {
    PrecisionScope s(128);
    const ComplexF z(BigFloat(3), BigFloat(4));
    EXPECT_EQ(abs(z), BigFloat(5));
    const ComplexF w = z * conj(z);
    EXPECT_EQ(w.re, BigFloat(25));
    EXPECT_TRUE(w.im.is_zero());
    const ComplexF q = z / z;
    EXPECT_LT(abs(q - ComplexF(BigFloat(1))), ldexp(BigFloat(1), -120));
}
