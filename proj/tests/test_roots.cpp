#include <gtest/gtest.h>

#include "common.hpp"
#include "lsob/roots.hpp"

using namespace lsob;
using lsob::testing::reference_zeros;
using lsob::testing::system_of;
using lsob::testing::worked_cases;
using Q = Rational;
using P = Polynomial<Q>;

TEST(Roots, SquareRootOfTwo) {
    PrecisionScope s(256);
    const auto zs = find_roots(P{Q(-2), Q(0), Q(1)});
    ASSERT_EQ(zs.size(), 2u);
    EXPECT_TRUE(zs.all_real());
    EXPECT_TRUE(zs.all_simple());
    const BigFloat r2 = sqrt(BigFloat(2));
    EXPECT_LT(abs(zs.roots[0].re + r2), BigFloat(1e-30));
    EXPECT_LT(abs(zs.roots[1].re - r2), BigFloat(1e-30));
}

TEST(Roots, IntegerRootsSorted) {
    PrecisionScope s(256);
    P p = P::one();
    for (int k = 10; k >= 1; --k) p *= P::linear_factor(Q(k));
    const auto zs = find_roots(p);
    ASSERT_EQ(zs.size(), 10u);
    for (int k = 1; k <= 10; ++k) EXPECT_LT(abs(zs.roots[k - 1].re - BigFloat(k)), BigFloat(1e-60));
    EXPECT_TRUE(zs.converged);
}

TEST(Roots, ConjugatePairs) {
    PrecisionScope s(192);
    // (x^2 + 1)(x - 3)
    const auto zs = find_roots(P{Q(1), Q(0), Q(1)} * P::linear_factor(Q(3)));
    ASSERT_EQ(zs.size(), 3u);
    EXPECT_FALSE(zs.all_real());
    EXPECT_EQ(zs.roots[0].re, zs.roots[1].re);
    EXPECT_EQ(zs.roots[0].im, -zs.roots[1].im);
    EXPECT_LT(zs.roots[0].im, BigFloat(0));
    EXPECT_TRUE(zs.roots[2].im.is_zero());
    EXPECT_EQ(real_roots_in(zs, BigFloat(0), std::nullopt), 1);
}

TEST(Roots, DoubleRootIsNotSimple) {
    PrecisionScope s(256);
    RootOptions opts;
    opts.strict = false;
    const auto zs = find_roots(P{Q(4), Q(4), Q(1)}, "double", opts);
    ASSERT_EQ(zs.size(), 2u);
    EXPECT_FALSE(zs.all_simple());
    for (const auto& z : zs.roots) EXPECT_LT(abs(z - ComplexF(BigFloat(-2))), BigFloat(1e-30));
}

TEST(Roots, FloatAndRationalInputAgree) {
    PrecisionScope s(256);
    const P p{Q(-7, 3), Q(1, 2), Q(5), Q(1)};
    const auto a = find_roots(p);
    const auto b = find_roots(to_bigfloat(p));
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(abs(a.roots[i] - b.roots[i]), BigFloat(1e-60));
}

TEST(Roots, SerialAndParallelAgree) {
    PrecisionScope s(256);
    SobolevSystem<Q> sys = system_of<Q>(worked_cases()[4]);
    const P p = sobolev_poly(sys, 12).poly;
    RootOptions par;
    par.exec = kernels::Exec::parallel;
    const auto a = find_roots(p);
    const auto b = find_roots(p, "", par);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.roots[i], b.roots[i]);
}

TEST(Roots, WorkedCasesMatchReference) {
    PrecisionScope s(256);
    const auto cases = worked_cases();
    const auto ref = reference_zeros();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        SobolevSystem<Q> sys = system_of<Q>(cases[i]);
        const auto zs = find_roots(sobolev_poly(sys, 12).poly);
        ASSERT_TRUE(zs.all_real()) << cases[i].name;
        ASSERT_TRUE(zs.all_simple()) << cases[i].name;
        for (std::size_t k = 0; k < 12; ++k) EXPECT_NEAR(zs.roots[k].re.to_double(), ref[i][k], 1e-4) << cases[i].name << " zero " << k;
    }
}

TEST(Roots, ZeroLocation) {
    PrecisionScope s(256);
    SobolevSystem<Q> ex5 = system_of<Q>(worked_cases()[4]);
    const auto loc = zero_location_check(ex5.config(), find_roots(sobolev_poly(ex5, 12).poly));
    EXPECT_EQ(loc.outside_count, 2);
    EXPECT_TRUE(loc.one_per_mass);
    EXPECT_TRUE(loc.rest_positive);
    // masses sorted canonically: (-1, order 1) first, (-2, order 2) second
    ASSERT_TRUE(loc.attracted[0].has_value());
    EXPECT_NEAR(loc.attracted[0]->re.to_double(), -1.69526, 1e-4);
    EXPECT_NEAR(loc.attracted[1]->re.to_double(), -2.86242, 1e-4);

    SobolevSystem<Q> ex1 = system_of<Q>(worked_cases()[0]);
    const auto loc1 = zero_location_check(ex1.config(), find_roots(sobolev_poly(ex1, 12).poly));
    EXPECT_EQ(loc1.outside_count, 0);
    EXPECT_FALSE(loc1.one_per_mass);
    EXPECT_FALSE(loc1.rest_positive);
}
