#include <gtest/gtest.h>

#include <cmath>

#include "lsob/errors.hpp"
#include "lsob/linalg.hpp"

using namespace lsob;
using Q = Rational;

TEST(Linalg, ExactSolveNeedsPivoting) {
    Matrix<Q> a(3, 3);
    // leading zero forces a row swap
    a(0, 0) = 0, a(0, 1) = 1, a(0, 2) = 2;
    a(1, 0) = 1, a(1, 1) = 1, a(1, 2) = 1;
    a(2, 0) = 2, a(2, 1) = 0, a(2, 2) = 3;
    const std::vector<Q> x{Q(1), Q(-1, 2), Q(3)};
    std::vector<Q> b(3, Q(0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i] += a(i, j) * x[j];
    EXPECT_EQ(solve_linear(a, b), x);
}

TEST(Linalg, SingularThrows) {
    Matrix<Q> a(2, 2);
    a(0, 0) = 1, a(0, 1) = 2, a(1, 0) = 2, a(1, 1) = 4;
    EXPECT_THROW(solve_linear(a, std::vector<Q>{Q(1), Q(1)}), SingularSystem);
    PrecisionScope s(128);
    Matrix<BigFloat> f(2, 2);
    f(0, 0) = 1, f(0, 1) = 2, f(1, 0) = 2, f(1, 1) = 4;
    EXPECT_THROW(solve_linear(f, std::vector<BigFloat>{BigFloat(1), BigFloat(1)}), SingularSystem);
}

TEST(Linalg, FloatSolveAgreesWithExact) {
    PrecisionScope s(256);
    Matrix<Q> a(4, 4);
    Matrix<BigFloat> f(4, 4);
    std::vector<Q> b;
    std::vector<BigFloat> bf;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            a(i, j) = Q(1, i + j + 1);  // Hilbert
            f(i, j) = BigFloat(a(i, j));
        }
        b.push_back(Q(i + 1));
        bf.emplace_back(Q(i + 1));
    }
    const auto x = solve_linear(a, b);
    const auto xf = solve_linear(f, bf);
    for (int i = 0; i < 4; ++i) EXPECT_LT(abs(xf[i] - BigFloat(x[i])), ldexp(BigFloat(1), -200));
}

TEST(Linalg, LdlPivots) {
    Matrix<Q> a(2, 2);
    a(0, 0) = 4, a(0, 1) = 2, a(1, 0) = 2, a(1, 1) = 3;
    EXPECT_EQ(ldl_pivots(a), (std::vector<Q>{Q(4), Q(2)}));
    a(1, 1) = 1;
    const auto p = ldl_pivots(a);
    EXPECT_EQ(p.back(), Q(0));
}

TEST(Linalg, JacobiEigenvaluesOfSecondDifference) {
    PrecisionScope s(256);
    const int n = 9;
    Matrix<BigFloat> a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = 2;
        if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
    }
    const auto ev = symmetric_eigenvalues(a);
    ASSERT_EQ(ev.size(), static_cast<std::size_t>(n));
    const BigFloat pi = BigFloat::pi();
    for (int k = 1; k <= n; ++k) {
        const BigFloat t = pi * BigFloat(k) / BigFloat(n + 1);
        // 2 - 2 cos t = 4 sin^2(t/2), evaluated through the series-free identity
        const BigFloat exact = BigFloat(4 * std::pow(std::sin(t.to_double() / 2), 2));
        EXPECT_NEAR(ev[k - 1].to_double(), exact.to_double(), 1e-14);
    }
    // ascending order
    for (int k = 1; k < n; ++k) EXPECT_LT(ev[k - 1], ev[k]);
}
