#ifndef LSOB_TESTS_COMMON_HPP
#define LSOB_TESTS_COMMON_HPP

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

#include "lsob/sobolev.hpp"

namespace lsob::testing {

struct MassArg {
    int c;
    int k;
};

template <Scalar T>
SobolevConfig<T> make(int alpha, std::vector<MassArg> ms) {
    std::vector<MassPoint<T>> v;
    for (auto [c, k] : ms) {
        bool merged = false;
        for (auto& m : v)
            if (m.c == T(c)) {
                m.lambdas[k] = T(1);
                merged = true;
            }
        if (!merged) v.push_back({T(c), {{k, T(1)}}});
    }
    return SobolevConfig<T>(T(alpha), std::move(v));
}

/// The five worked cases plus the classical and order-0 configurations.
struct Case {
    std::string name;
    int alpha;
    std::vector<MassArg> masses;
};

inline std::vector<Case> worked_cases() {
    return {
        {"example1", 11, {{-2, 1}}},
        {"example2", 14, {{-2, 1}}},
        {"example3", 11, {{-2, 2}}},
        {"example4", 14, {{-1, 1}, {-2, 2}}},
        {"example5", 0, {{-1, 1}, {-2, 2}}},
    };
}

inline std::vector<Case> all_cases() {
    auto v = worked_cases();
    v.push_back({"intro", 0, {{-2, 1}}});
    v.push_back({"order0", 3, {{-2, 0}}});
    v.push_back({"two_orders_one_point", 2, {{-3, 0}, {-3, 1}}});
    v.push_back({"classical11", 11, {}});
    return v;
}

template <Scalar T>
SobolevSystem<T> system_of(const Case& c) {
    return SobolevSystem<T>(make<T>(c.alpha, c.masses));
}

/// Reference zeros of S_12 for the five worked cases (4 to 6 significant digits).
inline std::vector<std::vector<double>> reference_zeros() {
    return {
        {3.0537, 5.16053, 7.53124, 10.2434, 13.3451, 16.8869, 20.9337, 25.5751, 30.9455, 37.2657, 44.9569, 55.0972},
        {4.7832, 7.23584, 9.92786, 12.9448, 16.3404, 20.1693, 24.4992, 29.4232, 35.0794, 41.6941, 49.6983, 60.1956},
        {3.35093, 5.41033, 7.75809, 10.456, 13.5478, 17.0825, 21.1239, 25.7612, 31.1283, 37.4459, 45.1347, 55.2729},
        {4.78339, 7.23607, 9.9281, 12.9451, 16.3407, 20.1695, 24.4995, 29.4235, 35.0797, 41.6944, 49.6986, 60.196},
        {-2.86242, -1.69526, 0.284629, 1.36447, 3.03668, 5.23686, 7.98826, 11.3572, 15.4574, 20.4841, 26.8154, 35.422},
    };
}

/// Reference Hessian spectra for the five worked cases.
inline std::vector<std::vector<double>> reference_eigenvalues() {
    return {
        {0.0127, 0.0304, 0.0517, 0.0778, 0.1102, 0.1509, 0.2033, 0.2722, 0.3653, 0.495, 0.6825, 0.9661},
        {0.0152, 0.0344, 0.0576, 0.0861, 0.1219, 0.1678, 0.2279, 0.3094, 0.4241, 0.5942, 0.8665, 1.3566},
        {0.0126, 0.0303, 0.0516, 0.0777, 0.1101, 0.151, 0.2038, 0.2737, 0.3689, 0.5042, 0.7066, 1.0321},
        {0.0117, 0.0278, 0.0469, 0.0699, 0.0978, 0.1322, 0.1752, 0.2301, 0.3016, 0.3973, 0.5292, 0.7179},
        {-45.8083, -27.1075, 0.0188, 0.0473, 0.0853, 0.1377, 0.213, 0.3272, 0.5154, 0.8688, 1.7428, 7.4559},
    };
}

/// An external field written out as factors, in double precision:
/// h''(x) = 1/2 [ell1/x^2 + sum ell2/(x-c)^2 - sum 1/(x-e)^2 + sum (log tau)''],
/// tau(x) = a0 + a1 x + x^2.
struct FactoredField {
    double ell1;
    std::vector<std::pair<double, double>> masses;  ///< (c, ell2)
    std::vector<double> linear;                     ///< real e
    std::vector<std::pair<double, double>> quadratics;  ///< (a0, a1)

    double second(double x) const {
        double acc = ell1 / (x * x);
        for (auto [c, l] : masses) acc += l / ((x - c) * (x - c));
        for (double e : linear) acc -= 1.0 / ((x - e) * (x - e));
        for (auto [a0, a1] : quadratics) {
            const double t = a0 + a1 * x + x * x;
            const double tp = a1 + 2 * x;
            acc += (2 * t - tp * tp) / (t * t);
        }
        return acc / 2;
    }
};

/// Reference fields of the five worked cases, except that the quadratic
/// of case 3 carries +1.63056 x (the tabulated sign puts the pair at
/// positive real part, off the zeros of phi_1) and case 5 uses the mass
/// points of its inner product.
inline std::vector<FactoredField> reference_fields() {
    return {
        {12, {{-2, 3}}, {-0.528573, -1.7501, 1.40334}, {}},
        {15, {{-2, 3}}, {-1.87468}, {{4.25297, 4.10532}}},
        {12, {{-2, 4}}, {-0.0989292, -1.64715}, {{5.72898, 1.63056}}},
        {15, {{-1, 3}, {-2, 4}}, {-0.933652}, {{1.07168, 2.06058}, {3.19751, 3.56774}, {4.99621, 4.42482}}},
        {1, {{-1, 3}, {-2, 4}}, {-1.44591, -1.78194, -2.7333}, {{0.440466, 1.23097}, {2.76889, 3.19398}}},
    };
}

/// Double-precision Hessian spectrum of the logarithmic energy in a field.
inline std::vector<double> oracle_eigenvalues(const std::vector<double>& x, const FactoredField& f) {
    const int n = static_cast<int>(x.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            const double t = 1.0 / ((x[k] - x[j]) * (x[k] - x[j]));
            h(k, j) = -t;
            h(k, k) += t;
        }
        h(k, k) += f.second(x[k]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    return {ev.data(), ev.data() + n};
}

}  // namespace lsob::testing

#endif  // LSOB_TESTS_COMMON_HPP
