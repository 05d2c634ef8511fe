#include "lsob/sobolev.hpp"

#include <algorithm>
#include <string>

#include "lsob/errors.hpp"
#include "lsob/linalg.hpp"

namespace lsob {

template <Scalar T>
SobolevConfig<T>::SobolevConfig(T alpha, std::vector<MassPoint<T>> masses)
    : alpha_(std::move(alpha)), masses_(std::move(masses)) {
    if (!(alpha_ > T(-1))) throw ConfigError("alpha must exceed -1");
    for (const auto& m : masses_) {
        if (!(m.c < T(0))) throw ConfigError("mass point " + to_string(m.c) + " is not negative");
        bool any = false;
        for (const auto& [k, lam] : m.lambdas) {
            if (k < 0) throw ConfigError("negative derivative order at c=" + to_string(m.c));
            if (lam < T(0)) throw ConfigError("negative weight at c=" + to_string(m.c));
            if (lam > T(0)) any = true;
        }
        if (!any) throw ConfigError("mass point " + to_string(m.c) + " has no positive weight");
    }
    for (std::size_t a = 0; a < masses_.size(); ++a)
        for (std::size_t b = a + 1; b < masses_.size(); ++b)
            if (masses_[a].c == masses_[b].c) throw ConfigError("duplicate mass point " + to_string(masses_[a].c));

    auto top_order = [](const MassPoint<T>& m) {
        int d = -1;
        for (const auto& [k, lam] : m.lambdas)
            if (lam > T(0)) d = std::max(d, k);
        return d;
    };
    std::stable_sort(masses_.begin(), masses_.end(), [&](const MassPoint<T>& a, const MassPoint<T>& b) {
        const int da = top_order(a), db = top_order(b);
        if (da != db) return da < db;
        return a.c < b.c;
    });
    for (std::size_t j = 0; j < masses_.size(); ++j) {
        const int dj = top_order(masses_[j]);
        orders_.push_back(dj);
        d_ += dj + 1;
        for (const auto& [k, lam] : masses_[j].lambdas)
            if (lam > T(0)) terms_.push_back({static_cast<int>(j), k, masses_[j].c, lam});
    }
}

template <Scalar T>
int SobolevConfig<T>::term_index(int j, int k) const {
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].j == j && terms_[i].k == k) return static_cast<int>(i);
    return -1;
}

template <Scalar T>
T laguerre_inner(const LaguerreFamily<T>& fam, const Polynomial<T>& f, const Polynomial<T>& g) {
    const Polynomial<T> fg = f * g;
    T acc(0);
    for (int k = 0; k <= fg.degree(); ++k) acc += fg.coeff(k) * fam.moment(k);
    return acc;
}

template <Scalar T>
T sobolev_inner(const SobolevSystem<T>& sys, const Polynomial<T>& f, const Polynomial<T>& g) {
    T acc = laguerre_inner(sys.family(), f, g);
    for (const auto& t : sys.config().terms()) acc += t.lambda * derivative(f, t.k)(t.c) * derivative(g, t.k)(t.c);
    return acc;
}

namespace {

// Magnitude bound of <f, x^m>_S, used as the float-mode scale of orthogonality checks.
template <Scalar T>
T inner_scale(const SobolevSystem<T>& sys, const Polynomial<T>& f, int m) {
    T acc(0);
    for (int k = 0; k <= f.degree(); ++k) acc += abs_value(f.coeff(k)) * sys.family().moment(k + m);
    const Polynomial<T> xm = Polynomial<T>::monomial(m);
    for (const auto& t : sys.config().terms())
        acc += t.lambda * abs_value(derivative(f, t.k)(t.c)) * abs_value(derivative(xm, t.k)(t.c));
    return acc;
}

template <Scalar T>
bool negligible_scalar(const T& v, const T& scale) {
    if constexpr (is_exact_v<T>) {
        (void)scale;
        return is_zero(v);
    } else {
        return abs(v) <= identity_tolerance() * max(scale, BigFloat(1));
    }
}

template <Scalar T>
T factorial(int k) {
    T f(1);
    for (int i = 2; i <= k; ++i) f *= T(i);
    return f;
}

}  // namespace

template <Scalar T>
KernelSet<T> kernel_set(const SobolevSystem<T>& sys, int n) {
    if (n < 1) throw std::invalid_argument("kernel_set needs n >= 1");
    const auto& fam = sys.family();
    const auto& terms = sys.config().terms();
    const int ds = static_cast<int>(terms.size());

    KernelSet<T> ks;
    ks.n = n;
    ks.size = ds;
    ks.values.assign(static_cast<std::size_t>(ds) * static_cast<std::size_t>(ds), T(0));
    ks.polys.assign(static_cast<std::size_t>(ds), Polynomial<T>());

    // D[m][a] = (L_m)^{(k_a)}(c_a)
    std::vector<std::vector<T>> dvals(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        const Polynomial<T>& lm = fam.monic(m);
        for (const auto& t : terms) dvals[m].push_back(derivative(lm, t.k)(t.c));
    }
    for (int m = 0; m < n; ++m) {
        const T& hm = fam.norm(m);
        for (int a = 0; a < ds; ++a) {
            for (int b = 0; b < ds; ++b)
                ks.values[static_cast<std::size_t>(a * ds + b)] += dvals[m][a] * dvals[m][b] / hm;
            ks.polys[a] += fam.monic(m) * T(dvals[m][a] / hm);
        }
    }

    for (int b = 0; b < ds; ++b) {
        for (int a = 0; a < ds; ++a) {
            const T direct = derivative(ks.polys[b], terms[a].k)(terms[a].c);
            if (!negligible_scalar(T(direct - ks.at(a, b)), abs_value(ks.at(a, b))))
                throw IdentityViolation("kernel matrix disagrees with kernel polynomial at n=" + std::to_string(n));
        }
    }

    if constexpr (is_exact_v<T>) {
        // Closed Christoffel-Darboux form, multiplied out:
        // h_{n-1} (x - c)^{k+1} K^{(0,k)}(x, c) = k! (T_k(x,c;L_{n-1}) L_n - T_k(x,c;L_n) L_{n-1})
        const Polynomial<T>& ln = fam.monic(n);
        const Polynomial<T>& ln1 = fam.monic(n - 1);
        for (int b = 0; b < ds; ++b) {
            const auto& t = terms[b];
            Polynomial<T> lhs = ks.polys[b] * fam.norm(n - 1);
            for (int i = 0; i <= t.k; ++i) lhs = lhs * Polynomial<T>::linear_factor(t.c);
            Polynomial<T> rhs = (taylor_poly(ln1, t.c, t.k) * ln - taylor_poly(ln, t.c, t.k) * ln1) * factorial<T>(t.k);
            if (!(lhs == rhs))
                throw IdentityViolation("kernel sum disagrees with the closed form at n=" + std::to_string(n));
        }
    }

    if (n >= sys.config().total_degree() && ds > 0) {
        Matrix<T> km(ds, ds);
        km.data = ks.values;
        for (const T& p : ldl_pivots(km))
            if (!(p > T(0)))
                throw PositiveDefiniteViolation("kernel matrix not positive definite at n=" + std::to_string(n));
    }
    return ks;
}

template <Scalar T>
std::vector<T> solve_mass_derivatives(const SobolevSystem<T>& sys, int n) {
    const auto& terms = sys.config().terms();
    const int ds = static_cast<int>(terms.size());
    const Polynomial<T>& ln = sys.family().monic(n);
    std::vector<T> rhs;
    rhs.reserve(static_cast<std::size_t>(ds));
    for (const auto& t : terms) rhs.push_back(derivative(ln, t.k)(t.c));
    if (n == 0 || ds == 0) return rhs;

    const KernelSet<T> ks = kernel_set(sys, n);
    Matrix<T> m = Matrix<T>::identity(ds);
    for (int a = 0; a < ds; ++a)
        for (int b = 0; b < ds; ++b) m(a, b) += ks.at(a, b) * terms[b].lambda;
    return solve_linear(std::move(m), std::move(rhs));
}

template <Scalar T>
SobolevPolynomial<T> sobolev_poly(const SobolevSystem<T>& sys, int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    const auto& terms = sys.config().terms();
    SobolevPolynomial<T> sp;
    sp.n = n;
    sp.derivs_at_masses = solve_mass_derivatives(sys, n);
    sp.poly = sys.family().monic(n);
    if (n > 0 && !terms.empty()) {
        const KernelSet<T> ks = kernel_set(sys, n);
        for (std::size_t b = 0; b < terms.size(); ++b)
            sp.poly -= ks.polys[b] * T(terms[b].lambda * sp.derivs_at_masses[b]);
    }

    if (sp.poly.degree() != n || !sp.poly.is_monic())
        throw IdentityViolation("S_" + std::to_string(n) + " is not monic of degree n");
    for (std::size_t b = 0; b < terms.size(); ++b) {
        const T v = derivative(sp.poly, terms[b].k)(terms[b].c);
        if (!negligible_scalar(T(v - sp.derivs_at_masses[b]), abs_value(v)))
            throw IdentityViolation("S_" + std::to_string(n) + " derivative values disagree with the linear system");
    }
    for (int m = 0; m < n; ++m) {
        const T ip = sobolev_inner(sys, sp.poly, Polynomial<T>::monomial(m));
        if (!negligible_scalar(ip, inner_scale(sys, sp.poly, m)))
            throw IdentityViolation("S_" + std::to_string(n) + " is not orthogonal to x^" + std::to_string(m));
    }
    return sp;
}

template <Scalar T>
Polynomial<T> gram_schmidt_oracle(const SobolevSystem<T>& sys, int n) {
    std::vector<Polynomial<T>> basis;
    std::vector<T> norms;
    for (int k = 0; k <= n; ++k) {
        const Polynomial<T> xk = Polynomial<T>::monomial(k);
        Polynomial<T> p = xk;
        for (std::size_t i = 0; i < basis.size(); ++i) p -= basis[i] * T(sobolev_inner(sys, xk, basis[i]) / norms[i]);
        norms.push_back(sobolev_inner(sys, p, p));
        basis.push_back(std::move(p));
    }
    return basis.back();
}

template <Scalar T>
T sigma_from_sum(const SobolevSystem<T>& sys, const SobolevPolynomial<T>& sp) {
    if (sp.n < 1) throw std::invalid_argument("sigma_n needs n >= 1");
    const auto& terms = sys.config().terms();
    const Polynomial<T>& ln = sys.family().monic(sp.n);
    T acc(0);
    for (std::size_t b = 0; b < terms.size(); ++b)
        acc += terms[b].lambda * sp.derivs_at_masses[b] * derivative(ln, terms[b].k)(terms[b].c);
    return acc / sys.family().norm(sp.n - 1);
}

template <Scalar T>
SequentialOrderResult is_sequentially_ordered(const SobolevConfig<T>& cfg) {
    // Delta_0 = [min(0, order-0 points), inf); the running hull is [lo, inf),
    // whose interior is (lo, inf). Delta_k meets it iff max Delta_k > lo.
    T lo(0);
    for (const auto& t : cfg.terms())
        if (t.k == 0 && t.c < lo) lo = t.c;
    SequentialOrderResult res;
    for (int k = 1; k <= cfg.max_order(); ++k) {
        bool any = false;
        T kmin(0), kmax(0);
        for (const auto& t : cfg.terms()) {
            if (t.k != k) continue;
            if (!any || t.c < kmin) kmin = t.c;
            if (!any || t.c > kmax) kmax = t.c;
            any = true;
        }
        if (!any) continue;
        if (kmax > lo) {
            res.ordered = false;
            res.witness = k;
            return res;
        }
        if (kmin < lo) lo = kmin;
    }
    return res;
}

#define LSOB_INSTANTIATE(T)                                                                        \
    template class SobolevConfig<T>;                                                               \
    template T laguerre_inner(const LaguerreFamily<T>&, const Polynomial<T>&, const Polynomial<T>&); \
    template T sobolev_inner(const SobolevSystem<T>&, const Polynomial<T>&, const Polynomial<T>&);   \
    template KernelSet<T> kernel_set(const SobolevSystem<T>&, int);                                \
    template std::vector<T> solve_mass_derivatives(const SobolevSystem<T>&, int);                  \
    template SobolevPolynomial<T> sobolev_poly(const SobolevSystem<T>&, int);                      \
    template Polynomial<T> gram_schmidt_oracle(const SobolevSystem<T>&, int);                      \
    template T sigma_from_sum(const SobolevSystem<T>&, const SobolevPolynomial<T>&);               \
    template SequentialOrderResult is_sequentially_ordered(const SobolevConfig<T>&);

LSOB_INSTANTIATE(Rational)
LSOB_INSTANTIATE(BigFloat)

#undef LSOB_INSTANTIATE

}  // namespace lsob
