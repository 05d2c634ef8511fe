#include "lsob/laguerre.hpp"

#include <string>

namespace lsob {

Rational gamma_alpha_plus_one(const Rational& alpha) {
    if (!is_integer(alpha) || sgn(alpha) < 0)
        throw GammaUnavailable("exact Gamma needs a nonnegative integer alpha, got " + to_string(alpha));
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), alpha.get_num().get_ui());
    return Rational(f);
}

BigFloat gamma_alpha_plus_one(const BigFloat& alpha) { return tgamma(alpha + BigFloat(1)); }

template <Scalar T>
LaguerreFamily<T>::LaguerreFamily(T alpha) : alpha_(std::move(alpha)) {
    if (!(alpha_ > T(-1))) throw ConfigError("alpha must exceed -1");
    polys_.push_back(Polynomial<T>::one());
    polys_.push_back(Polynomial<T>{T(-(alpha_ + T(1))), T(1)});
}

template <Scalar T>
Polynomial<T> LaguerreFamily<T>::explicit_form(int n) const {
    // (-1)^n n! sum_k binom(n + alpha, n - k) (-x)^k / k!
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    T n_fact(1);
    for (int i = 2; i <= n; ++i) n_fact *= T(i);
    for (int k = 0; k <= n; ++k) {
        const int m = n - k;
        T binom(1);
        for (int i = 0; i < m; ++i) binom *= T(T(n - i) + alpha_) / T(i + 1);
        T k_fact(1);
        for (int i = 2; i <= k; ++i) k_fact *= T(i);
        T term = n_fact * binom / k_fact;
        if ((n + k) % 2 != 0) term = -term;
        c[static_cast<std::size_t>(k)] = std::move(term);
    }
    return Polynomial<T>(std::move(c));
}

template <Scalar T>
void LaguerreFamily<T>::ensure_polys(int n) const {
    while (static_cast<int>(polys_.size()) <= n) {
        const int k = static_cast<int>(polys_.size()) - 1;
        // L_{k+1} = (x - beta_k) L_k - gamma_k L_{k-1}
        Polynomial<T> next = Polynomial<T>::linear_factor(beta(k)) * polys_[k] - polys_[k - 1] * gamma(k);
        Polynomial<T> check = explicit_form(k + 1);
        if (!negligible(Polynomial<T>(next - check), sup_norm(check)))
            throw IdentityViolation("Laguerre recurrence disagrees with the binomial form at n=" +
                                    std::to_string(k + 1));
        polys_.push_back(std::move(next));
    }
}

template <Scalar T>
const Polynomial<T>& LaguerreFamily<T>::monic(int n) const {
    if (n < 0) throw std::out_of_range("negative Laguerre degree");
    std::lock_guard lock(mu_);
    ensure_polys(n);
    return polys_[static_cast<std::size_t>(n)];
}

template <Scalar T>
const T& LaguerreFamily<T>::norm(int n) const {
    if (n < 0) throw std::out_of_range("negative Laguerre degree");
    std::lock_guard lock(mu_);
    if (norms_.empty()) norms_.push_back(gamma_alpha_plus_one(alpha_));
    while (static_cast<int>(norms_.size()) <= n) {
        // h_{k} = k (k + alpha) h_{k-1}
        const int k = static_cast<int>(norms_.size());
        norms_.push_back(T(norms_.back() * gamma(k)));
    }
    return norms_[static_cast<std::size_t>(n)];
}

template <Scalar T>
const T& LaguerreFamily<T>::moment(int k) const {
    if (k < 0) throw std::out_of_range("negative moment index");
    std::lock_guard lock(mu_);
    if (moments_.empty()) moments_.push_back(gamma_alpha_plus_one(alpha_));
    while (static_cast<int>(moments_.size()) <= k) {
        // Gamma(z + 1) = z Gamma(z) with z = alpha + j
        const int j = static_cast<int>(moments_.size());
        moments_.push_back(T(moments_.back() * T(alpha_ + T(j))));
    }
    return moments_[static_cast<std::size_t>(k)];
}

template <Scalar T>
Polynomial<T> classical_ladder(const LaguerreFamily<T>& fam, int n, Ladder direction, const Polynomial<T>& p) {
    if (n < 1) throw std::invalid_argument("classical ladder needs n >= 1");
    const Polynomial<T> x = Polynomial<T>::monomial(1);
    if (direction == Ladder::down) {
        const T g = fam.gamma(n);
        return (x * derivative(p) - p * T(n)) / g;
    }
    return -(x * derivative(p)) + Polynomial<T>{T(-(T(n) + fam.alpha())), T(1)} * p;
}

template <Scalar T>
Polynomial<T> classical_ode_residual(const LaguerreFamily<T>& fam, int n) {
    const Polynomial<T>& y = fam.monic(n);
    const Polynomial<T> x = Polynomial<T>::monomial(1);
    const Polynomial<T> coeff1{T(fam.alpha() + T(1)), T(-1)};
    return x * derivative(y, 2) + coeff1 * derivative(y) + y * T(n);
}

template class LaguerreFamily<Rational>;
template class LaguerreFamily<BigFloat>;
template Polynomial<Rational> classical_ladder(const LaguerreFamily<Rational>&, int, Ladder,
                                               const Polynomial<Rational>&);
template Polynomial<BigFloat> classical_ladder(const LaguerreFamily<BigFloat>&, int, Ladder,
                                               const Polynomial<BigFloat>&);
template Polynomial<Rational> classical_ode_residual(const LaguerreFamily<Rational>&, int);
template Polynomial<BigFloat> classical_ode_residual(const LaguerreFamily<BigFloat>&, int);

}  // namespace lsob
