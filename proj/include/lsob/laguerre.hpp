#ifndef LSOB_LAGUERRE_HPP
#define LSOB_LAGUERRE_HPP

#include <deque>
#include <mutex>

#include "lsob/polynomial.hpp"

namespace lsob {

/// Monic generalized Laguerre polynomials for the weight x^alpha e^{-x} on
/// (0, inf), alpha > -1.
///
/// Polynomials, norms and moments are cached and the caches only grow.
/// Growth is guarded by a mutex; references returned by the accessors stay
/// valid for the lifetime of the family.
template <Scalar T>
class LaguerreFamily {
   public:
    explicit LaguerreFamily(T alpha);

    LaguerreFamily(const LaguerreFamily&) = delete;
    LaguerreFamily& operator=(const LaguerreFamily&) = delete;

    const T& alpha() const { return alpha_; }

    /// Recurrence coefficients beta_n = 2n + alpha + 1, gamma_n = n (n + alpha).
    T beta(int n) const { return T(T(2 * n + 1) + alpha_); }
    T gamma(int n) const { return T(T(n) * (T(n) + alpha_)); }

    /// L_n^alpha, built by the three-term recurrence and checked against
    /// the explicit binomial sum when first computed.
    const Polynomial<T>& monic(int n) const;

    /// h_n = n! Gamma(n + alpha + 1), the squared norm of L_n^alpha.
    /// Throws GammaUnavailable in rational mode unless alpha is an integer.
    const T& norm(int n) const;

    /// Moment int_0^inf x^k x^alpha e^{-x} dx = Gamma(alpha + k + 1).
    const T& moment(int k) const;

    /// L_n^alpha from the closed binomial form, independent of the cache.
    Polynomial<T> explicit_form(int n) const;

   private:
    void ensure_polys(int n) const;
    void ensure_moments(int k) const;

    T alpha_;
    mutable std::mutex mu_;
    mutable std::deque<Polynomial<T>> polys_;
    mutable std::deque<T> norms_;
    mutable std::deque<T> moments_;
};

enum class Ladder { down, up };

/// Classical ladder operators: down = (x/gamma_n) d/dx - (n/gamma_n) I,
/// up = -x d/dx + (x - n - alpha) I.
template <Scalar T>
Polynomial<T> classical_ladder(const LaguerreFamily<T>& fam, int n, Ladder direction, const Polynomial<T>& p);

/// x Y'' + (alpha + 1 - x) Y' + n Y for Y = L_n^alpha.
template <Scalar T>
Polynomial<T> classical_ode_residual(const LaguerreFamily<T>& fam, int n);

/// Gamma(alpha + 1). Rational mode needs a nonnegative integer alpha.
Rational gamma_alpha_plus_one(const Rational& alpha);
BigFloat gamma_alpha_plus_one(const BigFloat& alpha);

}  // namespace lsob

#endif  // LSOB_LAGUERRE_HPP
