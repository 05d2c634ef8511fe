#ifndef LSOB_POLYNOMIAL_HPP
#define LSOB_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsob/complex.hpp"
#include "lsob/errors.hpp"
#include "lsob/kernels.hpp"
#include "lsob/scalar.hpp"

namespace lsob {

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The zero polynomial is the empty coefficient sequence and has degree -1.
/// Every other value has a nonzero leading coefficient.
template <Scalar T>
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }
    static Polynomial one() { return constant(T(1)); }
    /// x - root
    static Polynomial linear_factor(const T& root) { return Polynomial(std::vector<T>{T(-root), T(1)}); }
    static Polynomial monomial(int k, T value = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c.back() = std::move(value);
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const T> coefficients() const { return c_; }

    /// Coefficient of x^k; zero outside the stored range.
    T coeff(int k) const { return (k < 0 || k > degree()) ? T(0) : c_[static_cast<std::size_t>(k)]; }
    const T& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    /// Horner evaluation in the coefficient field.
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const {
        std::vector<T> c;
        c.reserve(c_.size());
        for (const T& v : c_) c.emplace_back(-v);
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
    Polynomial& operator*=(const T& s) {
        for (T& v : c_) v *= s;
        trim();
        return *this;
    }
    Polynomial& operator/=(const T& s) {
        for (T& v : c_) v /= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const T& s) { return a /= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::span<const T> ca = a.c_, cb = b.c_;
        return Polynomial(kernels::convolve(ca, cb, kernels::choose(ca.size() + cb.size() - 1)));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

   private:
    void trim() {
        while (!c_.empty() && lsob::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// (degree, leading coefficient); the zero polynomial reads (-1, 0).
template <Scalar T>
struct Lcoef {
    int degree;
    T leading;

    friend bool operator==(const Lcoef& a, const Lcoef& b) { return a.degree == b.degree && a.leading == b.leading; }
};

template <Scalar T>
Lcoef<T> lcoef(const Polynomial<T>& p) {
    if (p.is_zero()) return {-1, T(0)};
    return {p.degree(), p.leading()};
}

/// k-fold formal derivative.
template <Scalar T>
Polynomial<T> derivative(const Polynomial<T>& p, int k = 1) {
    if (k <= 0) return p;
    if (p.degree() < k) return Polynomial<T>();
    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(p.degree() - k + 1));
    for (int i = k; i <= p.degree(); ++i) {
        T factor(1);
        for (int m = 0; m < k; ++m) factor *= T(i - m);
        c.emplace_back(p.coeff(i) * factor);
    }
    return Polynomial<T>(std::move(c));
}

/// Taylor polynomial of degree k of f centred at y:
/// sum_{v=0}^{k} f^(v)(y) (x - y)^v / v!
template <Scalar T>
Polynomial<T> taylor_poly(const Polynomial<T>& f, const T& y, int k) {
    Polynomial<T> out;
    Polynomial<T> power = Polynomial<T>::one();
    const Polynomial<T> shift = Polynomial<T>::linear_factor(y);
    Polynomial<T> dv = f;
    T factorial(1);
    for (int v = 0; v <= k && !dv.is_zero(); ++v) {
        if (v > 0) {
            factorial *= T(v);
            power = power * shift;
            dv = derivative(dv);
        }
        out += power * T(dv(y) / factorial);
    }
    return out;
}

template <Scalar T>
T sup_norm(const Polynomial<T>& p) {
    T best(0);
    for (const T& v : p.coefficients()) {
        T a = abs_value(v);
        if (a > best) best = a;
    }
    return best;
}

template <Scalar T>
struct DivisionResult {
    Polynomial<T> quotient;
    Polynomial<T> remainder;
};

/// Euclidean division; `den` must be nonzero.
template <Scalar T>
DivisionResult<T> divmod(const Polynomial<T>& num, const Polynomial<T>& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial<T>(), num};
    std::vector<T> rem(num.coefficients().begin(), num.coefficients().end());
    const int dd = den.degree();
    std::vector<T> quot(static_cast<std::size_t>(num.degree() - dd) + 1, T(0));
    const T& lead = den.leading();
    for (int i = num.degree() - dd; i >= 0; --i) {
        T q = rem[static_cast<std::size_t>(i + dd)] / lead;
        if (!is_zero(q)) {
            for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= q * den.coeff(j);
        }
        // The leading slot is zero by construction; write it exactly.
        rem[static_cast<std::size_t>(i + dd)] = T(0);
        quot[static_cast<std::size_t>(i)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Relative tolerance used for float-mode identity checks: 2^(-precision/2).
inline BigFloat identity_tolerance() { return ldexp(BigFloat(1), -static_cast<long>(BigFloat::default_precision() / 2)); }

/// True when `residual` is zero: exactly in rational mode, and relative to
/// `scale` (a coefficient magnitude of the compared terms) in float mode.
template <Scalar T>
bool negligible(const Polynomial<T>& residual, const T& scale) {
    if constexpr (is_exact_v<T>) {
        (void)scale;
        return residual.is_zero();
    } else {
        return sup_norm(residual) <= identity_tolerance() * max(scale, BigFloat(1));
    }
}

/// Quotient of an exact division.
///
/// Throws InexactDivision when the remainder is nonzero (rational mode) or
/// exceeds 2^(-precision/2) * |num|_inf (float mode).
template <Scalar T>
Polynomial<T> exact_divide(const Polynomial<T>& num, const Polynomial<T>& den, const char* what = "exact_divide") {
    auto [q, r] = divmod(num, den);
    if (!negligible(r, sup_norm(num)))
        throw InexactDivision(std::string(what) + ": remainder of degree " + std::to_string(r.degree()));
    return q;
}

inline Polynomial<BigFloat> to_bigfloat(const Polynomial<Rational>& p) {
    std::vector<BigFloat> c;
    c.reserve(p.coefficients().size());
    for (const Rational& v : p.coefficients()) c.emplace_back(v);
    return Polynomial<BigFloat>(std::move(c));
}

inline Polynomial<BigFloat> to_bigfloat(const Polynomial<BigFloat>& p) {
    std::vector<BigFloat> c;
    c.reserve(p.coefficients().size());
    for (const BigFloat& v : p.coefficients()) c.emplace_back(v, BigFloat::default_precision());
    return Polynomial<BigFloat>(std::move(c));
}

/// Horner evaluation at a complex point.
inline ComplexF evaluate(const Polynomial<BigFloat>& p, const ComplexF& z) {
    ComplexF acc;
    const auto c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + ComplexF(c[i]);
    return acc;
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        T c = p.coeff(i);
        if (is_zero(c)) continue;
        if (!first) os << " + ";
        os << "(" << to_string(c) << ")";
        if (i > 0) os << "*x^" << i;
        first = false;
    }
    return os;
}

}  // namespace lsob

#endif  // LSOB_POLYNOMIAL_HPP
