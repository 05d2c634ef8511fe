#ifndef LSOB_COMPLEX_HPP
#define LSOB_COMPLEX_HPP

#include "lsob/scalar.hpp"

namespace lsob {

/// Complex number over one of the library scalars.
///
/// std::complex is only specified for the built-in floating types, so the
/// few operations the root finder and the field model need live here.
template <Scalar T>
struct Complex {
    T re;
    T im;

    Complex() : re(0), im(0) {}
    Complex(T r) : re(std::move(r)), im(0) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return is_zero(im); }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        T r = re * o.re - im * o.im;
        T i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        T den = o.re * o.re + o.im * o.im;
        T r = (re * o.re + im * o.im) / den;
        T i = (im * o.re - re * o.im) / den;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    Complex operator-() const { return Complex(T(-re), T(-im)); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <Scalar T>
Complex<T> conj(const Complex<T>& z) {
    return Complex<T>(z.re, T(-z.im));
}

/// |z|^2
template <Scalar T>
T norm(const Complex<T>& z) {
    return T(z.re * z.re + z.im * z.im);
}

inline BigFloat abs(const Complex<BigFloat>& z) { return sqrt(norm(z)); }

/// Principal argument in (-pi, pi].
inline BigFloat arg(const Complex<BigFloat>& z) { return atan2(z.im, z.re); }

using ComplexF = Complex<BigFloat>;

}  // namespace lsob

#endif  // LSOB_COMPLEX_HPP
