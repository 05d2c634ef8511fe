#ifndef LSOB_SCALAR_HPP
#define LSOB_SCALAR_HPP

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

#include "lsob/bigfloat.hpp"

namespace lsob {

/// Exact rational; gmpxx keeps it gcd-reduced with a positive denominator
/// after every operation.
using Rational = mpq_class;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "rational";
};

template <>
struct ScalarTraits<BigFloat> {
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "float";
};

/// The two coefficient fields the library is instantiated for.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, BigFloat>;

template <Scalar T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const BigFloat& x) { return x.is_zero(); }

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const BigFloat& x) { return x.sign(); }

inline Rational abs_value(const Rational& q) { return abs(q); }
inline BigFloat abs_value(const BigFloat& x) { return abs(x); }

inline BigFloat to_bigfloat(const Rational& q) { return BigFloat(q); }
inline BigFloat to_bigfloat(const BigFloat& x) { return BigFloat(x, BigFloat::default_precision()); }

/// "p/q" for rationals, scientific notation at full precision for floats.
std::string to_string(const Rational& q);
std::string to_string(const BigFloat& x);

/// Parses decimal ("-0.25", "1e-3") or fractional ("3/4") literals exactly.
Rational parse_rational(std::string_view text);

template <Scalar T>
T parse_scalar(std::string_view text) {
    if constexpr (is_exact_v<T>)
        return parse_rational(text);
    else {
        // Fractions are parsed exactly and rounded once.
        if (text.find('/') != std::string_view::npos) return BigFloat(parse_rational(text));
        return BigFloat::parse(text);
    }
}

/// True when q is an integer.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lsob

#endif  // LSOB_SCALAR_HPP
