#ifndef LSOB_BIGFLOAT_HPP
#define LSOB_BIGFLOAT_HPP

#include <mpfr.h>

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

namespace lsob {

/// Owning wrapper around an MPFR value.
///
/// Every value carries its own mantissa precision. Binary operations round
/// to the larger of the two operand precisions; values created from
/// integers, rationals or strings use the process-wide default precision
/// (see PrecisionScope). The default is deliberately global rather than
/// thread-local so that OpenMP workers spawned inside a scope agree with
/// the thread that opened it.
class BigFloat {
   public:
    BigFloat();
    template <std::integral I>
    BigFloat(I v) : BigFloat() {
        if constexpr (std::is_signed_v<I>)
            mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
        else
            mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
    }
    explicit BigFloat(double v);
    explicit BigFloat(const mpq_class& q);
    explicit BigFloat(const mpz_class& z);
    BigFloat(const BigFloat& other, mpfr_prec_t prec);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    /// Parses a decimal or scientific literal ("-2", "0.125", "1e-3").
    static BigFloat parse(std::string_view text);
    static BigFloat pi();

    static mpfr_prec_t default_precision();
    static void set_default_precision(mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits; 0 picks enough
    /// digits to round-trip the mantissa.
    std::string to_string(int digits = 0) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    BigFloat operator-() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

   private:
    struct Uninit {};
    BigFloat(Uninit, mpfr_prec_t prec);

    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
/// Euler gamma function.
BigFloat tgamma(const BigFloat& x);
/// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

/// Sets the default precision for the lifetime of the object.
class PrecisionScope {
   public:
    explicit PrecisionScope(mpfr_prec_t bits) : saved_(BigFloat::default_precision()) {
        BigFloat::set_default_precision(bits);
    }
    ~PrecisionScope() { BigFloat::set_default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

   private:
    mpfr_prec_t saved_;
};

}  // namespace lsob

#endif  // LSOB_BIGFLOAT_HPP
