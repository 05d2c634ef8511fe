#include "lsob/bigfloat.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

namespace lsob {

namespace {

std::atomic<mpfr_prec_t> g_default_precision{256};

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

mpfr_prec_t BigFloat::default_precision() { return g_default_precision.load(std::memory_order_relaxed); }

void BigFloat::set_default_precision(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw std::invalid_argument("precision out of range");
    g_default_precision.store(bits, std::memory_order_relaxed);
}

BigFloat::BigFloat(Uninit, mpfr_prec_t prec) { mpfr_init2(v_, prec); }

BigFloat::BigFloat() : BigFloat(Uninit{}, default_precision()) { mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(double v) : BigFloat(Uninit{}, default_precision()) { mpfr_set_d(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(const mpq_class& q) : BigFloat(Uninit{}, default_precision()) {
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& z) : BigFloat(Uninit{}, default_precision()) {
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other, mpfr_prec_t prec) : BigFloat(Uninit{}, prec) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(Uninit{}, other.precision()) { mpfr_set(v_, other.v_, MPFR_RNDN); }

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(Uninit{}, MPFR_PREC_MIN) { mpfr_swap(v_, other.v_); }

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::parse(std::string_view text) {
    BigFloat r;
    std::string s(text);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: '" + s + "'");
    return r;
}

BigFloat BigFloat::pi() {
    BigFloat r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    if (digits <= 0) digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Re", digits - 1, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(Uninit{}, precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x);
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x);
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x);
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x);
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(y.precision() >= x.precision() ? y : x);
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat tgamma(const BigFloat& x) {
    BigFloat r(x);
    mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
    BigFloat r(x);
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

}  // namespace lsob
