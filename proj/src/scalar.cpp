#include "lsob/scalar.hpp"

#include <cctype>
#include <cstdlib>

#include "lsob/errors.hpp"

namespace lsob {

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const BigFloat& x) { return x.to_string(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto fail = [&] { return ConfigError("not an exact number: '" + s + "'"); };
    if (s.empty()) throw fail();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string_view num = std::string_view(s).substr(0, slash);
        std::string_view den = std::string_view(s).substr(slash + 1);
        std::string_view num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
        if (!all_digits(num_digits) || !all_digits(den)) throw fail();
        const mpz_class zn(std::string{num_digits}, 10);
        const mpz_class zd(std::string{den}, 10);
        if (zd == 0) throw fail();
        Rational q(zn, zd);
        q.canonicalize();
        return num[0] == '-' ? Rational(-q) : q;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';

    std::string mantissa;
    long exponent = 0;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa.push_back(c);
            if (seen_point) --exponent;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (mantissa.empty()) throw fail();
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') throw fail();
        std::string_view exp_text = std::string_view(s).substr(pos + 1);
        std::string_view exp_digits =
            (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) ? exp_text.substr(1) : exp_text;
        if (!all_digits(exp_digits) || exp_digits.size() > 6) throw fail();
        exponent += std::strtol(std::string(exp_text).c_str(), nullptr, 10);
    }

    mpz_class num(mantissa, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

}  // namespace lsob
