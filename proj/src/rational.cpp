#include "ellinv/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace ellinv {

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw InvalidSpecError("cannot rationalize a non-finite value");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(v, &exp); // v = m * 2^exp, |m| in [0.5, 1)
    // 53 mantissa bits make the scaled value an exact integer
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

namespace {

// Decimal digit string to integer. Leading zeros are stripped first so the
// big-integer parser cannot mistake them for a radix prefix ("025" must be
// twenty-five, not octal twenty-one).
BigInt big_from_digits(const std::string& digits, const std::string& original) {
    for (char ch : digits)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("malformed number: " + original);
    std::size_t nz = digits.find_first_not_of('0');
    if (nz == std::string::npos) return BigInt(0);
    return BigInt(digits.substr(nz));
}

BigInt signed_from_digits(std::string part, const std::string& original) {
    bool neg = false;
    if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
        neg = part[0] == '-';
        part.erase(0, 1);
    }
    if (part.empty()) throw ParseError("malformed number: " + original);
    BigInt v = big_from_digits(part, original);
    return neg ? -v : v;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty number");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("malformed fraction: " + text);
        BigInt n = signed_from_digits(num, text), d = signed_from_digits(den, text);
        if (d == 0) throw ParseError("zero denominator: " + text);
        return Rational(n, d);
    }

    // sign, integer part, optional fractional part, optional exponent
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string digits;
    long frac_len = 0;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits.push_back(s[i++]);
        any = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i++]);
            ++frac_len;
            any = true;
        }
    }
    long expo = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("malformed exponent: " + text);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            expo = expo * 10 + (s[i++] - '0');
        if (eneg) expo = -expo;
    }
    if (!any || i != s.size()) throw ParseError("malformed number: " + text);

    BigInt n = digits.empty() ? BigInt(0) : big_from_digits(digits, text);
    if (neg) n = -n;
    Rational r(n);
    long ten_power = expo - frac_len;
    BigInt pow10 = 1;
    for (long k = 0; k < std::abs(ten_power); ++k) pow10 *= 10;
    if (ten_power >= 0) r *= Rational(pow10);
    else r /= Rational(pow10);
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

} // namespace ellinv
