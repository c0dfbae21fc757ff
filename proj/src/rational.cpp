#include "hyposhift/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hyposhift {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t slash = s.find('/');
    std::size_t num_begin = (s[0] == '-') ? 1 : 0;
    std::size_t num_end = (slash == std::string::npos) ? s.size() : slash;
    if (!all_digits(s, num_begin, num_end)) return std::nullopt;
    BigInt num(s.substr(num_begin, num_end - num_begin));
    if (s[0] == '-') num = -num;
    if (slash == std::string::npos) return Rational(num);
    if (!all_digits(s, slash + 1, s.size())) return std::nullopt;
    BigInt den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rational(num) / Rational(den);  // division canonicalizes
}

std::string to_string(const Rational& r) {
    return r.str();
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0 to a negative power");
        return 1 / rational_pow(base, -exp);
    }
    Rational result(1), b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

std::string render_decimal(const Rational& r, int digits) {
    if (digits < 0) throw std::domain_error("render_decimal: negative digit count");
    BigInt num = numerator(r), den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt t = num * scale;
    BigInt q = t / den, rem = t % den;
    BigInt twice = 2 * rem;
    if (twice > den || (twice == den && (q & 1) != 0)) ++q;  // half to even
    BigInt ip = q / scale, fp = q % scale;
    std::string out;
    if (neg && q != 0) out += '-';
    out += ip.str();
    if (digits > 0) {
        std::string f = fp.str();
        out += '.';
        out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
        out += f;
    }
    return out;
}

bool sqrt_within(const Rational& r, long long scaled, int digits) {
    if (r < 0 || scaled < 0) return false;
    Rational unit = rational_pow(Rational(10), -digits);
    Rational mid = Rational(scaled) * unit;
    Rational lo = mid - unit, hi = mid + unit;
    if (lo < 0) lo = 0;
    return lo * lo < r && r < hi * hi;
}

}  // namespace hyposhift
