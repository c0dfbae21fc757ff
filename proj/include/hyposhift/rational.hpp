#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>

namespace hyposhift {

// Exact arithmetic throughout. Expression templates are off so values can be
// captured in lambdas and returned from temporaries without dangling.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline Rational frac(long long num, long long den) {
    return Rational(num) / Rational(den);
}

// Accepts "n" or "n/d" with optional leading '-', base 10, d > 0 after
// normalization. Anything else (spaces, decimals, empty) yields nullopt.
std::optional<Rational> parse_rational(const std::string& s);

// Canonical form: "n" when the denominator is 1, else "n/d" with d > 0.
std::string to_string(const Rational& r);

Rational rational_pow(const Rational& base, int exp);

// Exact decimal rendering with the given number of fractional digits,
// rounding half to even. digits == 0 omits the point.
std::string render_decimal(const Rational& r, int digits);

// |sqrt(r) - scaled/10^digits| < 10^-digits, decided in exact arithmetic.
bool sqrt_within(const Rational& r, long long scaled, int digits);

}  // namespace hyposhift
