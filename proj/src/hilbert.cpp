#include "hyposhift/hilbert.hpp"

#include <stdexcept>

namespace hyposhift::hilbert {

void validate(const GenHilbertParams& p) {
    if (p.k < 1) throw std::domain_error("generalized Hilbert: k must be >= 1");
    if (p.x <= 0) throw std::domain_error("generalized Hilbert: x must be positive");
    if (p.h <= 0) throw std::domain_error("generalized Hilbert: h must be positive");
}

SymMatrix build_generalized_hilbert(const GenHilbertParams& p) {
    validate(p);
    std::size_t n = static_cast<std::size_t>(p.k) + 1;
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.set(i, j, 1 / (Rational(static_cast<long long>(i + j)) * p.h + 1));
    m.set(0, 0, p.x);
    return m;
}

BigInt superfactorial(int k) {
    if (k < 0) throw std::domain_error("superfactorial: negative argument");
    BigInt out(1), fact(1);
    for (int i = 1; i <= k; ++i) {
        fact *= i;
        out *= fact;
    }
    return out;
}

namespace {

Rational c_step(const Rational& h, int m) {
    Rational mh = Rational(m) * h;
    Rational t = (mh + 1) / mh;
    return t * t;
}

Rational d_step(const Rational& h, int m) {
    Rational mh = Rational(m) * h;
    return (2 * mh + 1) / (mh * mh);
}

}  // namespace

Rational f_recursion(const Rational& x, const Rational& h, int k) {
    if (k < 0) throw std::domain_error("f: k must be >= 0");
    Rational f = x;
    for (int l = 1; l <= k; ++l) f = c_step(h, l) * f - d_step(h, l);
    return f;
}

Rational f_closed_form(const Rational& x, const Rational& h, int k) {
    if (k < 0) throw std::domain_error("f: k must be >= 0");
    // f = x prod_m c_m - sum_m d_m prod_{m' > m} c_{m'}
    Rational cprod(1), acc(0);
    for (int m = k; m >= 1; --m) {
        acc += d_step(h, m) * cprod;
        cprod *= c_step(h, m);
    }
    return x * cprod - acc;
}

Rational g_factor(const Rational& h, int k) {
    if (k < 1) throw std::domain_error("g: k must be >= 1");
    Rational out(1);
    for (int m = 1; m <= k; ++m)
        out *= rational_pow(1 / (Rational(m) * h + 1), m + 1);
    for (int j = 0; j < k; ++j)
        out *= rational_pow(1 / (Rational(2 * k - j) * h + 1), j + 1);
    return out;
}

Rational det_generalized_hilbert(const GenHilbertParams& p) {
    validate(p);
    Rational sf = Rational(superfactorial(p.k));
    return rational_pow(p.h, p.k * (p.k + 1)) * sf * sf * g_factor(p.h, p.k) *
           f_recursion(p.x, p.h, p.k);
}

Rational b_threshold(int k, const Rational& h) {
    if (k < 1) throw std::domain_error("b: k must be >= 1");
    if (h < 1) throw std::domain_error("b: requires h >= 1");
    Rational out(0), cprod(1);
    for (int m = 1; m <= k; ++m) {
        cprod *= c_step(h, m);
        out += d_step(h, m) / cprod;
    }
    return out;
}

bool is_psd_generalized_hilbert(const GenHilbertParams& p) {
    validate(p);
    if (p.h < 1) throw std::domain_error("positivity threshold: requires h >= 1");
    return p.x >= b_threshold(p.k, p.h);
}

Rational classical_hilbert_det(int k) {
    if (k < 0) throw std::domain_error("classical Hilbert: k must be >= 0");
    Rational sf = Rational(superfactorial(k));
    return rational_pow(sf, 4) / Rational(superfactorial(2 * k + 1));
}

}  // namespace hyposhift::hilbert
