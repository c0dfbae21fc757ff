#include "hyposhift/powers.hpp"

#include <memory>
#include <stdexcept>

namespace hyposhift::powers {

using shifts::Seq;
using shifts::Shift2D;

void validate(const PowerSpec& ps) {
    if (ps.h < 1 || ps.l < 1)
        throw std::domain_error("power: exponents must be >= 1");
    if (ps.m < 0 || ps.m >= ps.h || ps.n < 0 || ps.n >= ps.l)
        throw std::domain_error("power: need 0 <= m < h and 0 <= n < l");
}

namespace {

constexpr long long kHeadLen = 48;

// Smallest row count J such that parent row l*(J-1) + n is already in the
// parent's repeating range of `rows` stored rows.
long long stable_row_count(std::size_t rows, int l, int n) {
    long long top = static_cast<long long>(rows) - 1 - n;
    if (top <= 0) return 1;
    return (top + l - 1) / l + 1;
}

}  // namespace

Shift2D power_restriction(const Shift2D& s, const PowerSpec& ps) {
    validate(ps);
    auto parent = std::make_shared<const Shift2D>(s);
    const int h = ps.h, l = ps.l, m = ps.m, n = ps.n;

    auto alpha_at = [parent, h, m](long long i, long long parent_row) {
        Rational out(1);
        for (int t = 0; t < h; ++t) out *= parent->alpha_sq(h * i + m + t, parent_row);
        return out;
    };
    auto beta_at = [parent, h, l, m, n](long long i, long long new_row) {
        Rational out(1);
        for (int t = 0; t < l; ++t)
            out *= parent->beta_sq(h * i + m, l * new_row + n + t);
        return out;
    };

    std::vector<Seq> alpha_rows;
    long long ja = stable_row_count(s.alpha_row_count(), l, n);
    for (long long j = 0; j < ja; ++j) {
        long long parent_row = static_cast<long long>(l) * j + n;
        std::vector<Rational> head(kHeadLen);
        for (long long i = 0; i < kHeadLen; ++i) head[static_cast<std::size_t>(i)] = alpha_at(i, parent_row);
        alpha_rows.push_back(Seq::closed_form(
            std::move(head),
            [alpha_at, parent_row](long long i) { return alpha_at(i, parent_row); }));
    }

    std::vector<Seq> beta_rows;
    long long jb = stable_row_count(s.beta_row_count(), l, n);
    for (long long j = 0; j < jb; ++j) {
        std::vector<Rational> head(kHeadLen);
        for (long long i = 0; i < kHeadLen; ++i)
            head[static_cast<std::size_t>(i)] = beta_at(i, j);
        beta_rows.push_back(
            Seq::closed_form(std::move(head), [beta_at, j](long long i) { return beta_at(i, j); }));
    }

    shifts::KV params = s.params();
    params.emplace_back("power", std::to_string(h) + "," + std::to_string(l) + ";" +
                                     std::to_string(m) + "," + std::to_string(n));
    return Shift2D(std::move(alpha_rows), std::move(beta_rows),
                   "power of " + s.family(), std::move(params));
}

Rational power_moments(const shifts::Shift2D& s, int h, int l, int k1, int k2) {
    if (k1 < 0 || k2 < 0) throw std::domain_error("power_moments: indices must be >= 0");
    PowerSpec ps{h, l, 0, 0};
    return gamma2(power_restriction(s, ps), k1, k2);
}

std::vector<S1Summand> s1_power_decompose(const Rational& x_sq, const Rational& y_sq,
                                          const Rational& a_sq, int h, int l) {
    shifts::make_s1(x_sq, y_sq, a_sq);  // reuse the family's parameter validation
    if (h < 1 || l < 1) throw std::domain_error("power: exponents must be >= 1");

    std::vector<S1Summand> out;
    out.push_back({SummandKind::original, 1, x_sq, y_sq, a_sq});
    if (h > 1)
        out.push_back({SummandKind::row, h - 1, Rational(1), a_sq * y_sq / x_sq, Rational(1)});
    if (l > 1) out.push_back({SummandKind::column, l - 1, a_sq, Rational(1), a_sq});
    if (h > 1 && l > 1)
        out.push_back({SummandKind::trivial, (h - 1) * (l - 1), Rational(1), Rational(1),
                       Rational(1)});
    return out;
}

}  // namespace hyposhift::powers
