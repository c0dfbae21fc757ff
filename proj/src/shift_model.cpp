#include "hyposhift/shift_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyposhift::shifts {

Measure::Measure(std::vector<Atom> atoms, Rational uniform_mass)
    : atoms_(std::move(atoms)), uniform_(std::move(uniform_mass)) {
    Rational total = uniform_;
    if (uniform_ < 0) throw std::domain_error("Measure: negative uniform mass");
    for (const auto& a : atoms_) {
        if (a.mass <= 0) throw std::domain_error("Measure: atom mass must be positive");
        if (a.location < 0 || a.location > 1)
            throw std::domain_error("Measure: atom location outside [0,1]");
        total += a.mass;
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        for (std::size_t j = i + 1; j < atoms_.size(); ++j)
            if (atoms_[i].location == atoms_[j].location)
                throw std::domain_error("Measure: duplicate atom location");
    if (total != 1) throw std::domain_error("Measure: total mass must be 1");
}

Measure Measure::point_mass(const Rational& location) {
    return Measure({{location, Rational(1)}}, Rational(0));
}

Rational measure_moment(const Measure& m, int n) {
    if (n < 0) throw std::domain_error("measure_moment: n must be >= 0");
    Rational out(0);
    for (const auto& a : m.atoms()) out += a.mass * rational_pow(a.location, n);
    if (m.uniform_mass() != 0) out += m.uniform_mass() / (n + 1);
    return out;
}

Seq Seq::constant(const Rational& value) {
    Seq s;
    s.tail_const_ = value;
    return s;
}

Seq Seq::then_constant(std::vector<Rational> head, const Rational& value) {
    Seq s;
    s.head_ = std::move(head);
    s.tail_const_ = value;
    return s;
}

Seq Seq::closed_form(std::vector<Rational> head, TailFn tail) {
    if (!tail) throw std::invalid_argument("Seq: null tail rule");
    Seq s;
    s.head_ = std::move(head);
    s.tail_fn_ = std::move(tail);
    return s;
}

Rational Seq::at(long long n) const {
    if (n < 0) throw std::out_of_range("Seq::at: negative index");
    if (n < static_cast<long long>(head_.size())) return head_[static_cast<std::size_t>(n)];
    return tail_fn_ ? tail_fn_(n) : tail_const_;
}

Rational shift_moment(const Shift1D& s, int n) {
    if (n < 0) throw std::domain_error("shift_moment: n must be >= 0");
    Rational out(1);
    for (int t = 0; t < n; ++t) out *= s.at(t);
    return out;
}

bool berger_match(const Shift1D& s, const Measure& m, int upto) {
    for (int n = 0; n <= upto; ++n)
        if (shift_moment(s, n) != measure_moment(m, n)) return false;
    return true;
}

Shift1D restriction_1d(const Shift1D& s, int m, int i) {
    if (m < 1 || i < 0 || i >= m)
        throw std::domain_error("restriction_1d: need m >= 1 and 0 <= i < m");
    auto value = [s, m, i](long long j) {
        Rational out(1);
        for (int t = 0; t < m; ++t) out *= s.at(static_cast<long long>(m) * j + i + t);
        return out;
    };
    std::size_t head_len = s.weight_sq.head_size();  // heads at least as long as the source's
    std::vector<Rational> head(head_len);
    for (std::size_t j = 0; j < head_len; ++j) head[j] = value(static_cast<long long>(j));
    return Shift1D{Seq::closed_form(std::move(head), value), rational_pow(s.norm_bound, m)};
}

Shift1D shift_from_measure(const Measure& m, int head_len) {
    if (head_len < 1) throw std::domain_error("shift_from_measure: head_len must be >= 1");
    Rational g1 = measure_moment(m, 1);
    if (g1 <= 0) throw std::domain_error("shift_from_measure: degenerate measure");
    auto value = [m](long long n) {
        if (n > static_cast<long long>(1 << 24))
            throw std::domain_error("shift_from_measure: index too large");
        Rational den = measure_moment(m, static_cast<int>(n));
        return measure_moment(m, static_cast<int>(n) + 1) / den;
    };
    std::vector<Rational> head(static_cast<std::size_t>(head_len));
    for (int j = 0; j < head_len; ++j) head[static_cast<std::size_t>(j)] = value(j);
    // moments of a measure on [0,1] are nonincreasing, so the norm bound is 1
    return Shift1D{Seq::closed_form(std::move(head), value), Rational(1)};
}

Shift2D::Shift2D(std::vector<Seq> alpha_rows, std::vector<Seq> beta_rows,
                 std::string family, KV params)
    : alpha_rows_(std::move(alpha_rows)),
      beta_rows_(std::move(beta_rows)),
      family_(std::move(family)),
      params_(std::move(params)) {
    if (alpha_rows_.empty() || beta_rows_.empty())
        throw std::invalid_argument("Shift2D: need at least one weight row each");
}

const Seq& Shift2D::alpha_row(long long k2) const {
    if (k2 < 0) throw std::out_of_range("Shift2D: negative row index");
    auto idx = std::min<std::size_t>(static_cast<std::size_t>(k2), alpha_rows_.size() - 1);
    return alpha_rows_[idx];
}

const Seq& Shift2D::beta_row(long long k2) const {
    if (k2 < 0) throw std::out_of_range("Shift2D: negative row index");
    auto idx = std::min<std::size_t>(static_cast<std::size_t>(k2), beta_rows_.size() - 1);
    return beta_rows_[idx];
}

Rational Shift2D::alpha_sq(long long k1, long long k2) const {
    return alpha_row(k2).at(k1);
}

Rational Shift2D::beta_sq(long long k1, long long k2) const {
    return beta_row(k2).at(k1);
}

KV Shift2D::family_record() const {
    KV out;
    out.emplace_back("family", family_);
    out.insert(out.end(), params_.begin(), params_.end());
    return out;
}

Rational gamma2(const Shift2D& s, long long k1, long long k2) {
    if (k1 < 0 || k2 < 0) throw std::domain_error("gamma2: indices must be >= 0");
    Rational out(1);
    for (long long i = 0; i < k1; ++i) out *= s.alpha_sq(i, 0);
    for (long long j = 0; j < k2; ++j) out *= s.beta_sq(k1, j);
    return out;
}

bool check_commuting(const Shift2D& s, long long window) {
    for (long long k1 = 0; k1 < window; ++k1)
        for (long long k2 = 0; k2 < window; ++k2)
            if (s.beta_sq(k1 + 1, k2) * s.alpha_sq(k1, k2) !=
                s.alpha_sq(k1, k2 + 1) * s.beta_sq(k1, k2))
                return false;
    return true;
}

std::string property_name(Property p, int k) {
    switch (p) {
        case Property::H1: return "H1";
        case Property::Hk: return "H" + std::to_string(k);
        case Property::Hinf: return "Hinf";
    }
    return "?";
}

namespace {

void require_unit_interval(const Rational& v, const char* what, bool closed_right) {
    if (v <= 0 || v > 1 || (!closed_right && v == 1))
        throw std::domain_error(std::string(what) +
                                (closed_right ? " must lie in (0,1]" : " must lie in (0,1)"));
}

}  // namespace

Shift2D make_kappa_shift(const Rational& a_sq, const Rational& kappa_sq) {
    if (a_sq <= 0 || a_sq > frac(1, 2))
        throw std::domain_error("kappa family: a_sq must lie in (0,1/2]");
    require_unit_interval(kappa_sq, "kappa family: kappa_sq", false);

    Seq alpha0 = Seq::closed_form({frac(3, 4) * kappa_sq}, [](long long n) {
        return Rational((n + 1) * (n + 3)) / Rational((n + 2) * (n + 2));
    });
    Seq alpha1 = Seq::then_constant({a_sq}, Rational(1));
    Seq beta0 = Seq::closed_form({kappa_sq}, [a_sq](long long n) {
        return 2 * a_sq * Rational(n + 1) / Rational(n + 2);
    });
    Seq beta1 = Seq::constant(Rational(1));

    return Shift2D({alpha0, alpha1}, {beta0, beta1}, "kappa",
                   {{"a2", to_string(a_sq)}, {"kappa2", to_string(kappa_sq)}});
}

Shift2D make_s1(const Rational& x_sq, const Rational& y_sq, const Rational& a_sq) {
    require_unit_interval(x_sq, "s1 family: x_sq", true);
    require_unit_interval(y_sq, "s1 family: y_sq", true);
    require_unit_interval(a_sq, "s1 family: a_sq", true);
    if (a_sq * y_sq > x_sq)
        throw std::domain_error("s1 family: requires a_sq * y_sq <= x_sq");

    Seq alpha0 = Seq::then_constant({x_sq}, Rational(1));
    Seq alpha1 = Seq::then_constant({a_sq}, Rational(1));
    Seq beta0 = Seq::then_constant({y_sq}, a_sq * y_sq / x_sq);
    Seq beta1 = Seq::constant(Rational(1));

    return Shift2D({alpha0, alpha1}, {beta0, beta1}, "s1",
                   {{"x2", to_string(x_sq)},
                    {"y2", to_string(y_sq)},
                    {"a2", to_string(a_sq)}});
}

Measure classA_measure(const Rational& p, const Rational& q, bool uniform) {
    if (p < 0 || q < 0 || p + q > 1)
        throw std::domain_error("classA family: need p, q >= 0 with p + q <= 1");
    Rational u = uniform ? 1 - p - q : Rational(0);
    if (!uniform && p + q != 1)
        throw std::domain_error("classA family: p + q must be 1 without a uniform part");
    if (q == 0 && u == 0)
        throw std::domain_error("classA family: need q > 0 or a uniform part");
    std::vector<Atom> atoms;
    if (p > 0) atoms.push_back({Rational(0), p});
    if (q > 0) atoms.push_back({Rational(1), q});
    return Measure(std::move(atoms), u);
}

Measure kappa_row0_measure(const Rational& kappa_sq) {
    require_unit_interval(kappa_sq, "kappa family: kappa_sq", false);
    return Measure({{Rational(0), 1 - kappa_sq},
                    {Rational(1), kappa_sq / 2}},
                   kappa_sq / 2);
}

Shift2D make_classA(const Rational& p, const Rational& q, bool uniform,
                    const Rational& y_sq, const Rational& a_sq) {
    Measure xi = classA_measure(p, q, uniform);
    require_unit_interval(y_sq, "classA family: y_sq", true);
    require_unit_interval(a_sq, "classA family: a_sq", true);

    Seq alpha0 = shift_from_measure(xi, 32).weight_sq;
    Seq alpha1 = Seq::then_constant({a_sq}, Rational(1));
    // beta(k1, 0) = a^2 y^2 / gamma_{k1} by commutativity with the flat rows.
    auto beta0_tail = [xi, y_sq, a_sq](long long k1) {
        if (k1 > static_cast<long long>(1 << 24))
            throw std::domain_error("classA family: index too large");
        return a_sq * y_sq / measure_moment(xi, static_cast<int>(k1));
    };
    std::vector<Rational> beta0_head{y_sq};
    for (long long k1 = 1; k1 < 32; ++k1) beta0_head.push_back(beta0_tail(k1));
    Seq beta0 = Seq::closed_form(std::move(beta0_head), beta0_tail);
    Seq beta1 = Seq::constant(Rational(1));

    return Shift2D({alpha0, alpha1}, {beta0, beta1}, "classA",
                   {{"p", to_string(p)},
                    {"q", to_string(q)},
                    {"uniform", uniform ? "1" : "0"},
                    {"y2", to_string(y_sq)},
                    {"a2", to_string(a_sq)}});
}

}  // namespace hyposhift::shifts
