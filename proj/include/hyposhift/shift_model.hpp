#pragma once

#include "hyposhift/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyposhift::shifts {

struct Atom {
    Rational location;
    Rational mass;
};

// Finitely atomic probability measure on [0, 1], optionally with a uniform
// (Lebesgue) component. Total mass must be exactly 1.
class Measure {
public:
    Measure(std::vector<Atom> atoms, Rational uniform_mass);
    static Measure point_mass(const Rational& location);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const Rational& uniform_mass() const { return uniform_; }

private:
    std::vector<Atom> atoms_;
    Rational uniform_;
};

// n-th power moment, n >= 0.
Rational measure_moment(const Measure& m, int n);

// Total sequence of rationals: an explicit head, then either a constant tail
// or a closed-form rule evaluated at the absolute index.
class Seq {
public:
    using TailFn = std::function<Rational(long long)>;

    static Seq constant(const Rational& value);
    static Seq then_constant(std::vector<Rational> head, const Rational& value);
    static Seq closed_form(std::vector<Rational> head, TailFn tail);

    Rational at(long long n) const;
    std::size_t head_size() const { return head_.size(); }

private:
    Seq() = default;
    std::vector<Rational> head_;
    Rational tail_const_ = Rational(1);
    TailFn tail_fn_;
};

// One-variable weighted shift given by its squared weights.
struct Shift1D {
    Seq weight_sq;
    Rational norm_bound = Rational(1);

    Rational at(long long n) const { return weight_sq.at(n); }
};

// gamma_n = product of the first n squared weights (gamma_0 = 1).
Rational shift_moment(const Shift1D& s, int n);

// True when gamma_n(s) equals the n-th moment of m for all n = 0..upto.
bool berger_match(const Shift1D& s, const Measure& m, int upto);

// Weights of the m-th power of s restricted to the invariant subspace with
// index offset i (0 <= i < m): new weight_sq(j) = prod_{t<m} s(mj + i + t).
Shift1D restriction_1d(const Shift1D& s, int m, int i);

// The shift whose moments are the measure's moments: weight_sq(n) =
// moment(n+1)/moment(n). Requires all moments positive.
Shift1D shift_from_measure(const Measure& m, int head_len = 32);

using KV = std::vector<std::pair<std::string, std::string>>;

// Commuting pair of 2-variable weighted shifts, stored as squared weights.
// Row k2 of alpha holds alpha_sq(., k2); the last stored row repeats for all
// higher k2. Same layout for beta.
class Shift2D {
public:
    Shift2D(std::vector<Seq> alpha_rows, std::vector<Seq> beta_rows,
            std::string family = "custom", KV params = {});

    Rational alpha_sq(long long k1, long long k2) const;
    Rational beta_sq(long long k1, long long k2) const;

    std::size_t alpha_row_count() const { return alpha_rows_.size(); }
    std::size_t beta_row_count() const { return beta_rows_.size(); }
    const Seq& alpha_row(long long k2) const;
    const Seq& beta_row(long long k2) const;

    const std::string& family() const { return family_; }
    const KV& params() const { return params_; }
    // Flat key-value record, values as canonical fractions.
    KV family_record() const;

private:
    std::vector<Seq> alpha_rows_, beta_rows_;
    std::string family_;
    KV params_;
};

// Moment gamma_(k1,k2): product along the axis path (right along row 0, then
// up the column at k1). Path independence over commuting pairs is a tested
// property, not re-verified per call.
Rational gamma2(const Shift2D& s, long long k1, long long k2);

// Checks beta_{k+e1} alpha_k = alpha_{k+e2} beta_k (squared form) for all
// k in [0, window)^2.
bool check_commuting(const Shift2D& s, long long window);

enum class Property { H1, Hk, Hinf };

std::string property_name(Property p, int k);

struct Verdict {
    Property property = Property::H1;
    int k = 1;  // the k of Hk; 1 for H1, ignored for Hinf
    bool holds = false;
    std::optional<Rational> threshold_sq;
    std::string rule;
    bool window_limited = false;
};

// One-parameter hyponormality testbed: row 0 weights sqrt(3/4) kappa,
// sqrt((n+1)(n+3))/(n+2), rows >= 1 flat at (a, 1, 1, ...), column weights
// determined by commutativity from beta(0,0) = kappa.
// Requires 0 < a_sq <= 1/2, 0 < kappa_sq < 1.
Shift2D make_kappa_shift(const Rational& a_sq, const Rational& kappa_sq);

// Three-parameter flat family: alpha rows (x,1,1,...), (a,1,1,...); beta row 0
// is (y, ay/x, ay/x, ...), higher beta rows are flat 1.
// Requires x_sq, y_sq, a_sq in (0,1] and a_sq y_sq <= x_sq.
Shift2D make_s1(const Rational& x_sq, const Rational& y_sq, const Rational& a_sq);

// Measure-driven family: row 0 comes from the moments of
// p delta_0 + q delta_1 (+ uniform remainder when uniform is set), rows >= 1
// are flat (a,1,1,...); beta(0,0) = y and the rest of column row 0 follows by
// commutativity. Requires p, q >= 0, p + q <= 1 (== 1 when uniform is false),
// q > 0 or positive uniform mass, and y_sq, a_sq in (0,1].
Shift2D make_classA(const Rational& p, const Rational& q, bool uniform,
                    const Rational& y_sq, const Rational& a_sq);

// The measure p delta_0 + q delta_1 + (1 - p - q) Lebesgue driving make_classA.
Measure classA_measure(const Rational& p, const Rational& q, bool uniform);

// Representing measure of the kappa family's row 0:
// (1 - kappa^2) delta_0 + (kappa^2/2) delta_1 + (kappa^2/2) Lebesgue.
Measure kappa_row0_measure(const Rational& kappa_sq);

}  // namespace hyposhift::shifts
