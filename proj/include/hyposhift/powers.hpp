#pragma once

#include "hyposhift/shift_model.hpp"

#include <vector>

namespace hyposhift::powers {

// Power (T1^h, T2^l) restricted to the invariant subspace of lattice points
// congruent to (m, n) mod (h, l).
struct PowerSpec {
    int h = 1;
    int l = 1;
    int m = 0;
    int n = 0;
};

void validate(const PowerSpec& ps);

// Materialized as a Shift2D of its own: new alpha(i, j) is the product of h
// consecutive parent alpha values along row l*j + n starting at h*i + m; new
// beta(i, j) is the product of l consecutive parent beta values up column
// h*i + m starting at row l*j + n. Commutes whenever the parent does.
shifts::Shift2D power_restriction(const shifts::Shift2D& s, const PowerSpec& ps);

// Moments of the (h, l) power at the base congruence class:
// gamma2(power_restriction(s, {h, l, 0, 0}), k1, k2).
Rational power_moments(const shifts::Shift2D& s, int h, int l, int k1, int k2);

enum class SummandKind { original, row, column, trivial };

struct S1Summand {
    SummandKind kind = SummandKind::original;
    int multiplicity = 1;
    Rational x_sq, y_sq, a_sq;  // parameters of the three-parameter family member
};

// The (h, l) power of the three-parameter family splits into family members:
// the original (once), the row shift <1, ay/x, 1> (h-1 times), the column
// shift <a, 1, a> (l-1 times), and the flat shift <1, 1, 1>
// ((h-1)(l-1) times). Zero-multiplicity summands are dropped.
std::vector<S1Summand> s1_power_decompose(const Rational& x_sq, const Rational& y_sq,
                                          const Rational& a_sq, int h, int l);

}  // namespace hyposhift::powers
