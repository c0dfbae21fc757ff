#pragma once

#include "hyposhift/hilbert.hpp"
#include "hyposhift/matrix.hpp"
#include "hyposhift/powers.hpp"
#include "hyposhift/shift_model.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyposhift::hypotests {

// Monomial exponents (p, q) with p + q <= k in graded lexicographic order:
// (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
std::vector<std::pair<int, int>> moment_index_set(int k);

// Moment matrix at a base point: entry for row (n, m) and column (p, q) is
// gamma2(s, base + (n, m) + (p, q)). PSD at every base point is equivalent to
// k-hyponormality.
SymMatrix moment_matrix(const shifts::Shift2D& s, long long base1, long long base2,
                        int k);

// Tests PSD of the moment matrix at every base in [0, window]^2. A positive
// verdict is window-limited; family classifiers give exact answers.
shifts::Verdict k_hyponormal_window(const shifts::Shift2D& s, int k, long long window);

// 2x2 hyponormality data at a base point. The off-diagonal entry
// alpha_{k+e2} beta_{k+e1} - alpha_k beta_k is a difference of square roots;
// the commutation identity makes its square rational, so it is carried as
// (sign, square).
struct SixPointData {
    Rational diag_alpha;  // alpha^2_{k+e1} - alpha^2_k
    Rational diag_beta;   // beta^2_{k+e2} - beta^2_k
    int off_sign = 0;
    Rational off_sq;

    bool psd() const;
};

SixPointData six_point_matrix(const shifts::Shift2D& s, long long k1, long long k2);

// Closed-form squared thresholds. All comparisons happen in Q: every
// threshold in scope is the square root of a rational function of the
// squared inputs.
enum class ThresholdName { h1, F, hinf, G, power, m1, m2, minf, h2, h2_21 };

struct ThresholdParams {
    std::optional<Rational> a_sq, h, p, q;
    std::optional<int> k;
};

Rational threshold_sq(ThresholdName name, const ThresholdParams& tp);
std::optional<ThresholdName> threshold_by_name(const std::string& name);
std::string threshold_label(ThresholdName name);

Rational threshold_h1_sq(const Rational& a_sq);
Rational threshold_F_sq(const Rational& a_sq, int k);
Rational threshold_hinf_sq(const Rational& a_sq);
Rational threshold_G_sq(const Rational& h);
Rational threshold_power_sq(int k, const Rational& h);
Rational threshold_m1_sq(const Rational& a_sq, const Rational& q);
Rational threshold_m2_sq(const Rational& a_sq, const Rational& q);
Rational threshold_minf_sq(const Rational& a_sq, const Rational& p, const Rational& q);
Rational threshold_h2_sq(const Rational& a_sq);
Rational threshold_h2_21_sq(const Rational& a_sq);

// k-hyponormality of the kappa family's (h, l) power reduces to positivity of
// the generalized Hilbert matrix with corner x = 2(1 - kappa^2)/kappa^2.
hilbert::GenHilbertParams reduce_Lk_to_Ak(const Rational& kappa_sq, int h, int k);

// The (k+3) x (k+3) condensed moment matrix of the kappa family's (h, 1)
// power at the origin (a^2 = 1/2), assembled from power moments. Index set:
// (0,0), (1,0), (0,1), (2,0), (1,1), then (p,0) for p = 3..k. Its PSD status
// must agree with the reduce_Lk_to_Ak chain.
SymMatrix build_Jk(const Rational& kappa_sq, int h, int k);

// Subnormal backward extension, nu x delta_1 specialization: true iff
// beta00_sq <= 1 and beta00_sq * nu <= xi0 as measures (atom by atom and on
// the uniform part).
bool backward_extension_check(const shifts::Measure& xi0, const shifts::Measure& nu,
                              const Rational& beta00_sq);

// kappa family at a^2 = 1/2: exact k-hyponormality of the shift and of its
// (h, l) power; neither verdict depends on l.
struct KappaVerdicts {
    shifts::Verdict original;
    shifts::Verdict power;
};
KappaVerdicts classify_kappa(const Rational& kappa_sq, int k, int h);

// Three-parameter family: hyponormality from the six-point data at the
// origin (the only base with nonzero data), and the subnormality criterion
// (1 - x^2) - y^2 (1 - a^2) >= 0, which coincides with 2-hyponormality and
// is invariant under all powers.
struct S1Verdicts {
    shifts::Verdict h1;
    shifts::Verdict h2_equals_subnormal;
};
S1Verdicts classify_s1(const Rational& x_sq, const Rational& y_sq, const Rational& a_sq);

// Measure-driven family: m1 and m2 are necessary conditions (hyponormality /
// 2-hyponormality of every power); minf is an exact subnormality test.
enum class NecessityLevel { h1, h2, hinf };
shifts::Verdict classify_classA_necessary(const Rational& p, const Rational& q,
                                          const Rational& y_sq, const Rational& a_sq,
                                          NecessityLevel level);

// kappa family at general a^2 in (0,1/2]: exact 2-hyponormality of the shift
// and of its (2,1) power. holds(original) implies holds(power21).
struct KappaH2Verdicts {
    shifts::Verdict original;
    shifts::Verdict power21;
};
KappaH2Verdicts classify_kappa_h2(const Rational& a_sq, const Rational& kappa_sq);

// Limit of the hyponormality moment matrix of the measure-driven family as
// the base recedes along row 0 (moments tend to q): PSD iff y^2 <= m1^2.
SymMatrix classA_limit_matrix_h1(const Rational& a_sq, const Rational& q,
                                 const Rational& y_sq);

// Blocks of the corresponding 2-hyponormality limit matrix P(inf); Smul'jan
// positivity iff y^2 <= m2^2.
struct LimitBlocks {
    SymMatrix a;
    RatRows b;
    SymMatrix c;
};
LimitBlocks classA_limit_blocks_h2(const Rational& a_sq, const Rational& q,
                                   const Rational& y_sq);

// (2,1)-power moment matrix of the kappa family at the origin, scaled by
// 1/kappa^2, with the duplicate (0,2) row and column dropped. Its five
// leading minors are the nested-minor functions deciding 2-hyponormality of
// the power.
SymMatrix power21_reduced_moment_matrix(const Rational& a_sq, const Rational& kappa_sq);

}  // namespace hyposhift::hypotests
