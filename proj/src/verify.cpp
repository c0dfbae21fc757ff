#include "hyposhift/verify.hpp"

#include "hyposhift/hilbert.hpp"
#include "hyposhift/hypotests.hpp"
#include "hyposhift/matrix.hpp"
#include "hyposhift/powers.hpp"
#include "hyposhift/rational.hpp"
#include "hyposhift/shift_model.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace hyposhift::verify {

namespace {

using namespace hyposhift;
using hilbert::GenHilbertParams;
using hypotests::threshold_F_sq;
using hypotests::threshold_h2_21_sq;
using hypotests::threshold_h2_sq;
using hypotests::threshold_m1_sq;
using hypotests::threshold_m2_sq;
using hypotests::threshold_power_sq;
using shifts::Measure;

struct Ctx {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

void check_classical_identity(Ctx& c) {
    for (int k = 1; k <= 8; ++k) {
        GenHilbertParams p{k, Rational(1), Rational(1)};
        Rational expected = hilbert::classical_hilbert_det(k);
        c.expect(det(hilbert::build_generalized_hilbert(p)) == expected,
                 "brute-force det disagrees at k=" + std::to_string(k));
        c.expect(hilbert::det_generalized_hilbert(p) == expected,
                 "closed-form det disagrees at k=" + std::to_string(k));
    }
}

void check_determinant_oracle(Ctx& c) {
    std::mt19937_64 rng(20250819);
    for (int trial = 0; trial < 100; ++trial) {
        Rational x = frac(1 + static_cast<long long>(rng() % 64), 16);  // (0, 4]
        Rational h = 1 + frac(static_cast<long long>(rng() % 181), 20);  // [1, 10]
        for (int k = 1; k <= 6; ++k) {
            GenHilbertParams p{k, x, h};
            if (hilbert::det_generalized_hilbert(p) !=
                det(hilbert::build_generalized_hilbert(p))) {
                c.expect(false, "mismatch at k=" + std::to_string(k) + ", x=" +
                                    to_string(x) + ", h=" + to_string(h));
                return;
            }
        }
    }
}

void check_psd_threshold_flip(Ctx& c) {
    for (int k = 1; k <= 5; ++k)
        for (int hi : {1, 2, 3}) {
            Rational h(hi);
            Rational b = hilbert::b_threshold(k, h);
            for (const Rational& x :
                 {b - frac(1, 7), b - frac(1, 1000), b, b + frac(1, 1000), b + 1}) {
                if (x <= 0) continue;
                bool expected = x >= b;
                GenHilbertParams p{k, x, h};
                std::string at = " at k=" + std::to_string(k) + ", h=" + std::to_string(hi);
                c.expect(is_psd(hilbert::build_generalized_hilbert(p)) == expected,
                         "assembled matrix PSD flip wrong" + at);
                c.expect(hilbert::is_psd_generalized_hilbert(p) == expected,
                         "threshold comparison flip wrong" + at);
            }
            GenHilbertParams boundary{k, b, h};
            c.expect(hilbert::det_generalized_hilbert(boundary) == 0,
                     "determinant nonzero at the threshold, k=" + std::to_string(k));
        }
}

void check_threshold_values(Ctx& c) {
    for (int k = 1; k <= 10; ++k)
        c.expect(hilbert::b_threshold(k, Rational(1)) == frac(k * (k + 2), (k + 1) * (k + 1)),
                 "b(k,1) closed form fails at k=" + std::to_string(k));
    c.expect(hilbert::b_threshold(2, Rational(9)) == frac(2464, 9025), "b(2,9) != 2464/9025");
    c.expect(threshold_power_sq(2, Rational(9)) == frac(9025, 10257),
             "2/(2+b(2,9)) != 9025/10257");
    c.expect(sqrt_within(frac(9025, 10257), 938023, 6),
             "sqrt(9025/10257) not within 1e-6 of 0.938023");
}

void check_hyponormality_boundary(Ctx& c) {
    using hypotests::k_hyponormal_window;
    Rational at = frac(20, 23), above = frac(20, 23) + frac(1, 1000);
    c.expect(k_hyponormal_window(shifts::make_kappa_shift(frac(1, 2), at), 1, 5).holds,
             "window test fails at kappa2 = 20/23");
    c.expect(!k_hyponormal_window(shifts::make_kappa_shift(frac(1, 2), above), 1, 5).holds,
             "window test holds above 20/23");
}

void check_power_reduction(Ctx& c) {
    for (int k : {2, 3})
        for (int h : {1, 2, 9})
            for (int i = 1; i <= 20; ++i) {
                Rational kappa_sq = frac(i, 21);
                Rational x = 2 * (1 - kappa_sq) / kappa_sq;
                bool expected = x >= hilbert::b_threshold(k, Rational(h));
                std::string at = " at k=" + std::to_string(k) + ", h=" + std::to_string(h) +
                                 ", kappa2=" + to_string(kappa_sq);
                c.expect(is_psd(hypotests::build_Jk(kappa_sq, h, k)) == expected,
                         "J_k positivity disagrees with corner threshold" + at);
                c.expect(hilbert::is_psd_generalized_hilbert(
                             hypotests::reduce_Lk_to_Ak(kappa_sq, h, k)) == expected,
                         "reduction chain disagrees" + at);
            }
}

void check_non_invariance_region(Ctx& c) {
    Rational half = frac(1, 2);
    for (int k = 2; k <= 5; ++k) {
        Rational f2 = threshold_F_sq(half, k);
        c.expect(f2 == frac(2 * (k + 1) * (k + 1), 3 * k * k + 6 * k + 2),
                 "F^2(1/2,k) closed form fails at k=" + std::to_string(k));
        c.expect(f2 == threshold_power_sq(k, Rational(1)),
                 "F^2(1/2,k) != 2/(2+b(k,1)) at k=" + std::to_string(k));
        for (int h : {2, 3, 9}) {
            Rational p2 = threshold_power_sq(k, Rational(h));
            std::string at = " at k=" + std::to_string(k) + ", h=" + std::to_string(h);
            c.expect(f2 < p2, "non-invariance region empty" + at);
            auto lower = hypotests::classify_kappa(f2, k, h);
            c.expect(lower.original.holds && lower.power.holds,
                     "left endpoint misclassified" + at);
            auto mid = hypotests::classify_kappa((f2 + p2) / 2, k, h);
            c.expect(!mid.original.holds && mid.power.holds,
                     "interior point misclassified" + at);
            auto upper = hypotests::classify_kappa(p2, k, h);
            c.expect(!upper.original.holds && upper.power.holds,
                     "right endpoint misclassified" + at);
            auto beyond = hypotests::classify_kappa(p2 + (1 - p2) / 1000, k, h);
            c.expect(!beyond.original.holds && !beyond.power.holds,
                     "point beyond the region misclassified" + at);
        }
    }
}

void check_h2_pair(Ctx& c) {
    Rational half = frac(1, 2), quarter = frac(1, 4);
    c.expect(threshold_h2_sq(half) == frac(9, 13), "h2^2(1/2) != 9/13");
    c.expect(threshold_F_sq(half, 2) == frac(9, 13), "F^2(1/2,2) != 9/13");
    c.expect(threshold_h2_21_sq(half) == frac(450, 611), "h2_21^2(1/2) != 450/611");
    c.expect(threshold_power_sq(2, Rational(2)) == frac(450, 611),
             "2/(2+b(2,2)) != 450/611");
    for (int i = 1; i <= 50; ++i) {
        Rational a_sq = frac(i, 100);
        c.expect(threshold_h2_sq(a_sq) < threshold_h2_21_sq(a_sq),
                 "h2^2 >= h2_21^2 at a2=" + to_string(a_sq));
        auto v = hypotests::classify_kappa_h2(a_sq, threshold_h2_sq(a_sq));
        c.expect(v.original.holds && v.power21.holds,
                 "original verdict does not imply power verdict at a2=" + to_string(a_sq));
    }
    // Nested minors of the reduced (2,1)-power moment matrix at a^2 = 1/4.
    Rational a2 = quarter, a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
    for (int i = 1; i <= 9; ++i) {
        Rational k2 = frac(i, 10);
        auto minors = leading_minors(hypotests::power21_reduced_moment_matrix(a2, k2));
        std::vector<Rational> expected = {
            1 / k2,
            (27 - 20 * k2) / (45 * k2),
            (27 - 45 * a4 - 47 * k2 + 60 * a2 * k2) / (45 * k2),
            (3375 - 6300 * a4 - 6238 * k2 + 6510 * a2 * k2 + 2205 * a4 * k2) /
                (496125 * k2),
            (3375 * a2 - 9675 * a4 + 6300 * a6 - 6238 * a2 * k2 + 21253 * a4 * k2 -
             21315 * a6 * k2 + 6300 * a8 * k2) /
                (496125 * k2)};
        for (std::size_t d = 0; d < 5; ++d)
            c.expect(minors[d] == expected[d],
                     "nested minor d" + std::to_string(d + 1) +
                         " mismatch at kappa2=" + to_string(k2));
    }
}

void check_s1_suite(Ctx& c) {
    // Classifier against the 6x6 moment matrix on a rational grid.
    int points = 0;
    for (int xi = 1; xi <= 8; ++xi)
        for (int yi = 1; yi <= 6; ++yi)
            for (int ai = 1; ai <= 6; ++ai) {
                Rational x2 = frac(xi, 8), y2 = frac(yi, 6), a2 = frac(ai, 6);
                if (a2 * y2 > x2) continue;
                ++points;
                auto verdicts = hypotests::classify_s1(x2, y2, a2);
                bool matrix_psd =
                    is_psd(hypotests::moment_matrix(shifts::make_s1(x2, y2, a2), 0, 0, 2));
                c.expect(verdicts.h2_equals_subnormal.holds == matrix_psd,
                         "classifier disagrees with the moment matrix at (" + to_string(x2) +
                             "," + to_string(y2) + "," + to_string(a2) + ")");
            }
    c.expect(points >= 200, "grid too small: " + std::to_string(points) + " points");

    // Decomposition: each congruence class of the (h,l) power matches the
    // family member the representation assigns to it, momentwise on [0,5]^2.
    const Rational sets[2][3] = {{frac(3, 4), frac(1, 2), frac(1, 2)},
                                 {frac(5, 8), frac(3, 7), frac(2, 3)}};
    for (const auto& ps : sets) {
        Rational x2 = ps[0], y2 = ps[1], a2 = ps[2];
        shifts::Shift2D s = shifts::make_s1(x2, y2, a2);
        for (int h = 1; h <= 4; ++h)
            for (int l = 1; l <= 4; ++l) {
                auto summands = powers::s1_power_decompose(x2, y2, a2, h, l);
                int row_mult = 0, col_mult = 0, triv_mult = 0;
                for (const auto& sm : summands) {
                    if (sm.kind == powers::SummandKind::row) row_mult = sm.multiplicity;
                    if (sm.kind == powers::SummandKind::column) col_mult = sm.multiplicity;
                    if (sm.kind == powers::SummandKind::trivial) triv_mult = sm.multiplicity;
                }
                c.expect(row_mult == h - 1 && col_mult == l - 1 &&
                             triv_mult == (h - 1) * (l - 1),
                         "summand multiplicities wrong at h=" + std::to_string(h) +
                             ", l=" + std::to_string(l));
                for (int m = 0; m < h; ++m)
                    for (int n = 0; n < l; ++n) {
                        shifts::Shift2D piece = powers::power_restriction(
                            s, powers::PowerSpec{h, l, m, n});
                        Rational ex2, ey2, ea2;
                        if (m == 0 && n == 0) {
                            ex2 = x2; ey2 = y2; ea2 = a2;
                        } else if (n == 0) {
                            ex2 = 1; ey2 = a2 * y2 / x2; ea2 = 1;
                        } else if (m == 0) {
                            ex2 = a2; ey2 = 1; ea2 = a2;
                        } else {
                            ex2 = 1; ey2 = 1; ea2 = 1;
                        }
                        shifts::Shift2D member = shifts::make_s1(ex2, ey2, ea2);
                        for (long long k1 = 0; k1 <= 5; ++k1)
                            for (long long k2 = 0; k2 <= 5; ++k2)
                                if (gamma2(piece, k1, k2) != gamma2(member, k1, k2)) {
                                    c.expect(false,
                                             "moment mismatch at h=" + std::to_string(h) +
                                                 ",l=" + std::to_string(l) +
                                                 ",m=" + std::to_string(m) +
                                                 ",n=" + std::to_string(n));
                                    return;
                                }
                    }
            }
    }
}

void check_classa_limits(Ctx& c) {
    auto check_point = [&](const Rational& a2, const Rational& q, const Rational& y2) {
        bool h_psd = is_psd(hypotests::classA_limit_matrix_h1(a2, q, y2));
        c.expect(h_psd == (y2 <= threshold_m1_sq(a2, q)),
                 "3x3 limit disagrees with m1 at (" + to_string(a2) + "," + to_string(q) +
                     "," + to_string(y2) + ")");
        auto blocks = hypotests::classA_limit_blocks_h2(a2, q, y2);
        bool p_psd = smuljan_psd(blocks.a, blocks.b, blocks.c);
        c.expect(p_psd == (y2 <= threshold_m2_sq(a2, q)),
                 "5x5 limit disagrees with m2 at (" + to_string(a2) + "," + to_string(q) +
                     "," + to_string(y2) + ")");
        c.expect(p_psd == is_psd(block_matrix(blocks.a, blocks.b, blocks.c)),
                 "Smul'jan disagrees with the assembled block matrix");
    };
    int points = 0;
    for (int ai = 1; ai <= 7; ++ai)
        for (int qi = 1; qi <= 6; ++qi)
            for (int yi = 1; yi <= 4; ++yi) {
                check_point(frac(ai, 8), frac(qi, 7), frac(yi, 4));
                ++points;
            }
    c.expect(points >= 100, "grid too small");
    for (const Rational& a2 : {frac(1, 4), frac(1, 2), frac(3, 4)})
        for (const Rational& q : {frac(1, 3), frac(2, 3)}) {
            check_point(a2, q, threshold_m1_sq(a2, q));
            check_point(a2, q, threshold_m1_sq(a2, q) + frac(1, 1000));
            check_point(a2, q, threshold_m2_sq(a2, q));
            check_point(a2, q, threshold_m2_sq(a2, q) + frac(1, 1000));
        }
}

void check_backward_extension(Ctx& c) {
    Measure nu({{Rational(0), frac(1, 2)}, {Rational(1), frac(1, 2)}}, Rational(0));
    auto subnormal = [&](const Rational& kappa_sq) {
        return hypotests::backward_extension_check(shifts::kappa_row0_measure(kappa_sq), nu,
                                                   kappa_sq);
    };
    c.expect(subnormal(frac(2, 3)), "rejected at the boundary kappa2 = 2/3");
    c.expect(!subnormal(frac(2, 3) + frac(1, 1000)), "accepted above 2/3");
    c.expect(subnormal(frac(1, 2)), "rejected below the boundary");
    c.expect(!subnormal(frac(9, 10)), "accepted far above the boundary");
}

struct Check {
    const char* group;
    const char* name;
    std::function<void(Ctx&)> fn;
};

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = {
        {"hilbert", "classical-identity", check_classical_identity},
        {"hilbert", "determinant-oracle", check_determinant_oracle},
        {"hilbert", "psd-threshold-flip", check_psd_threshold_flip},
        {"hilbert", "threshold-values", check_threshold_values},
        {"kappa", "hyponormality-boundary", check_hyponormality_boundary},
        {"kappa", "power-reduction-soundness", check_power_reduction},
        {"kappa", "non-invariance-region", check_non_invariance_region},
        {"h2pair", "thresholds-and-minors", check_h2_pair},
        {"s1", "classifier-and-decomposition", check_s1_suite},
        {"classa", "limit-matrices", check_classa_limits},
        {"subnormal", "backward-extension", check_backward_extension},
    };
    return checks;
}

}  // namespace

std::vector<std::string> check_groups() {
    std::vector<std::string> out;
    for (const auto& c : all_checks())
        if (out.empty() || out.back() != c.group) out.emplace_back(c.group);
    return out;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& only_groups) {
    auto groups = check_groups();
    for (const auto& g : only_groups)
        if (std::find(groups.begin(), groups.end(), g) == groups.end())
            throw std::invalid_argument("unknown check group: " + g);
    std::vector<CheckResult> out;
    for (const auto& check : all_checks()) {
        if (!only_groups.empty() &&
            std::find(only_groups.begin(), only_groups.end(), check.group) ==
                only_groups.end())
            continue;
        CheckResult r;
        r.group = check.group;
        r.name = check.name;
        Ctx ctx;
        try {
            check.fn(ctx);
            r.pass = ctx.ok;
            r.detail = ctx.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hyposhift::verify
