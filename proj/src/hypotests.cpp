#include "hyposhift/hypotests.hpp"

#include <stdexcept>

namespace hyposhift::hypotests {

using shifts::Property;
using shifts::Shift2D;
using shifts::Verdict;

std::vector<std::pair<int, int>> moment_index_set(int k) {
    if (k < 0) throw std::domain_error("moment_index_set: k must be >= 0");
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d <= k; ++d)
        for (int p = d; p >= 0; --p) out.emplace_back(p, d - p);
    return out;
}

SymMatrix moment_matrix(const Shift2D& s, long long base1, long long base2, int k) {
    if (k < 1) throw std::domain_error("moment_matrix: k must be >= 1");
    if (base1 < 0 || base2 < 0)
        throw std::domain_error("moment_matrix: base must be nonnegative");
    auto idx = moment_index_set(k);
    std::size_t n = idx.size();
    SymMatrix m(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u; v < n; ++v)
            m.set(u, v,
                  gamma2(s, base1 + idx[u].first + idx[v].first,
                         base2 + idx[u].second + idx[v].second));
    return m;
}

Verdict k_hyponormal_window(const Shift2D& s, int k, long long window) {
    if (window < 0) throw std::domain_error("k_hyponormal_window: window must be >= 0");
    bool holds = true;
    for (long long b1 = 0; b1 <= window && holds; ++b1)
        for (long long b2 = 0; b2 <= window && holds; ++b2)
            holds = is_psd(moment_matrix(s, b1, b2, k));
    Verdict v;
    v.property = (k == 1) ? Property::H1 : Property::Hk;
    v.k = k;
    v.holds = holds;
    v.rule = "moment matrix PSD at every base in [0," + std::to_string(window) +
             "]^2; a positive verdict is window-limited";
    v.window_limited = true;
    return v;
}

bool SixPointData::psd() const {
    return diag_alpha >= 0 && diag_beta >= 0 && diag_alpha * diag_beta >= off_sq;
}

SixPointData six_point_matrix(const Shift2D& s, long long k1, long long k2) {
    if (k1 < 0 || k2 < 0) throw std::domain_error("six_point_matrix: base must be nonnegative");
    SixPointData d;
    d.diag_alpha = s.alpha_sq(k1 + 1, k2) - s.alpha_sq(k1, k2);
    d.diag_beta = s.beta_sq(k1, k2 + 1) - s.beta_sq(k1, k2);
    Rational u_sq = s.alpha_sq(k1, k2 + 1) * s.beta_sq(k1 + 1, k2);
    Rational v_sq = s.alpha_sq(k1, k2) * s.beta_sq(k1, k2);
    // Cross term u*v collapses to a rational by the commutation identity.
    Rational uv = s.alpha_sq(k1, k2) * s.beta_sq(k1 + 1, k2);
    d.off_sq = u_sq + v_sq - 2 * uv;
    d.off_sign = (u_sq > v_sq) ? 1 : (u_sq < v_sq ? -1 : 0);
    return d;
}

namespace {

void require_a_sq_half(const Rational& a_sq) {
    if (a_sq <= 0 || a_sq > frac(1, 2))
        throw std::domain_error("threshold: a_sq must lie in (0,1/2]");
}

void require_open_unit(const Rational& v, const char* what) {
    if (v <= 0 || v >= 1)
        throw std::domain_error(std::string("threshold: ") + what + " must lie in (0,1)");
}

}  // namespace

Rational threshold_h1_sq(const Rational& a_sq) {
    require_a_sq_half(a_sq);
    return (32 - 48 * a_sq * a_sq) / (59 - 72 * a_sq);
}

Rational threshold_F_sq(const Rational& a_sq, int k) {
    require_a_sq_half(a_sq);
    if (k < 2) throw std::domain_error("threshold F: k must be >= 2");
    Rational corner = frac((k + 1) * (k + 1), 2 * k * (k + 2));
    Rational num = corner - a_sq;
    Rational den = a_sq * a_sq - frac(5, 2) * a_sq + corner +
                   frac(2 * k * k + 4 * k + 3, 4 * (k + 1) * (k + 1));
    return num / den;
}

Rational threshold_hinf_sq(const Rational& a_sq) {
    require_a_sq_half(a_sq);
    return 1 / (2 - a_sq);
}

Rational threshold_G_sq(const Rational& h) {
    if (h < 1) throw std::domain_error("threshold G: h must be >= 1");
    Rational h2 = h * h, h3 = h2 * h;
    return (2 * h3 + 7 * h2 + 8 * h + 3) / (2 * h3 + 7 * h2 + 10 * h + 4);
}

Rational threshold_power_sq(int k, const Rational& h) {
    if (k < 2) throw std::domain_error("threshold power: k must be >= 2");
    return 2 / (2 + hilbert::b_threshold(k, h));
}

Rational threshold_m1_sq(const Rational& a_sq, const Rational& q) {
    require_open_unit(a_sq, "a_sq");
    require_open_unit(q, "q");
    Rational d = a_sq - q;
    return q * (1 - q) / (d * d + q * (1 - q));
}

Rational threshold_m2_sq(const Rational& a_sq, const Rational& q) {
    require_open_unit(a_sq, "a_sq");
    require_open_unit(q, "q");
    Rational left = (1 - q) / (1 - a_sq), right = q / a_sq;
    return left < right ? left : right;
}

Rational threshold_minf_sq(const Rational& a_sq, const Rational& p, const Rational& q) {
    require_open_unit(a_sq, "a_sq");
    if (p < 0 || q < 0 || p + q > 1)
        throw std::domain_error("threshold minf: need p, q >= 0 with p + q <= 1");
    Rational left = p / (1 - a_sq), right = q / a_sq;
    return left < right ? left : right;
}

Rational threshold_h2_sq(const Rational& a_sq) {
    require_a_sq_half(a_sq);
    return 9 * (9 - 16 * a_sq) / (157 - 360 * a_sq + 144 * a_sq * a_sq);
}

Rational threshold_h2_21_sq(const Rational& a_sq) {
    require_a_sq_half(a_sq);
    return 225 * (15 - 28 * a_sq) / (6238 - 15015 * a_sq + 6300 * a_sq * a_sq);
}

std::optional<ThresholdName> threshold_by_name(const std::string& name) {
    if (name == "h1") return ThresholdName::h1;
    if (name == "F") return ThresholdName::F;
    if (name == "hinf") return ThresholdName::hinf;
    if (name == "G") return ThresholdName::G;
    if (name == "power") return ThresholdName::power;
    if (name == "m1") return ThresholdName::m1;
    if (name == "m2") return ThresholdName::m2;
    if (name == "minf") return ThresholdName::minf;
    if (name == "h2") return ThresholdName::h2;
    if (name == "h2_21") return ThresholdName::h2_21;
    return std::nullopt;
}

std::string threshold_label(ThresholdName name) {
    switch (name) {
        case ThresholdName::h1: return "h1";
        case ThresholdName::F: return "F";
        case ThresholdName::hinf: return "hinf";
        case ThresholdName::G: return "G";
        case ThresholdName::power: return "power";
        case ThresholdName::m1: return "m1";
        case ThresholdName::m2: return "m2";
        case ThresholdName::minf: return "minf";
        case ThresholdName::h2: return "h2";
        case ThresholdName::h2_21: return "h2_21";
    }
    return "?";
}

namespace {

const Rational& need(const std::optional<Rational>& v, const char* what) {
    if (!v) throw std::domain_error(std::string("threshold: missing parameter ") + what);
    return *v;
}

int need_k(const std::optional<int>& v) {
    if (!v) throw std::domain_error("threshold: missing parameter k");
    return *v;
}

}  // namespace

Rational threshold_sq(ThresholdName name, const ThresholdParams& tp) {
    switch (name) {
        case ThresholdName::h1: return threshold_h1_sq(need(tp.a_sq, "a_sq"));
        case ThresholdName::F: return threshold_F_sq(need(tp.a_sq, "a_sq"), need_k(tp.k));
        case ThresholdName::hinf: return threshold_hinf_sq(need(tp.a_sq, "a_sq"));
        case ThresholdName::G: return threshold_G_sq(need(tp.h, "h"));
        case ThresholdName::power:
            return threshold_power_sq(need_k(tp.k), need(tp.h, "h"));
        case ThresholdName::m1: return threshold_m1_sq(need(tp.a_sq, "a_sq"), need(tp.q, "q"));
        case ThresholdName::m2: return threshold_m2_sq(need(tp.a_sq, "a_sq"), need(tp.q, "q"));
        case ThresholdName::minf:
            return threshold_minf_sq(need(tp.a_sq, "a_sq"), need(tp.p, "p"), need(tp.q, "q"));
        case ThresholdName::h2: return threshold_h2_sq(need(tp.a_sq, "a_sq"));
        case ThresholdName::h2_21: return threshold_h2_21_sq(need(tp.a_sq, "a_sq"));
    }
    throw std::domain_error("threshold: unknown name");
}

hilbert::GenHilbertParams reduce_Lk_to_Ak(const Rational& kappa_sq, int h, int k) {
    if (kappa_sq <= 0 || kappa_sq >= 1)
        throw std::domain_error("reduction: kappa_sq must lie in (0,1)");
    if (h < 1) throw std::domain_error("reduction: h must be >= 1");
    if (k < 2) throw std::domain_error("reduction: k must be >= 2");
    return {k, 2 * (1 - kappa_sq) / kappa_sq, Rational(h)};
}

SymMatrix build_Jk(const Rational& kappa_sq, int h, int k) {
    if (h < 1) throw std::domain_error("Jk: h must be >= 1");
    if (k < 2) throw std::domain_error("Jk: k must be >= 2");
    Shift2D power =
        powers::power_restriction(shifts::make_kappa_shift(frac(1, 2), kappa_sq),
                                  powers::PowerSpec{h, 1, 0, 0});
    std::vector<std::pair<int, int>> idx = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}};
    for (int p = 3; p <= k; ++p) idx.emplace_back(p, 0);
    std::size_t n = idx.size();
    SymMatrix m(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u; v < n; ++v)
            m.set(u, v,
                  gamma2(power, idx[u].first + idx[v].first,
                         idx[u].second + idx[v].second));
    return m;
}

bool backward_extension_check(const shifts::Measure& xi0, const shifts::Measure& nu,
                              const Rational& beta00_sq) {
    if (beta00_sq < 0)
        throw std::domain_error("backward extension: beta00_sq must be >= 0");
    if (beta00_sq > 1) return false;
    for (const auto& atom : nu.atoms()) {
        Rational needed = beta00_sq * atom.mass;
        if (needed == 0) continue;
        Rational available(0);
        for (const auto& cand : xi0.atoms())
            if (cand.location == atom.location) available = cand.mass;
        if (available < needed) return false;
    }
    return beta00_sq * nu.uniform_mass() <= xi0.uniform_mass();
}

KappaVerdicts classify_kappa(const Rational& kappa_sq, int k, int h) {
    if (kappa_sq <= 0 || kappa_sq >= 1)
        throw std::domain_error("classify: kappa_sq must lie in (0,1)");
    if (k < 1) throw std::domain_error("classify: k must be >= 1");
    if (h < 1) throw std::domain_error("classify: h must be >= 1");
    Rational half = frac(1, 2);

    KappaVerdicts out;
    out.original.property = (k == 1) ? Property::H1 : Property::Hk;
    out.original.k = k;
    out.original.threshold_sq =
        (k == 1) ? threshold_h1_sq(half) : threshold_F_sq(half, k);
    out.original.holds = kappa_sq <= *out.original.threshold_sq;
    out.original.rule = (k == 1) ? "exact family threshold h1^2(a2) at a2=1/2"
                                 : "exact family threshold F^2(a2,k) at a2=1/2";

    out.power.property = out.original.property;
    out.power.k = k;
    out.power.threshold_sq =
        (k == 1) ? threshold_G_sq(Rational(h)) : threshold_power_sq(k, Rational(h));
    out.power.holds = kappa_sq <= *out.power.threshold_sq;
    out.power.rule = (k == 1)
                         ? "exact power threshold G(h); independent of l"
                         : "exact power threshold 2/(2+b(k,h)); independent of l";
    return out;
}

S1Verdicts classify_s1(const Rational& x_sq, const Rational& y_sq, const Rational& a_sq) {
    Shift2D s = shifts::make_s1(x_sq, y_sq, a_sq);  // validates the parameters

    S1Verdicts out;
    out.h1.property = Property::H1;
    out.h1.k = 1;
    out.h1.holds = six_point_matrix(s, 0, 0).psd();
    out.h1.rule = "six-point test at the origin; every other base has flat weights";

    Rational f2 = (1 - x_sq) - y_sq * (1 - a_sq);
    out.h2_equals_subnormal.property = Property::Hinf;
    out.h2_equals_subnormal.k = 0;
    out.h2_equals_subnormal.holds = f2 >= 0;
    if (a_sq < 1) out.h2_equals_subnormal.threshold_sq = (1 - x_sq) / (1 - a_sq);
    out.h2_equals_subnormal.rule =
        "(1-x2) - y2(1-a2) >= 0; equals 2-hyponormality and holds for every power";
    return out;
}

Verdict classify_classA_necessary(const Rational& p, const Rational& q,
                                  const Rational& y_sq, const Rational& a_sq,
                                  NecessityLevel level) {
    if (y_sq <= 0 || y_sq > 1)
        throw std::domain_error("classify: y_sq must lie in (0,1]");
    Verdict v;
    switch (level) {
        case NecessityLevel::h1:
            v.property = Property::H1;
            v.k = 1;
            v.threshold_sq = threshold_m1_sq(a_sq, q);
            v.rule = "necessary only: hyponormality of every power requires y2 <= m1^2(a2,q)";
            break;
        case NecessityLevel::h2:
            v.property = Property::Hk;
            v.k = 2;
            v.threshold_sq = threshold_m2_sq(a_sq, q);
            v.rule =
                "necessary only: 2-hyponormality of every power requires y2 <= m2^2(a2,q)";
            break;
        case NecessityLevel::hinf:
            v.property = Property::Hinf;
            v.k = 0;
            v.threshold_sq = threshold_minf_sq(a_sq, p, q);
            v.rule = "exact: subnormal iff y2 <= minf^2(a2,p,q)";
            break;
    }
    v.holds = y_sq <= *v.threshold_sq;
    return v;
}

KappaH2Verdicts classify_kappa_h2(const Rational& a_sq, const Rational& kappa_sq) {
    if (kappa_sq <= 0 || kappa_sq >= 1)
        throw std::domain_error("classify: kappa_sq must lie in (0,1)");
    KappaH2Verdicts out;
    out.original.property = Property::Hk;
    out.original.k = 2;
    out.original.threshold_sq = threshold_h2_sq(a_sq);
    out.original.holds = kappa_sq <= *out.original.threshold_sq;
    out.original.rule = "exact: 2-hyponormal iff kappa2 <= h2^2(a2)";

    out.power21.property = Property::Hk;
    out.power21.k = 2;
    out.power21.threshold_sq = threshold_h2_21_sq(a_sq);
    out.power21.holds = kappa_sq <= *out.power21.threshold_sq;
    out.power21.rule = "exact: the (2,1) power is 2-hyponormal iff kappa2 <= h2_21^2(a2)";
    return out;
}

SymMatrix classA_limit_matrix_h1(const Rational& a_sq, const Rational& q,
                                 const Rational& y_sq) {
    SymMatrix m(3);
    m.set(0, 0, Rational(1));
    m.set(0, 1, q);
    m.set(0, 2, y_sq);
    m.set(1, 1, q);
    m.set(1, 2, a_sq * y_sq);
    m.set(2, 2, y_sq);
    return m;
}

LimitBlocks classA_limit_blocks_h2(const Rational& a_sq, const Rational& q,
                                   const Rational& y_sq) {
    Rational ay = a_sq * y_sq;
    SymMatrix a(2);
    a.set(0, 0, Rational(1));
    a.set(0, 1, q);
    a.set(1, 1, q);
    RatRows b = {{y_sq, q, ay}, {ay, q, ay}};
    SymMatrix c(3);
    c.set(0, 0, y_sq);
    c.set(0, 1, ay);
    c.set(0, 2, ay);
    c.set(1, 1, q);
    c.set(1, 2, ay);
    c.set(2, 2, ay);
    return {a, b, c};
}

SymMatrix power21_reduced_moment_matrix(const Rational& a_sq, const Rational& kappa_sq) {
    Shift2D power =
        powers::power_restriction(shifts::make_kappa_shift(a_sq, kappa_sq),
                                  powers::PowerSpec{2, 1, 0, 0});
    SymMatrix full = moment_matrix(power, 0, 0, 2);
    // Index (0,2) duplicates (0,1): the beta rows above row 0 are flat.
    SymMatrix m(5);
    for (std::size_t u = 0; u < 5; ++u)
        for (std::size_t v = u; v < 5; ++v) m.set(u, v, full.at(u, v) / kappa_sq);
    return m;
}

}  // namespace hyposhift::hypotests
