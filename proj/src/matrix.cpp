#include "hyposhift/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace hyposhift {

SymMatrix::SymMatrix(std::size_t order) : n_(order), a_(order * order, Rational(0)) {
    if (order == 0) throw std::invalid_argument("SymMatrix: order must be positive");
}

SymMatrix SymMatrix::from_rows(const RatRows& rows) {
    std::size_t n = rows.size();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n) throw std::invalid_argument("SymMatrix: not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] != rows[j][i])
                throw std::invalid_argument("SymMatrix: not symmetric");
            m.a_[i * n + j] = rows[i][j];
        }
    return m;
}

const Rational& SymMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("SymMatrix::at");
    return a_[i * n_ + j];
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= n_ || j >= n_) throw std::out_of_range("SymMatrix::set");
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
}

RatRows SymMatrix::rows() const {
    RatRows out(n_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = a_[i * n_ + j];
    return out;
}

Rational det_rows(RatRows rows) {
    std::size_t n = rows.size();
    if (n == 0) return Rational(1);
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("det_rows: not square");

    // Clear denominators row by row, then run fraction-free (Bareiss)
    // elimination on the integer matrix.
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l(1);
        for (std::size_t j = 0; j < n; ++j)
            l = boost::multiprecision::lcm(l, denominator(rows[i][j]));
        scale /= Rational(l);
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = rows[i][j] * Rational(l);
            m[i][j] = numerator(v);
        }
    }

    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return Rational(sign) * Rational(m[n - 1][n - 1]) * scale;
}

Rational det(const SymMatrix& m) {
    return det_rows(m.rows());
}

std::vector<Rational> leading_minors(const SymMatrix& m) {
    std::size_t n = m.order();
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t p = 1; p <= n; ++p) {
        RatRows sub(p, std::vector<Rational>(p));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) sub[i][j] = m.at(i, j);
        out.push_back(det_rows(std::move(sub)));
    }
    return out;
}

bool is_psd(const SymMatrix& m) {
    std::size_t n = m.order();
    RatRows a = m.rows();
    // Schur complement recursion, done iteratively. Rows whose pivot is zero
    // must vanish entirely and are skipped; a negative pivot or a surviving
    // entry in a zero-pivot row refutes.
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] < 0) return false;
        if (a[k][k] == 0) {
            for (std::size_t j = k; j < n; ++j)
                if (a[k][j] != 0) return false;
            continue;
        }
        // The symmetric update keeps the active block symmetric, so only row
        // operations are needed.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

namespace {

// Exact solution of A W = B for symmetric A (possibly singular); nullopt when
// inconsistent. Free variables are set to zero.
std::optional<RatRows> solve_sym(const SymMatrix& a, const RatRows& b) {
    std::size_t p = a.order();
    std::size_t q = b.empty() ? 0 : b[0].size();
    RatRows aug(p, std::vector<Rational>(p + q));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) aug[i][j] = a.at(i, j);
        for (std::size_t j = 0; j < q; ++j) aug[i][p + j] = b[i][j];
    }
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t r = 0;
    for (std::size_t c = 0; c < p && r < p; ++c) {
        std::size_t piv = r;
        while (piv < p && aug[piv][c] == 0) ++piv;
        if (piv == p) continue;
        std::swap(aug[r], aug[piv]);
        Rational d = aug[r][c];
        for (std::size_t j = c; j < p + q; ++j) aug[r][j] /= d;
        for (std::size_t i = 0; i < p; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (std::size_t j = c; j < p + q; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    for (std::size_t i = r; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (aug[i][p + j] != 0) return std::nullopt;
    RatRows w(p, std::vector<Rational>(q, Rational(0)));
    for (auto [row, col] : pivots)
        for (std::size_t j = 0; j < q; ++j) w[col][j] = aug[row][p + j];
    return w;
}

void check_block_dims(const SymMatrix& a, const RatRows& b, const SymMatrix& c) {
    if (b.size() != a.order())
        throw std::invalid_argument("block: B must have as many rows as A");
    for (const auto& row : b)
        if (row.size() != c.order())
            throw std::invalid_argument("block: B must have as many columns as C");
}

}  // namespace

bool smuljan_psd(const SymMatrix& a, const RatRows& b, const SymMatrix& c) {
    check_block_dims(a, b, c);
    if (!is_psd(a)) return false;
    auto w = solve_sym(a, b);
    if (!w) return false;
    std::size_t p = a.order(), q = c.order();
    // S = C - W^T B; symmetric because W^T B = W^T A W exactly.
    SymMatrix s(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i; j < q; ++j) {
            Rational v = c.at(i, j);
            for (std::size_t t = 0; t < p; ++t) v -= (*w)[t][i] * b[t][j];
            s.set(i, j, v);
        }
    return is_psd(s);
}

SymMatrix block_matrix(const SymMatrix& a, const RatRows& b, const SymMatrix& c) {
    check_block_dims(a, b, c);
    std::size_t p = a.order(), q = c.order();
    SymMatrix m(p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) m.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) m.set(i, p + j, b[i][j]);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i; j < q; ++j) m.set(p + i, p + j, c.at(i, j));
    return m;
}

}  // namespace hyposhift
