#pragma once

#include "hyposhift/rational.hpp"

#include <cstddef>
#include <vector>

namespace hyposhift {

using RatRows = std::vector<std::vector<Rational>>;

// Dense symmetric matrix over the rationals. Symmetry is enforced by
// construction: set() writes both (i,j) and (j,i), from_rows() rejects
// asymmetric input.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t order);
    static SymMatrix from_rows(const RatRows& rows);

    std::size_t order() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& v);
    RatRows rows() const;

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

// Exact determinant (fraction-free elimination on the denominator-cleared
// matrix, with row pivoting).
Rational det(const SymMatrix& m);
Rational det_rows(RatRows rows);

// Determinants of the leading principal submatrices, orders 1..n.
std::vector<Rational> leading_minors(const SymMatrix& m);

// Positive semidefiniteness by recursive Schur complementation. A zero
// diagonal pivot forces its whole row to vanish; a negative diagonal or a
// nonzero entry in a zero-pivot row refutes.
bool is_psd(const SymMatrix& m);

// Smul'jan block test: [[A, B], [B^T, C]] >= 0 iff A >= 0, the system
// A W = B is consistent, and C - W^T B >= 0. Throws std::invalid_argument
// on dimension mismatch. A is p x p, B is p x q, C is q x q.
bool smuljan_psd(const SymMatrix& a, const RatRows& b, const SymMatrix& c);

// [[A, B], [B^T, C]] as one symmetric matrix, same shape checks.
SymMatrix block_matrix(const SymMatrix& a, const RatRows& b, const SymMatrix& c);

}  // namespace hyposhift
