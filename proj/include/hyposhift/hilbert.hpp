#pragma once

#include "hyposhift/matrix.hpp"
#include "hyposhift/rational.hpp"

namespace hyposhift::hilbert {

// A_k(x, h): order k+1, corner entry x, entry (i, j) = 1/((i+j)h + 1)
// elsewhere (0-based).
struct GenHilbertParams {
    int k = 1;
    Rational x = Rational(1);
    Rational h = Rational(1);
};

// Throws std::domain_error unless k >= 1, x > 0, h > 0.
void validate(const GenHilbertParams& p);

SymMatrix build_generalized_hilbert(const GenHilbertParams& p);

// sfact(k) = 1! 2! ... k!
BigInt superfactorial(int k);

// f(x, h, 0) = x,
// f(x, h, l) = ((lh+1)/(lh))^2 f(x, h, l-1) - (2lh+1)/(lh)^2.
Rational f_recursion(const Rational& x, const Rational& h, int k);

// Telescoped closed form of the same recursion; equal by construction and
// kept separate as a cross-check.
Rational f_closed_form(const Rational& x, const Rational& h, int k);

// g(h, k) = prod_{m=1}^{k} (1/(mh+1))^{m+1} * prod_{j=0}^{k-1} (1/((2k-j)h+1))^{j+1}
Rational g_factor(const Rational& h, int k);

// det A_k(x, h) = h^{k(k+1)} sfact(k)^2 g(h, k) f(x, h, k)
Rational det_generalized_hilbert(const GenHilbertParams& p);

// Unique root of x -> f(x, h, k); for h >= 1 it is the positivity threshold
// of A_k(., h). Throws std::domain_error when h < 1 or k < 1.
Rational b_threshold(int k, const Rational& h);

// For h >= 1: A_k(x, h) >= 0 iff x >= b(k, h). Throws when h < 1.
bool is_psd_generalized_hilbert(const GenHilbertParams& p);

// det of the classical Hilbert matrix of order k+1: sfact(k)^4 / sfact(2k+1).
Rational classical_hilbert_det(int k);

}  // namespace hyposhift::hilbert
