#pragma once

#include <utility>

#include "avdeq/polynomial.hpp"
#include "avdeq/unitary_group.hpp"

namespace avdeq {

// An element of NS(A) (x) Q in the lattice picture: a hat-fixed map
// A -> A^ (x) Q, i.e. a skew-symmetric rational matrix of size 2n.
struct SlopeVector {
    VarietyModel model;
    RatMat mat;

    SlopeVector(VarietyModel m, RatMat s);
};

// The characteristic polynomial of the index computation,
// P(t) = Pf(s + t * ample), of degree exactly n.
Poly index_polynomial(const SlopeVector& s);

// Index function p on NS (x) Q: the number of negative roots of P, with
// multiplicity. p(ample) = n, p(-ample) = 0, p(0) = 0 (a root at 0 does
// not count).
long p_index(const SlopeVector& s);

// Signature of the class: roots of P on the two open half-lines,
// (# negative) - (# positive); zeros contribute nothing.
long slope_signature(const SlopeVector& s);

// The 2-cocycle of the central extension of U(A x A^) by Z:
//   lambda(g1, g2) = p(y1^-1 y3 y2^-1) - n
// when the y-blocks of g1 and g2 are invertible; extended to all pairs
// through the cocycle identity with auxiliary candidate elements, checking
// that every viable auxiliary gives the same value. Normalized so that
// lambda(e, .) = lambda(., e) = 0.
// Throws ExtensionAmbiguous if two auxiliary paths disagree,
// FactorizationNotFound if no auxiliary applies.
long lambda_cocycle(const UElement& g1, const UElement& g2);

// Maslov-type cocycle: the signature of y1^-1 y3 y2^-1, extended to
// non-invertible-y pairs in the same way.
long maslov_mu(const UElement& g1, const UElement& g2);

// Value of lambda along every viable auxiliary path (a single "primary"
// entry when both y-blocks are invertible); the well-definedness audit.
std::vector<std::pair<std::string, long>> lambda_paths(const UElement& g1, const UElement& g2);

// Element of the central extension: (g, shift) with multiplication
// (g1,k1)(g2,k2) = (g1 g2, k1 + k2 + lambda(g1,g2)).
struct UtildeElement {
    UElement g;
    Int shift;

    bool operator==(const UtildeElement& o) const { return g == o.g && shift == o.shift; }
};

UtildeElement utilde_mul(const UtildeElement& u1, const UtildeElement& u2);
UtildeElement utilde_identity(const VarietyModel& m);
UtildeElement utilde_inverse(const UtildeElement& u);

}  // namespace avdeq
