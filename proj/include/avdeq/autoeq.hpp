#pragma once

#include "avdeq/cocycle.hpp"

namespace avdeq {

// A torsion k-point of A x A^: rational homology coordinates reduced mod 1
// into [0,1). Only torsion points have an exact representation, so the
// model is restricted to them.
struct TorsionPoint {
    std::vector<Rat> coords;

    static TorsionPoint reduced(std::vector<Rat> raw);
    static TorsionPoint zero(long n) { return TorsionPoint{std::vector<Rat>(n, Rat(0))}; }

    long size() const { return static_cast<long>(coords.size()); }
    bool is_zero() const;
    Int order() const;  // lcm of denominators

    bool operator==(const TorsionPoint& o) const { return coords == o.coords; }
};

TorsionPoint operator+(const TorsionPoint& p, const TorsionPoint& q);
TorsionPoint operator-(const TorsionPoint& p);

// Matrix action of a doubled map on point coordinates, mod 1.
TorsionPoint act(const DoubledMap& f, const TorsionPoint& p);

// Conjugation transport of a twist-shift point by an isometry.
inline TorsionPoint conj_point(const UElement& g, const TorsionPoint& p) { return act(g.f, p); }

// Element of the autoequivalence group model: a triple
// (shift, point, isometry) with the split multiplication law
//   (i1,p1,g1)(i2,p2,g2) = (i1+i2+lambda(g1,g2), p1 + g1.p2, g1 g2).
struct AutoeqElement {
    Int shift;
    TorsionPoint point;
    UElement g;

    bool operator==(const AutoeqElement& o) const {
        return shift == o.shift && point == o.point && g == o.g;
    }
};

AutoeqElement autoeq_identity(const VarietyModel& m);
AutoeqElement autoeq_mul(const AutoeqElement& a1, const AutoeqElement& a2);
AutoeqElement autoeq_inverse(const AutoeqElement& a);

// The homomorphism onto U(A x A^); its kernel is exactly the set of
// (shift, point, e) triples, the group Z (+) (A x A^)_k.
inline UElement gamma_project(const AutoeqElement& a) { return a.g; }

inline bool in_gamma_kernel(const AutoeqElement& a) {
    return a.g == UElement::identity(a.g.model());
}

// The kernel element d with a . d = b; requires equal projections.
AutoeqElement autoeq_divide(const AutoeqElement& a, const AutoeqElement& b);

}  // namespace avdeq
