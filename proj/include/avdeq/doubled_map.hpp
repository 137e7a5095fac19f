#pragma once

#include "avdeq/homo.hpp"

namespace avdeq {

// The canonical symmetric bilinear form on a lattice of the shape
// Gamma (+) Gamma^*: Q((x,l),(y,m)) = l(y) + m(x), i.e. (0 I; I 0).
struct HyperbolicForm {
    long dim = 0;  // n; the form lives on the rank-4n lattice of A x A^
    IntMat mat;
};

HyperbolicForm hyperbolic_form(long n);

// A homomorphism f: A x A^ -> B x B^ in block form (x y; z w) with
// x: A -> B, y: A^ -> B, z: A -> B^, w: A^ -> B^.
struct DoubledMap {
    VarietyModel source;  // A
    VarietyModel target;  // B
    RatMat x, y, z, w;    // homology blocks, each 2 dim(B) x 2 dim(A)

    DoubledMap() = default;
    DoubledMap(VarietyModel src, VarietyModel dst, RatMat bx, RatMat by, RatMat bz, RatMat bw);

    Homo x_hom() const { return Homo(source, target, Variance::Plain, x); }
    Homo y_hom() const { return Homo(source, target, Variance::FromDual, y); }
    Homo z_hom() const { return Homo(source, target, Variance::ToDual, z); }
    Homo w_hom() const { return Homo(source, target, Variance::DualDual, w); }

    // Full matrix on the rank-4n homology of A x A^.
    RatMat homology_matrix() const { return block2x2(x, y, z, w); }

    bool is_integral_map() const;
    bool operator==(const DoubledMap& o) const;

    static DoubledMap identity(const VarietyModel& m);
    static DoubledMap from_homology(VarietyModel src, VarietyModel dst, const RatMat& h);

    // Scalar element (a, b phi_M; c phi_L, d) of a scalar model.
    static DoubledMap scalar(const VarietyModel& m, const Int& a, const Int& b, const Int& c,
                             const Int& d);

    // E^n model from condensed n x n integer blocks.
    static DoubledMap elliptic_condensed(const VarietyModel& m, const IntMat& xb, const IntMat& yb,
                                         const IntMat& zb, const IntMat& wb);
};

struct ScalarBlocks {
    Int a, b, c, d;
};

// Recover (a, b, c, d) when the map is of scalar shape; nullopt otherwise.
std::optional<ScalarBlocks> to_scalar(const DoubledMap& f);

DoubledMap compose(const DoubledMap& g, const DoubledMap& f);
DoubledMap operator*(const DoubledMap& g, const DoubledMap& f);

// The two companion maps B x B^ -> A x A^ with blocks
//   hat:   (w^  y^;  z^  x^)
//   tilde: (w^ -y^; -z^  x^)
// assembled from the duals of the individual blocks.
DoubledMap hat_map(const DoubledMap& f);
DoubledMap tilde_map(const DoubledMap& f);

// Exact inverse of the homology matrix, re-split into blocks.
DoubledMap invert(const DoubledMap& f);

// f is isometric iff it is an isomorphism of the integral lattices and
// tilde(f) is its inverse. Degenerate inputs (non-square, non-integral,
// non-unimodular) yield false, never an error.
bool is_isometric(const DoubledMap& f);

// Independent criterion: F^t Q_B F = Q_A on the full homology matrix.
// Equivalent to is_isometric; the agreement of the two routes is the
// convention audit.
bool q_form_check(const DoubledMap& f);

// The standard isometric element with x = w = 0, z = polarization,
// y = -(polarization inverse); requires a principal polarization.
DoubledMap fourier_element(const VarietyModel& m);

}  // namespace avdeq
