#pragma once

#include "avdeq/autoeq.hpp"
#include "avdeq/lattice.hpp"

namespace avdeq {

// A slope mu = [L]/l in NS(D) (x) Q: an integral skew class L over a
// positive integer l, stored in the normal form with gcd(content(L), l) = 1.
struct SlopeClass {
    VarietyModel model;  // D
    IntMat class_mat;    // [L], skew 2n x 2n
    Int denom;           // l >= 1
};

SlopeClass make_slope(VarietyModel model, IntMat class_mat, Int denom);

// Slope read off a rational hat-fixed matrix.
SlopeClass slope_from_rational(VarietyModel model, const RatMat& g);

// The correspondence attached to mu: the saturation of the image lattice of
// v |-> (l v, L v) inside the rank-4n lattice of D x D^.
struct Correspondence {
    VarietyModel model;       // D
    LatticeSubgroup lattice;  // rank 2n, saturated, HNF basis
};

Correspondence slope_correspondence(const SlopeClass& mu);

struct ProjDegrees {
    std::optional<Int> q1;  // degree onto D, nullopt = degenerate
    std::optional<Int> q2;  // degree onto D^
};

// Degrees of the two projections as lattice indices of the projected images.
ProjDegrees proj_degrees(const Correspondence& c);

// Index of the projection of the correspondence onto an arbitrary set of
// ambient coordinates; nullopt when the projection drops rank.
std::optional<Int> proj_degree_onto(const Correspondence& c, const std::vector<long>& cols);

// (r, |chi|) with r^2 = deg q1 and chi^2 = deg q2. Throws
// DegenerateProjection when a projection collapses and NotPerfectSquare if
// either degree fails to be a square (a convention-audit failure).
std::pair<Int, Int> rank_chi(const SlopeClass& mu);

// Order of the subgroup of twists fixing the bundle: r^2.
Int sigma0_order(const SlopeClass& mu);

// Same order computed independently as |q2(Ker q1)| from the correspondence
// lattice by Smith reduction; the cross-check path.
Int sigma0_order_kernel_path(const SlopeClass& mu);

// Does the torsion point (d, delta) of D x D^ lie on the correspondence?
bool phi_mu_contains(const SlopeClass& mu, const TorsionPoint& d, const TorsionPoint& delta);
bool correspondence_contains(const Correspondence& c, const TorsionPoint& d,
                             const TorsionPoint& delta);

// The slope on A x B attached to an isometric f: A x A^ -> B x B^ with
// invertible y-block:
//   g = (y^-1 x, -y^-1; -y^-hat-inverse, w y^-1),
// verified hat-fixed and cleared to ([L], l). Throws YNotInvertible,
// NotSymmetric.
SlopeClass kernel_slope_from_isometry(const DoubledMap& f);

// The correspondence of the graph of f inside (A x B) x (A x B)^, with the
// dual coordinate of the source negated; equals the correspondence of
// kernel_slope_from_isometry(f).
Correspondence flipped_graph_lattice(const DoubledMap& f);

// Slope of the fibre restrictions of the bundle attached to f: the class
// w y^-1 on B. The companion rank-square is |det y|. These are the numeric
// shadows of the restriction to a fibre {a} x B; the block reading follows
// the embedding A^ -> B x B^ with components (y, w).
RatMat restriction_slope(const DoubledMap& f);
Int restriction_rank_square(const DoubledMap& f);

}  // namespace avdeq
