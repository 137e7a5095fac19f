#pragma once

#include "avdeq/matrix.hpp"
#include "avdeq/pfaffian.hpp"

namespace avdeq {

// 2x2 building block: the degree-one polarization of a single elliptic
// factor, Pf = +1.
inline IntMat symplectic_block() { return IntMat{{Int(0), Int(1)}, {Int(-1), Int(0)}}; }

enum class ModelKind { EllipticPower, PolarizedScalar, LatticeGeneric };

// A lattice model of an abelian variety A: the rank-2n homology lattice with
// a distinguished polarization matrix `ample` (the map A -> A^ induced by an
// ample class; skew-symmetric with Pf > 0 in our basis conventions).
//
// Basis conventions, used consistently everywhere: fix a basis l_1..l_2n of
// the homology of A and the dual basis of the homology of A^. The dual of a
// plain homomorphism is the plain transpose; the dual of a homomorphism into
// a dual variety picks up one minus sign from the canonical identification
// with the double dual. Under these conventions the hat-fixed maps A -> A^
// are exactly the skew-symmetric matrices.
struct VarietyModel {
    ModelKind kind = ModelKind::LatticeGeneric;
    long dim = 0;    // n
    long level = 1;  // N for PolarizedScalar, 1 otherwise
    IntMat ample;    // 2n x 2n, skew, Pf > 0

    long rank() const { return 2 * dim; }
    bool principally_polarized() const;

    // Base matrix for the y-slot of scalar elements: the map A^ -> A with
    // y_base * ample = level * identity.
    IntMat y_base() const;

    bool operator==(const VarietyModel& o) const {
        return kind == o.kind && dim == o.dim && level == o.level && ample == o.ample;
    }
};

// A = E^n: polarization is one symplectic block per elliptic factor, bases
// ordered pairwise per factor.
VarietyModel elliptic_power(long n);

// End(A) = Z model at level N: generators L of NS(A) and M of NS(A^) with
// phi_M . phi_L = N id. Realized on a rank-4 lattice with polarization of
// elementary divisor type (1, N), so the kernel of phi_L is (Z/N)^2.
VarietyModel polarized_scalar(long n_level);

VarietyModel lattice_generic(IntMat ample);

// Product model A x B with the product polarization.
VarietyModel product_model(const VarietyModel& a, const VarietyModel& b);

}  // namespace avdeq
