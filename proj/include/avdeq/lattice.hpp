#pragma once

#include <optional>
#include <vector>

#include "avdeq/matrix.hpp"

namespace avdeq {

// Row-style Hermite normal form: zero rows removed, pivots positive and
// strictly to the right of the pivot above, entries above a pivot reduced
// into [0, pivot). The row span over Z is preserved; the result is the
// canonical basis of the row lattice.
IntMat hnf(const IntMat& m);

// Full HNF (zero rows kept at the bottom) together with a unimodular U such
// that U * m = h.
void hnf_with_transform(const IntMat& m, IntMat& h, IntMat& u);

struct SmithForm {
    IntMat d;                   // diagonal, d1 | d2 | ...
    std::vector<Int> divisors;  // nonzero diagonal entries (rank many)
};

// Smith normal form; divisors are the nonzero elementary divisors.
SmithForm snf(const IntMat& m);

// Basis of { x : x * m = 0 } as rows; saturated by construction.
IntMat left_kernel(const IntMat& m);

// Basis of { y : m * y^t = 0 } as rows.
inline IntMat right_kernel(const IntMat& m) { return left_kernel(transpose(m)); }

// A sublattice of Z^ambient_rank, stored as its canonical HNF basis.
struct LatticeSubgroup {
    long ambient_rank = 0;
    IntMat basis;  // HNF, one row per generator, rank rows

    LatticeSubgroup() = default;
    LatticeSubgroup(long ambient, IntMat generators);

    long rank() const { return basis.rows; }
    bool operator==(const LatticeSubgroup& o) const {
        return ambient_rank == o.ambient_rank && basis == o.basis;
    }
};

// Is v in the row lattice of the HNF basis h?
bool in_row_lattice(const IntMat& h, const std::vector<Int>& v);

// Smallest sublattice containing L with torsion-free quotient; same rank.
LatticeSubgroup saturate(const LatticeSubgroup& l);

// [super : sub]; nullopt means infinite index (rank drop). Throws
// NotSublattice when sub is not contained in super.
std::optional<Int> lattice_index(const LatticeSubgroup& sub, const LatticeSubgroup& super);

inline LatticeSubgroup full_lattice(long n) {
    return LatticeSubgroup(n, IntMat::identity(n));
}

}  // namespace avdeq
