#pragma once

#include <string>
#include <vector>

#include "avdeq/doubled_map.hpp"

namespace avdeq {

// An element of the isometry group U(A x A^): a doubled map with source =
// target that passes the isometry check at construction.
struct UElement {
    DoubledMap f;

    static UElement checked(DoubledMap g);
    static UElement identity(const VarietyModel& m) {
        return UElement{DoubledMap::identity(m)};
    }

    const VarietyModel& model() const { return f.source; }
    UElement operator*(const UElement& o) const { return UElement{compose(f, o.f)}; }
    UElement inverse() const { return UElement{tilde_map(f)}; }  // tilde is the inverse
    bool operator==(const UElement& o) const { return f == o.f; }
};

// Group membership; alias of is_isometric in group context.
inline bool membership(const DoubledMap& f) { return is_isometric(f); }

// Element of the congruence subgroup Gamma_0(N) in SL(2,Z): the matrix
// (a b; c d) with ad - bc = 1 and N | c.
struct Gamma0Element {
    Int a, b, c, d;
    long level = 1;

    Gamma0Element(Int a_, Int b_, Int c_, Int d_, long n);
    Gamma0Element operator*(const Gamma0Element& o) const;
    bool operator==(const Gamma0Element& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d && level == o.level;
    }
};

// The isomorphism of U(A x A^) with Gamma_0(N) for the PolarizedScalar(N)
// model: (a, b phi_M; c phi_L, d) |-> (a, b; N c, d). Throws WrongModel.
Gamma0Element to_gamma0(const UElement& u);

// Elementary unipotent isometric elements (I, Psi; 0, I) and (I, 0; Phi, I)
// for a fixed set of skew classes Psi, Phi per model: the candidate
// vocabulary for factorization and cocycle extension.
std::vector<UElement> unipotent_generators(const VarietyModel& m);

// Deterministic candidate list, all with invertible y-block, used by
// factor_by_isogeny_y and by the cocycle extension. Order is fixed:
// S, S^-1, then T^k S, S T^k, bare T^k over the unipotent vocabulary.
struct Candidate {
    UElement g;
    std::string name;
};
std::vector<Candidate> factor_candidates(const VarietyModel& m);

struct Factorization {
    DoubledMap f1;  // y-block invertible
    UElement f2;    // y-block invertible, in U(A x A^)
    std::string candidate;
    long candidate_index = -1;
};

// Present an isometric f as f1 . f2 with both y-blocks invertible, f2 in
// U(A x A^). Deterministic first hit in the candidate order; recomposition
// is verified on every call. Throws FactorizationNotFound.
Factorization factor_by_isogeny_y(const DoubledMap& f);

}  // namespace avdeq
