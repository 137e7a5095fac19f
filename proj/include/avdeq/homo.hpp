#pragma once

#include "avdeq/model.hpp"

namespace avdeq {

// Which of {A, A^} maps to which of {B, B^}.
enum class Variance { Plain, ToDual, FromDual, DualDual };

inline bool source_is_dual(Variance v) {
    return v == Variance::FromDual || v == Variance::DualDual;
}
inline bool target_is_dual(Variance v) {
    return v == Variance::ToDual || v == Variance::DualDual;
}
Variance make_variance(bool src_dual, bool dst_dual);
const char* variance_name(Variance v);

// A homomorphism of abelian varieties as a map of homology lattices, tagged
// with its source/target variety models and its variance. Matrices are
// stored over Q so that isogeny inverses in Hom (x) Q are first-class;
// genuine homomorphisms are the integral ones.
struct Homo {
    VarietyModel source;  // underlying A
    VarietyModel target;  // underlying B
    Variance var = Variance::Plain;
    RatMat mat;  // 2 dim(B) x 2 dim(A)

    Homo() = default;
    Homo(VarietyModel src, VarietyModel dst, Variance v, RatMat m);

    bool is_integral_map() const { return is_integral(mat); }
};

// Dual homomorphism. Plain <-> DualDual with the transposed matrix; ToDual
// and FromDual keep their variance and pick up the sign of the double-dual
// identification: the matrix is the negated transpose.
Homo dual(const Homo& f);

// g after f; variance chains must match. Throws VarianceMismatch /
// DimensionMismatch.
Homo compose(const Homo& g, const Homo& f);

// Exact inverse in Hom (x) Q. Throws Singular.
Homo invert(const Homo& f);

Homo operator+(const Homo& f, const Homo& g);

bool operator==(const Homo& f, const Homo& g);

}  // namespace avdeq
