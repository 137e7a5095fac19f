#include "avdeq/homo.hpp"

namespace avdeq {

Variance make_variance(bool src_dual, bool dst_dual) {
    if (!src_dual && !dst_dual) return Variance::Plain;
    if (!src_dual && dst_dual) return Variance::ToDual;
    if (src_dual && !dst_dual) return Variance::FromDual;
    return Variance::DualDual;
}

const char* variance_name(Variance v) {
    switch (v) {
        case Variance::Plain: return "plain";
        case Variance::ToDual: return "to_dual";
        case Variance::FromDual: return "from_dual";
        case Variance::DualDual: return "dual_dual";
    }
    return "?";
}

Homo::Homo(VarietyModel src, VarietyModel dst, Variance v, RatMat m)
    : source(std::move(src)), target(std::move(dst)), var(v), mat(std::move(m)) {
    if (mat.rows != target.rank() || mat.cols != source.rank())
        fail("DimensionMismatch", "homomorphism matrix must be 2 dim(target) x 2 dim(source)");
}

Homo dual(const Homo& f) {
    bool flip_sign = source_is_dual(f.var) != target_is_dual(f.var);
    RatMat m = transpose(f.mat);
    if (flip_sign) m = -m;
    return Homo(f.target, f.source, make_variance(!target_is_dual(f.var), !source_is_dual(f.var)),
                std::move(m));
}

Homo compose(const Homo& g, const Homo& f) {
    if (!(f.target == g.source)) fail("VarianceMismatch", "composition over different varieties");
    if (target_is_dual(f.var) != source_is_dual(g.var))
        fail("VarianceMismatch", "variance chain does not type-check");
    return Homo(f.source, g.target, make_variance(source_is_dual(f.var), target_is_dual(g.var)),
                g.mat * f.mat);
}

Homo invert(const Homo& f) {
    if (f.mat.rows != f.mat.cols) fail("Singular", "only square maps are invertible");
    return Homo(f.target, f.source, make_variance(target_is_dual(f.var), source_is_dual(f.var)),
                inverse(f.mat));
}

Homo operator+(const Homo& f, const Homo& g) {
    if (!(f.source == g.source) || !(f.target == g.target) || f.var != g.var)
        fail("VarianceMismatch", "sum of homomorphisms of different type");
    return Homo(f.source, f.target, f.var, f.mat + g.mat);
}

bool operator==(const Homo& f, const Homo& g) {
    return f.source == g.source && f.target == g.target && f.var == g.var && f.mat == g.mat;
}

}  // namespace avdeq
