#include "avdeq/doubled_map.hpp"

namespace avdeq {

HyperbolicForm hyperbolic_form(long n) {
    HyperbolicForm q;
    q.dim = n;
    IntMat id = IntMat::identity(2 * n);
    q.mat = block2x2(IntMat::zero(2 * n, 2 * n), id, id, IntMat::zero(2 * n, 2 * n));
    return q;
}

DoubledMap::DoubledMap(VarietyModel src, VarietyModel dst, RatMat bx, RatMat by, RatMat bz,
                       RatMat bw)
    : source(std::move(src)), target(std::move(dst)), x(std::move(bx)), y(std::move(by)),
      z(std::move(bz)), w(std::move(bw)) {
    const long r = target.rank(), c = source.rank();
    for (const RatMat* b : {&x, &y, &z, &w})
        if (b->rows != r || b->cols != c)
            fail("DimensionMismatch", "doubled map blocks must be 2 dim(B) x 2 dim(A)");
}

bool DoubledMap::is_integral_map() const {
    return is_integral(x) && is_integral(y) && is_integral(z) && is_integral(w);
}

bool DoubledMap::operator==(const DoubledMap& o) const {
    return source == o.source && target == o.target && x == o.x && y == o.y && z == o.z &&
           w == o.w;
}

DoubledMap DoubledMap::identity(const VarietyModel& m) {
    RatMat id = to_rat(IntMat::identity(m.rank()));
    RatMat zero = RatMat::zero(m.rank(), m.rank());
    return DoubledMap(m, m, id, zero, zero, id);
}

DoubledMap DoubledMap::from_homology(VarietyModel src, VarietyModel dst, const RatMat& h) {
    const long r = dst.rank(), c = src.rank();
    if (h.rows != 2 * r || h.cols != 2 * c)
        fail("DimensionMismatch", "homology matrix must be 4 dim(B) x 4 dim(A)");
    return DoubledMap(std::move(src), std::move(dst), submatrix(h, 0, 0, r, c),
                      submatrix(h, 0, c, r, c), submatrix(h, r, 0, r, c),
                      submatrix(h, r, c, r, c));
}

DoubledMap DoubledMap::scalar(const VarietyModel& m, const Int& a, const Int& b, const Int& c,
                              const Int& d) {
    RatMat id = to_rat(IntMat::identity(m.rank()));
    RatMat yb = to_rat(m.y_base());
    RatMat zb = to_rat(m.ample);
    return DoubledMap(m, m, Rat(a) * id, Rat(b) * yb, Rat(c) * zb, Rat(d) * id);
}

DoubledMap DoubledMap::elliptic_condensed(const VarietyModel& m, const IntMat& xb,
                                          const IntMat& yb, const IntMat& zb, const IntMat& wb) {
    if (m.kind != ModelKind::EllipticPower) fail("WrongModel", "condensed blocks need E^n model");
    for (const IntMat* b : {&xb, &yb, &zb, &wb})
        if (b->rows != m.dim || b->cols != m.dim)
            fail("DimensionMismatch", "condensed blocks must be n x n");
    IntMat id2 = IntMat::identity(2);
    IntMat j = symplectic_block();
    IntMat jinv = -j;  // J^-1 = -J
    return DoubledMap(m, m, to_rat(kron(xb, id2)), to_rat(kron(yb, jinv)), to_rat(kron(zb, j)),
                      to_rat(kron(wb, id2)));
}

std::optional<ScalarBlocks> to_scalar(const DoubledMap& f) {
    if (!(f.source == f.target)) return std::nullopt;
    if (!f.is_integral_map()) return std::nullopt;
    const VarietyModel& m = f.source;
    RatMat id = to_rat(IntMat::identity(m.rank()));
    RatMat yb = to_rat(m.y_base());
    RatMat zb = to_rat(m.ample);

    auto match = [](const RatMat& blk, const RatMat& base) -> std::optional<Int> {
        // blk == t * base for an integer t?
        Rat t(0);
        for (size_t i = 0; i < base.a.size(); ++i)
            if (base.a[i] != 0) {
                t = blk.a[i] / base.a[i];
                break;
            }
        if (!is_integral(t)) return std::nullopt;
        for (size_t i = 0; i < base.a.size(); ++i)
            if (blk.a[i] != t * base.a[i]) return std::nullopt;
        return t.get_num();
    };

    auto a = match(f.x, id), b = match(f.y, yb), c = match(f.z, zb), d = match(f.w, id);
    if (!a || !b || !c || !d) return std::nullopt;
    return ScalarBlocks{*a, *b, *c, *d};
}

DoubledMap compose(const DoubledMap& g, const DoubledMap& f) {
    Homo x3 = compose(g.x_hom(), f.x_hom()) + compose(g.y_hom(), f.z_hom());
    Homo y3 = compose(g.x_hom(), f.y_hom()) + compose(g.y_hom(), f.w_hom());
    Homo z3 = compose(g.z_hom(), f.x_hom()) + compose(g.w_hom(), f.z_hom());
    Homo w3 = compose(g.z_hom(), f.y_hom()) + compose(g.w_hom(), f.w_hom());
    return DoubledMap(f.source, g.target, x3.mat, y3.mat, z3.mat, w3.mat);
}

DoubledMap operator*(const DoubledMap& g, const DoubledMap& f) { return compose(g, f); }

DoubledMap hat_map(const DoubledMap& f) {
    return DoubledMap(f.target, f.source, dual(f.w_hom()).mat, dual(f.y_hom()).mat,
                      dual(f.z_hom()).mat, dual(f.x_hom()).mat);
}

DoubledMap tilde_map(const DoubledMap& f) {
    return DoubledMap(f.target, f.source, dual(f.w_hom()).mat, -dual(f.y_hom()).mat,
                      -dual(f.z_hom()).mat, dual(f.x_hom()).mat);
}

DoubledMap invert(const DoubledMap& f) {
    if (f.source.rank() != f.target.rank()) fail("Singular", "non-square doubled map");
    return DoubledMap::from_homology(f.target, f.source, inverse(f.homology_matrix()));
}

bool is_isometric(const DoubledMap& f) {
    if (f.source.rank() != f.target.rank()) return false;
    if (!f.is_integral_map()) return false;
    return compose(tilde_map(f), f) == DoubledMap::identity(f.source);
}

bool q_form_check(const DoubledMap& f) {
    if (f.source.rank() != f.target.rank()) return false;
    if (!f.is_integral_map()) return false;
    RatMat fm = f.homology_matrix();
    RatMat qa = to_rat(hyperbolic_form(f.source.dim).mat);
    RatMat qb = to_rat(hyperbolic_form(f.target.dim).mat);
    return transpose(fm) * qb * fm == qa;
}

DoubledMap fourier_element(const VarietyModel& m) {
    if (!m.principally_polarized())
        fail("NotPrincipallyPolarized", "fourier element needs a principal polarization");
    RatMat phi = to_rat(m.ample);
    RatMat zero = RatMat::zero(m.rank(), m.rank());
    return DoubledMap(m, m, zero, -inverse(phi), phi, zero);
}

}  // namespace avdeq
