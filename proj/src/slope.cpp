#include "avdeq/slope.hpp"

namespace avdeq {

SlopeClass make_slope(VarietyModel model, IntMat class_mat, Int denom) {
    if (denom < 1) fail("BadInput", "slope denominator must be positive");
    if (class_mat.rows != model.rank() || class_mat.cols != model.rank())
        fail("DimensionMismatch", "slope class must be 2n x 2n");
    if (!is_skew_symmetric(class_mat)) fail("NotSkew", "slope class must be skew-symmetric");
    Int g = gcd(content(class_mat), denom);
    if (g > 1) {
        for (Int& v : class_mat.a) v /= g;
        denom /= g;
    }
    return SlopeClass{std::move(model), std::move(class_mat), std::move(denom)};
}

SlopeClass slope_from_rational(VarietyModel model, const RatMat& g) {
    Int l;
    IntMat cleared = clear_denominators(g, l);
    return make_slope(std::move(model), std::move(cleared), std::move(l));
}

Correspondence slope_correspondence(const SlopeClass& mu) {
    const long r = mu.model.rank();
    // Image rows (l e_i, L e_i): basis [l I | L^t] = [l I | -L].
    IntMat basis = hstack(mu.denom * IntMat::identity(r), -mu.class_mat);
    LatticeSubgroup lat(2 * r, basis);
    return Correspondence{mu.model, saturate(lat)};
}

std::optional<Int> proj_degree_onto(const Correspondence& c, const std::vector<long>& cols) {
    IntMat image = hnf(select_columns(c.lattice.basis, cols));
    if (image.rows < static_cast<long>(cols.size())) return std::nullopt;
    Int d(1);
    for (long i = 0; i < image.rows; ++i) d *= image(i, i);
    return abs(d);
}

ProjDegrees proj_degrees(const Correspondence& c) {
    const long r = c.model.rank();
    std::vector<long> left(r), right(r);
    for (long i = 0; i < r; ++i) {
        left[i] = i;
        right[i] = r + i;
    }
    return ProjDegrees{proj_degree_onto(c, left), proj_degree_onto(c, right)};
}

std::pair<Int, Int> rank_chi(const SlopeClass& mu) {
    ProjDegrees d = proj_degrees(slope_correspondence(mu));
    if (!d.q1 || !d.q2) fail("DegenerateProjection", "projection of the correspondence collapses");
    auto r = isqrt_exact(*d.q1);
    auto chi = isqrt_exact(*d.q2);
    if (!r || !chi)
        fail("NotPerfectSquare", "projection degree is not a square; convention audit failed");
    return {*r, *chi};
}

Int sigma0_order(const SlopeClass& mu) {
    Int r = rank_chi(mu).first;
    return r * r;
}

Int sigma0_order_kernel_path(const SlopeClass& mu) {
    const long r = mu.model.rank();
    Correspondence c = slope_correspondence(mu);
    RatMat basis = to_rat(c.lattice.basis);
    RatMat left = submatrix(basis, 0, 0, c.lattice.rank(), r);
    RatMat right = submatrix(basis, 0, r, c.lattice.rank(), r);
    if (c.lattice.rank() != r || det(left) == 0)
        fail("DegenerateProjection", "q1 is not an isogeny");
    // Ker(q1) = { w in span : w_left integral } / lattice; its image under
    // q2 is the row span of (B_left)^-1 B_right taken mod Z^2n.
    RatMat kr = inverse(left) * right;
    Int s;
    IntMat scaled = clear_denominators(kr, s);
    IntMat stacked = hnf(vstack(scaled, s * IntMat::identity(r)));
    Int d(1);
    for (long i = 0; i < stacked.rows; ++i) d *= stacked(i, i);
    // [M : s Z^2n] for M generated by the rows above.
    Int total = 1;
    for (long i = 0; i < r; ++i) total *= s;
    return total / abs(d);
}

bool phi_mu_contains(const SlopeClass& mu, const TorsionPoint& d, const TorsionPoint& delta) {
    return correspondence_contains(slope_correspondence(mu), d, delta);
}

bool correspondence_contains(const Correspondence& c, const TorsionPoint& d,
                             const TorsionPoint& delta) {
    const long r = c.model.rank();
    if (d.size() != r || delta.size() != r)
        fail("DimensionMismatch", "points must live on D and D^");
    // (d, delta) lies on the sub-torus iff q*(d, delta) is in the lattice
    // generated by the basis and q Z^4n, where q clears denominators.
    Int q = lcm(d.order(), delta.order());
    std::vector<Int> v(2 * r);
    for (long i = 0; i < r; ++i) {
        Rat t = Rat(q) * d.coords[i];
        v[i] = t.get_num();  // integral after scaling by the order
    }
    for (long i = 0; i < r; ++i) {
        Rat t = Rat(q) * delta.coords[i];
        v[r + i] = t.get_num();
    }
    IntMat stacked = hnf(vstack(c.lattice.basis, q * IntMat::identity(2 * r)));
    return in_row_lattice(stacked, v);
}

SlopeClass kernel_slope_from_isometry(const DoubledMap& f) {
    if (!is_isometric(f)) fail("BadInput", "kernel slope needs an isometric map");
    if (det(f.y) == 0) fail("YNotInvertible", "y-block must be an isogeny; factor first");
    RatMat yinv = inverse(f.y);
    RatMat g = block2x2(yinv * f.x, -yinv, transpose(yinv), f.w * yinv);
    if (!is_skew_symmetric(g))
        fail("NotSymmetric", "kernel class is not hat-fixed; convention audit failed");
    return slope_from_rational(product_model(f.source, f.target), g);
}

Correspondence flipped_graph_lattice(const DoubledMap& f) {
    if (!f.is_integral_map()) fail("BadInput", "graph lattice needs an integral map");
    const long na = f.source.rank(), nb = f.target.rank();
    IntMat fm = to_int(f.homology_matrix());
    IntMat graph = hstack(IntMat::identity(2 * na), transpose(fm));
    // Negate the dual coordinate of the source, then reorder the columns of
    // (A, A^, B, B^) into ((A, B), (A^, B^)).
    for (long i = 0; i < graph.rows; ++i)
        for (long j = na; j < 2 * na; ++j) graph(i, j) = -graph(i, j);
    std::vector<long> order;
    for (long j = 0; j < na; ++j) order.push_back(j);                     // A
    for (long j = 0; j < nb; ++j) order.push_back(2 * na + j);            // B
    for (long j = 0; j < na; ++j) order.push_back(na + j);                // A^
    for (long j = 0; j < nb; ++j) order.push_back(2 * na + nb + j);       // B^
    IntMat basis = select_columns(graph, order);
    VarietyModel prod = product_model(f.source, f.target);
    return Correspondence{prod, saturate(LatticeSubgroup(2 * (na + nb), basis))};
}

RatMat restriction_slope(const DoubledMap& f) {
    if (det(f.y) == 0) fail("YNotInvertible", "restriction slope needs invertible y");
    RatMat nu = f.w * inverse(f.y);
    if (!is_skew_symmetric(nu))
        fail("NotSymmetric", "restriction class is not hat-fixed");
    return nu;
}

Int restriction_rank_square(const DoubledMap& f) {
    Rat d = det(f.y);
    if (d == 0) fail("YNotInvertible", "restriction rank needs invertible y");
    if (!is_integral(f.y)) fail("BadInput", "restriction rank needs an integral y-block");
    return abs(d.get_num());
}

}  // namespace avdeq
