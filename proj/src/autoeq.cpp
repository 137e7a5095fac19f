#include "avdeq/autoeq.hpp"

namespace avdeq {

namespace {

Rat mod1(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q - Rat(fl);
}

}  // namespace

TorsionPoint TorsionPoint::reduced(std::vector<Rat> raw) {
    for (Rat& q : raw) q = mod1(q);
    return TorsionPoint{std::move(raw)};
}

bool TorsionPoint::is_zero() const {
    for (const Rat& q : coords)
        if (q != 0) return false;
    return true;
}

Int TorsionPoint::order() const {
    Int l(1);
    for (const Rat& q : coords) l = lcm(l, q.get_den());
    return l;
}

TorsionPoint operator+(const TorsionPoint& p, const TorsionPoint& q) {
    if (p.size() != q.size()) fail("DimensionMismatch", "point addition");
    std::vector<Rat> c(p.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coords[i] + q.coords[i];
    return TorsionPoint::reduced(std::move(c));
}

TorsionPoint operator-(const TorsionPoint& p) {
    std::vector<Rat> c(p.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -p.coords[i];
    return TorsionPoint::reduced(std::move(c));
}

TorsionPoint act(const DoubledMap& f, const TorsionPoint& p) {
    RatMat h = f.homology_matrix();
    if (h.cols != p.size()) fail("DimensionMismatch", "point has wrong ambient rank");
    std::vector<Rat> out(h.rows, Rat(0));
    for (long i = 0; i < h.rows; ++i)
        for (long j = 0; j < h.cols; ++j)
            if (h(i, j) != 0) out[i] += h(i, j) * p.coords[j];
    return TorsionPoint::reduced(std::move(out));
}

AutoeqElement autoeq_identity(const VarietyModel& m) {
    return AutoeqElement{Int(0), TorsionPoint::zero(2 * m.rank()), UElement::identity(m)};
}

AutoeqElement autoeq_mul(const AutoeqElement& a1, const AutoeqElement& a2) {
    if (!(a1.g.model() == a2.g.model())) fail("WrongModel", "autoeq product across models");
    return AutoeqElement{a1.shift + a2.shift + Int(lambda_cocycle(a1.g, a2.g)),
                         a1.point + conj_point(a1.g, a2.point), a1.g * a2.g};
}

AutoeqElement autoeq_inverse(const AutoeqElement& a) {
    UElement ginv = a.g.inverse();
    return AutoeqElement{-a.shift - Int(lambda_cocycle(a.g, ginv)),
                         -conj_point(ginv, a.point), ginv};
}

AutoeqElement autoeq_divide(const AutoeqElement& a, const AutoeqElement& b) {
    if (!(gamma_project(a) == gamma_project(b)))
        fail("BadInput", "division needs equal projections to U");
    AutoeqElement d = autoeq_mul(autoeq_inverse(a), b);
    if (!in_gamma_kernel(d)) fail("InternalError", "quotient of equal lifts left the kernel");
    return d;
}

}  // namespace avdeq
