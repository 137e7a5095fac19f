#include "avdeq/cocycle.hpp"

#include "avdeq/pfaffian.hpp"

namespace avdeq {

SlopeVector::SlopeVector(VarietyModel m, RatMat s) : model(std::move(m)), mat(std::move(s)) {
    if (mat.rows != model.rank() || mat.cols != model.rank())
        fail("DimensionMismatch", "slope vector must be 2n x 2n");
    if (!is_skew_symmetric(mat)) fail("NotSkew", "slope vector must be hat-fixed (skew)");
}

Poly index_polynomial(const SlopeVector& s) {
    const long n = s.model.dim;
    RatMat ample = to_rat(s.model.ample);
    // Pf(s + t*ample) has degree exactly n with leading coefficient
    // Pf(ample) > 0; interpolate from n+1 evaluations.
    std::vector<Rat> xs, ys;
    for (long i = 0; i <= n; ++i) {
        Rat t(static_cast<long>(i));
        xs.push_back(t);
        ys.push_back(pfaffian(s.mat + t * ample));
    }
    Poly acc;
    for (long i = 0; i <= n; ++i) {
        Poly term(std::vector<Rat>{Rat(1)});
        Rat denom(1);
        for (long j = 0; j <= n; ++j) {
            if (j == i) continue;
            term = term * Poly(std::vector<Rat>{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + (ys[i] / denom) * term;
    }
    return acc;
}

long p_index(const SlopeVector& s) { return count_negative_roots(index_polynomial(s)); }

long slope_signature(const SlopeVector& s) {
    Poly p = index_polynomial(s);
    return count_negative_roots(p) - count_positive_roots(p);
}

namespace {

bool y_invertible(const UElement& g) { return det(g.f.y) != 0; }

// y1^-1 y3 y2^-1 as a slope vector on A; the skewness assertion is part of
// the convention audit.
SlopeVector middle_class(const UElement& g1, const UElement& g2) {
    UElement g3 = g1 * g2;
    RatMat m = inverse(g1.f.y) * g3.f.y * inverse(g2.f.y);
    if (!is_skew_symmetric(m))
        fail("NotSymmetric", "y1^-1 y3 y2^-1 is not hat-fixed; convention audit failed");
    return SlopeVector(g1.model(), std::move(m));
}

long lambda_primary(const UElement& g1, const UElement& g2) {
    return p_index(middle_class(g1, g2)) - g1.model().dim;
}

long mu_primary(const UElement& g1, const UElement& g2) {
    return slope_signature(middle_class(g1, g2));
}

// Extension of a cocycle from invertible-y pairs to all pairs via the
// cocycle identity with auxiliary candidates (all of which have invertible
// y-block). check_limit viable auxiliaries are cross-checked at this level;
// `sink` (when set) collects every viable auxiliary instead.
template <typename Primary>
long cocycle_value(const UElement& g1, const UElement& g2, const Primary& primary,
                   size_t check_limit, int depth,
                   std::vector<std::pair<std::string, long>>* sink = nullptr) {
    const bool ok1 = y_invertible(g1), ok2 = y_invertible(g2);
    if (ok1 && ok2) {
        long v = primary(g1, g2);
        if (sink) sink->emplace_back("primary", v);
        return v;
    }
    if (depth > 2) fail("FactorizationNotFound", "cocycle extension recursion exhausted");

    auto cands = factor_candidates(g1.model());
    bool have = false;
    long value = 0;
    size_t used = 0;

    for (const Candidate& c : cands) {
        const UElement& h = c.g;
        long v;
        if (!ok1) {
            // lambda(g1,g2) = lambda(h, h^-1 g1 g2) + lambda(h^-1 g1, g2)
            //               - lambda(h, h^-1 g1)
            UElement hg1 = h.inverse() * g1;
            if (!y_invertible(hg1)) continue;
            UElement hg1g2 = hg1 * g2;
            if (!y_invertible(hg1g2)) continue;
            v = primary(h, hg1g2) + cocycle_value(hg1, g2, primary, 1, depth + 1) -
                primary(h, hg1);
        } else {
            // lambda(g1,g2) = lambda(g1, g2 h) + lambda(g1 g2 h, h^-1)
            //               - lambda(g2 h, h^-1)
            UElement g2h = g2 * h;
            if (!y_invertible(g2h)) continue;
            UElement g1g2h = g1 * g2h;
            if (!y_invertible(g1g2h)) continue;
            UElement hinv = h.inverse();
            v = primary(g1, g2h) + primary(g1g2h, hinv) - primary(g2h, hinv);
        }
        if (have && v != value)
            fail("ExtensionAmbiguous", "auxiliary '" + c.name + "' disagrees with earlier path");
        have = true;
        value = v;
        if (sink) sink->emplace_back(c.name, v);
        ++used;
        if (!sink && used >= check_limit) break;
    }
    if (!have) fail("FactorizationNotFound", "no auxiliary element applies");
    return value;
}

constexpr size_t kRuntimeCheckedPaths = 8;

}  // namespace

long lambda_cocycle(const UElement& g1, const UElement& g2) {
    if (!(g1.model() == g2.model())) fail("WrongModel", "cocycle arguments from different models");
    return cocycle_value(g1, g2, lambda_primary, kRuntimeCheckedPaths, 0);
}

long maslov_mu(const UElement& g1, const UElement& g2) {
    if (!(g1.model() == g2.model())) fail("WrongModel", "cocycle arguments from different models");
    return cocycle_value(g1, g2, mu_primary, kRuntimeCheckedPaths, 0);
}

std::vector<std::pair<std::string, long>> lambda_paths(const UElement& g1, const UElement& g2) {
    std::vector<std::pair<std::string, long>> out;
    cocycle_value(g1, g2, lambda_primary, kRuntimeCheckedPaths, 0, &out);
    return out;
}

UtildeElement utilde_mul(const UtildeElement& u1, const UtildeElement& u2) {
    return UtildeElement{u1.g * u2.g, u1.shift + u2.shift + lambda_cocycle(u1.g, u2.g)};
}

UtildeElement utilde_identity(const VarietyModel& m) {
    return UtildeElement{UElement::identity(m), Int(0)};
}

UtildeElement utilde_inverse(const UtildeElement& u) {
    UElement ginv = u.g.inverse();
    return UtildeElement{ginv, -u.shift - Int(lambda_cocycle(u.g, ginv))};
}

}  // namespace avdeq
