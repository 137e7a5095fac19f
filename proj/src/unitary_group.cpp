#include "avdeq/unitary_group.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace avdeq {

UElement UElement::checked(DoubledMap g) {
    if (!(g.source == g.target)) fail("WrongModel", "U elements have source = target");
    if (!is_isometric(g)) fail("BadInput", "doubled map is not isometric");
    return UElement{std::move(g)};
}

Gamma0Element::Gamma0Element(Int a_, Int b_, Int c_, Int d_, long n)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), level(n) {
    if (a * d - b * c != 1) fail("BadInput", "Gamma0 element must have determinant 1");
    if (c % level != 0) fail("BadInput", "lower-left entry must be divisible by the level");
}

Gamma0Element Gamma0Element::operator*(const Gamma0Element& o) const {
    if (level != o.level) fail("WrongModel", "Gamma0 level mismatch");
    return Gamma0Element(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                         c * o.b + d * o.d, level);
}

Gamma0Element to_gamma0(const UElement& u) {
    if (u.model().kind != ModelKind::PolarizedScalar)
        fail("WrongModel", "to_gamma0 needs the PolarizedScalar model");
    auto s = to_scalar(u.f);
    if (!s) fail("WrongModel", "element is not of scalar shape");
    const long n_level = u.model().level;
    return Gamma0Element(s->a, s->b, Int(n_level) * s->c, s->d, n_level);
}

namespace {

// Skew classes used as unipotent parameters. For E^n these are the
// symmetric condensed matrices I, E_ii, E_ij + E_ji expanded per factor;
// generically the polarization and its (cleared) inverse.
std::vector<IntMat> skew_vocabulary_lower(const VarietyModel& m) {
    std::vector<IntMat> out;
    if (m.kind == ModelKind::EllipticPower) {
        const long n = m.dim;
        IntMat j = symplectic_block();
        std::vector<IntMat> sym;
        sym.push_back(IntMat::identity(n));
        for (long i = 0; i < n; ++i) {
            IntMat e = IntMat::zero(n, n);
            e(i, i) = 1;
            sym.push_back(e);
        }
        for (long i = 0; i < n; ++i)
            for (long jj = i + 1; jj < n; ++jj) {
                IntMat e = IntMat::zero(n, n);
                e(i, jj) = 1;
                e(jj, i) = 1;
                sym.push_back(e);
            }
        for (const IntMat& s : sym) out.push_back(kron(s, j));
    } else {
        out.push_back(m.ample);
    }
    return out;
}

std::vector<IntMat> skew_vocabulary_upper(const VarietyModel& m) {
    std::vector<IntMat> out;
    if (m.kind == ModelKind::EllipticPower) {
        for (IntMat s : skew_vocabulary_lower(m)) out.push_back(-s);  // condensed J^-1 = -J
        return out;
    }
    Int d;
    out.push_back(clear_denominators(inverse(to_rat(m.ample)), d));
    return out;
}

UElement upper_unipotent(const VarietyModel& m, const IntMat& psi) {
    RatMat id = to_rat(IntMat::identity(m.rank()));
    RatMat zero = RatMat::zero(m.rank(), m.rank());
    return UElement::checked(DoubledMap(m, m, id, to_rat(psi), zero, id));
}

UElement lower_unipotent(const VarietyModel& m, const IntMat& phi) {
    RatMat id = to_rat(IntMat::identity(m.rank()));
    RatMat zero = RatMat::zero(m.rank(), m.rank());
    return UElement::checked(DoubledMap(m, m, id, zero, to_rat(phi), id));
}

bool y_invertible(const DoubledMap& f) {
    return f.y.is_square() && det(f.y) != 0;
}

UElement pow(const UElement& g, long k) {
    UElement r = UElement::identity(g.model());
    UElement base = k >= 0 ? g : g.inverse();
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
    return r;
}

}  // namespace

std::vector<UElement> unipotent_generators(const VarietyModel& m) {
    std::vector<UElement> out;
    for (const IntMat& psi : skew_vocabulary_upper(m)) out.push_back(upper_unipotent(m, psi));
    for (const IntMat& phi : skew_vocabulary_lower(m)) out.push_back(lower_unipotent(m, phi));
    return out;
}

namespace {

std::string model_cache_key(const VarietyModel& m) {
    std::ostringstream os;
    os << static_cast<int>(m.kind) << ':' << m.dim << ':' << m.level;
    for (const Int& v : m.ample.a) os << ',' << v;
    return os.str();
}

}  // namespace

std::vector<Candidate> factor_candidates(const VarietyModel& m) {
    // The list is pure in the model; cache it behind a read-concurrent lock
    // keyed by model value, since the cocycle extension asks repeatedly.
    static std::shared_mutex cache_mutex;
    static std::map<std::string, std::vector<Candidate>> cache;
    const std::string key = model_cache_key(m);
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    std::vector<Candidate> out;
    auto push = [&](UElement g, std::string name) {
        if (!y_invertible(g.f)) return;
        for (const Candidate& c : out)
            if (c.g == g) return;
        out.push_back(Candidate{std::move(g), std::move(name)});
    };

    const long budget = m.dim + 2;
    std::vector<UElement> uppers, lowers;
    for (const IntMat& psi : skew_vocabulary_upper(m)) uppers.push_back(upper_unipotent(m, psi));
    for (const IntMat& phi : skew_vocabulary_lower(m)) lowers.push_back(lower_unipotent(m, phi));

    if (m.principally_polarized()) {
        UElement s = UElement::checked(fourier_element(m));
        push(s, "S");
        push(s.inverse(), "S^-1");
        auto with_s = [&](const std::vector<UElement>& gens, const char* tag) {
            for (size_t gi = 0; gi < gens.size(); ++gi)
                for (long k = 1; k <= budget; ++k)
                    for (long sgn : {1L, -1L}) {
                        UElement tk = pow(gens[gi], sgn * k);
                        std::string base =
                            std::string(tag) + std::to_string(gi) + "^" + std::to_string(sgn * k);
                        push(tk * s, base + "*S");
                        push(s * tk, "S*" + base);
                    }
        };
        with_s(uppers, "T");
        with_s(lowers, "L");
    }
    for (size_t gi = 0; gi < uppers.size(); ++gi)
        for (long k = 1; k <= budget; ++k)
            for (long sgn : {1L, -1L})
                push(pow(uppers[gi], sgn * k), "T" + std::to_string(gi) + "^" + std::to_string(sgn * k));

    std::unique_lock lock(cache_mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

Factorization factor_by_isogeny_y(const DoubledMap& f) {
    if (!is_isometric(f)) fail("BadInput", "factorization needs an isometric map");
    auto cands = factor_candidates(f.source);
    for (size_t i = 0; i < cands.size(); ++i) {
        const UElement& f2 = cands[i].g;
        DoubledMap f1 = compose(f, f2.inverse().f);
        if (!y_invertible(f1)) continue;
        if (!(compose(f1, f2.f) == f)) fail("InternalError", "factorization recomposition failed");
        return Factorization{std::move(f1), f2, cands[i].name, static_cast<long>(i)};
    }
    fail("FactorizationNotFound", "no candidate in the search order works");
}

}  // namespace avdeq
