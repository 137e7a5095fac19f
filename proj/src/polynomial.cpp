#include "avdeq/polynomial.hpp"

namespace avdeq {

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rat> c(std::max(p.c.size(), q.c.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < p.c.size()) c[i] += p.c[i];
        if (i < q.c.size()) c[i] += q.c[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) {
    std::vector<Rat> c(std::max(p.c.size(), q.c.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < p.c.size()) c[i] += p.c[i];
        if (i < q.c.size()) c[i] -= q.c[i];
    }
    return Poly(std::move(c));
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Rat> c(p.c.size() + q.c.size() - 1);
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        for (size_t j = 0; j < q.c.size(); ++j) c[i + j] += p.c[i] * q.c[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> c(p.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * p.c[i];
    return Poly(std::move(c));
}

Poly derivative(const Poly& p) {
    if (p.c.size() <= 1) return Poly();
    std::vector<Rat> c(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * p.c[i];
    return Poly(std::move(c));
}

void divmod(const Poly& p, const Poly& d, Poly& q, Poly& r) {
    if (d.is_zero()) fail("ZeroPolynomial", "division by the zero polynomial");
    r = p;
    q = Poly();
    q.c.assign(p.c.size(), Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long shift = r.degree() - d.degree();
        Rat f = r.leading() / d.leading();
        q.c[shift] += f;
        for (long i = 0; i <= d.degree(); ++i) r.c[i + shift] -= f * d.c[i];
        r.trim();
    }
    q.trim();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly quo, rem;
        divmod(a, b, quo, rem);
        a = b;
        b = rem;
    }
    if (a.is_zero()) return a;
    return (Rat(1) / a.leading()) * a;  // monic representative
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "squarefree part of zero");
    Poly g = poly_gcd(p, derivative(p));
    if (g.degree() <= 0) return p;
    Poly q, r;
    divmod(p, g, q, r);
    return q;
}

namespace {

// Sign of p at -infinity, 0, or +infinity depending on `where` (-1, 0, +1).
int sign_at(const Poly& p, int where) {
    if (p.is_zero()) return 0;
    if (where == 0) return sign(p.c[0]);
    int s = sign(p.leading());
    if (where < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

long sign_changes(const std::vector<int>& signs) {
    long count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, derivative(p)};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Poly q, r;
        divmod(chain[chain.size() - 2], chain.back(), q, r);
        chain.push_back(Rat(-1) * r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

// Roots of a squarefree p in (-inf, 0), assuming p(0) != 0.
long negative_roots_squarefree(const Poly& p) {
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(p);
    std::vector<int> at_minus_inf, at_zero;
    at_minus_inf.reserve(chain.size());
    at_zero.reserve(chain.size());
    for (const Poly& f : chain) {
        at_minus_inf.push_back(sign_at(f, -1));
        at_zero.push_back(sign_at(f, 0));
    }
    return sign_changes(at_minus_inf) - sign_changes(at_zero);
}

// Strips t^k and returns p with no root at 0.
Poly strip_root_at_zero(Poly p) {
    size_t k = 0;
    while (k < p.c.size() && p.c[k] == 0) ++k;
    if (k > 0) p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(k));
    return p;
}

long count_roots_with_multiplicity_below_zero(const Poly& p) {
    long total = 0;
    // gcd tower: level k holds exactly the roots of multiplicity > k, so
    // summing distinct-root counts over levels recovers multiplicities.
    Poly level = p;
    while (level.degree() > 0) {
        Poly sf = strip_root_at_zero(squarefree_part(level));
        total += negative_roots_squarefree(sf);
        level = poly_gcd(level, derivative(level));
    }
    return total;
}

Poly reflect(const Poly& p) {  // p(-t)
    Poly r = p;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
}

}  // namespace

long sturm_count_open(const Poly& squarefree, const Rat& a, const Rat& b) {
    if (squarefree.is_zero()) fail("ZeroPolynomial", "Sturm count of zero");
    if (squarefree.eval(a) == 0 || squarefree.eval(b) == 0)
        fail("BadInput", "Sturm endpoints must not be roots");
    auto chain = sturm_chain(squarefree);
    std::vector<int> at_a, at_b;
    for (const Poly& f : chain) {
        at_a.push_back(sign(f.eval(a)) );
        at_b.push_back(sign(f.eval(b)) );
    }
    return sign_changes(at_a) - sign_changes(at_b);
}

long count_negative_roots(const Poly& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "root count of the zero polynomial");
    return count_roots_with_multiplicity_below_zero(p);
}

long count_positive_roots(const Poly& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "root count of the zero polynomial");
    return count_roots_with_multiplicity_below_zero(reflect(p));
}

}  // namespace avdeq
