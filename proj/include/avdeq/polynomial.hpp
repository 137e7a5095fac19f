#pragma once

#include <vector>

#include "avdeq/numeric.hpp"

namespace avdeq {

// Polynomial over Q, coefficients with the constant term first.
// The zero polynomial is the empty coefficient vector.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
    const Rat& leading() const { return c.back(); }

    Rat eval(const Rat& t) const {
        Rat v(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
        return v;
    }

    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator-(const Poly& p, const Poly& q);
Poly operator*(const Poly& p, const Poly& q);
Poly operator*(const Rat& s, const Poly& p);

Poly derivative(const Poly& p);

// Euclidean division p = q*d + r with deg r < deg d.
void divmod(const Poly& p, const Poly& d, Poly& q, Poly& r);

// Monic gcd over Q.
Poly poly_gcd(const Poly& p, const Poly& q);

// p / gcd(p, p'): the same roots, all simple.
Poly squarefree_part(const Poly& p);

// Number of distinct real roots of a squarefree polynomial in the open
// interval (a, b), by Sturm's theorem. Endpoints must not be roots.
long sturm_count_open(const Poly& squarefree, const Rat& a, const Rat& b);

// Real roots strictly less than 0, counted with multiplicity: Sturm counts
// on the squarefree levels of the gcd tower p, gcd(p,p'), gcd(..)', ...
// Roots at exactly 0 are not counted. Throws ZeroPolynomial.
long count_negative_roots(const Poly& p);

// Real roots strictly greater than 0, with multiplicity.
long count_positive_roots(const Poly& p);

}  // namespace avdeq
