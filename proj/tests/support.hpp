#pragma once

#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "avdeq/cocycle.hpp"
#include "avdeq/lattice.hpp"

namespace testsupport {

using namespace avdeq;

inline IntMat random_int_mat(std::mt19937_64& rng, long rows, long cols, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMat m(rows, cols);
    for (Int& v : m.a) v = d(rng);
    return m;
}

inline IntMat random_skew(std::mt19937_64& rng, long n, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMat m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            m(i, j) = d(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

inline IntMat random_unimodular(std::mt19937_64& rng, long n, int steps = 12) {
    std::uniform_int_distribution<long> pick(0, n - 1), val(-2, 2), coin(0, 1);
    IntMat u = IntMat::identity(n);
    for (int s = 0; s < steps; ++s) {
        long i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int c = val(rng);
        if (coin(rng))
            for (long k = 0; k < n; ++k) u(i, k) += c * u(j, k);
        else
            for (long k = 0; k < n; ++k) u(k, i) += c * u(k, j);
    }
    return u;
}

// Generators of U(A x A^) for sampling: unipotents plus the fourier element
// when the polarization is principal, with inverses.
inline std::vector<UElement> sampling_generators(const VarietyModel& m) {
    std::vector<UElement> gens = unipotent_generators(m);
    if (m.principally_polarized()) gens.push_back(UElement::checked(fourier_element(m)));
    size_t sz = gens.size();
    for (size_t i = 0; i < sz; ++i) gens.push_back(gens[i].inverse());
    return gens;
}

inline UElement random_word(std::mt19937_64& rng, const std::vector<UElement>& gens,
                            long max_len) {
    std::uniform_int_distribution<long> len(1, max_len);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    UElement g = UElement::identity(gens[0].model());
    long n = len(rng);
    for (long i = 0; i < n; ++i) g = g * gens[pick(rng)];
    return g;
}

// The finite abelian group Z^n / rowlattice(basis) for a full-rank basis,
// enumerated by brute force: canonical representatives are found by closing
// the generator set {e_i} under addition, reducing against the lattice via
// exact membership tests. Returns the multiset of element orders.
struct QuotientGroup {
    std::vector<std::vector<Int>> elements;  // coset representatives
    std::map<long, long> order_histogram;    // element order -> count
};

inline std::vector<Int> vec_mod_lattice(const IntMat& h, std::vector<Int> v) {
    // Reduce v to a canonical representative modulo the HNF lattice h.
    for (long i = 0; i < h.rows; ++i) {
        long pc = -1;
        for (long j = 0; j < h.cols; ++j)
            if (h(i, j) != 0) {
                pc = j;
                break;
            }
        if (pc < 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[pc].get_mpz_t(), h(i, pc).get_mpz_t());
        if (q != 0)
            for (long j = pc; j < h.cols; ++j) v[j] -= q * h(i, j);
    }
    return v;
}

inline QuotientGroup quotient_group(const IntMat& basis) {
    IntMat h = hnf(basis);
    const long n = h.cols;
    REQUIRE(h.rows == n);  // full rank
    QuotientGroup g;
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier{std::vector<Int>(n, Int(0))};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& v : frontier)
            for (long i = 0; i < n; ++i) {
                std::vector<Int> w = v;
                w[i] += 1;
                w = vec_mod_lattice(h, w);
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    g.elements.assign(seen.begin(), seen.end());
    for (const auto& v : g.elements) {
        std::vector<Int> acc(n, Int(0));
        long ord = 1;
        while (true) {
            for (long i = 0; i < n; ++i) acc[i] += v[i];
            acc = vec_mod_lattice(h, acc);
            bool zero = true;
            for (const Int& x : acc)
                if (x != 0) zero = false;
            if (zero) break;
            ++ord;
        }
        g.order_histogram[ord]++;
    }
    return g;
}

}  // namespace testsupport
