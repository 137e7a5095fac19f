#include "avdeq/partners.hpp"

#include <numeric>

#include "avdeq/lattice.hpp"

namespace avdeq {

std::vector<long long> prime_factors(long long n_value) {
    if (n_value < 1) fail("BadInput", "N must be positive");
    std::vector<long long> ps;
    long long n = n_value;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::vector<long long> unitary_divisors(long long n_value) {
    if (n_value < 1) fail("BadInput", "N must be positive");
    // Unitary divisors are the products of full prime-power parts.
    std::vector<long long> parts;
    long long n = n_value;
    for (long long p : prime_factors(n_value)) {
        long long q = 1;
        while (n % p == 0) {
            q *= p;
            n /= p;
        }
        parts.push_back(q);
    }
    std::vector<long long> divs{1};
    for (long long q : parts) {
        size_t sz = divs.size();
        for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * q);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int torsion_kernel_order(const Homo& phi, long long k) {
    if (k < 1) fail("BadInput", "torsion level k must be positive");
    if (!phi.is_integral_map()) fail("NotIsogeny", "isogeny matrix must be integral");
    IntMat m = to_int(phi.mat);
    if (!m.is_square() || det(m) == 0) fail("NotIsogeny", "map has vanishing determinant");
    // v/k survives iff phi v = 0 mod k; diagonalize: d_i u_i = 0 mod k has
    // gcd(d_i, k) solutions per coordinate.
    Int order(1), kk(static_cast<long>(k));
    for (const Int& d : snf(m).divisors) order *= gcd(d, kk);
    return order;
}

PartnerReport partner_count(long long n_value) {
    PartnerReport r;
    r.n_value = n_value;
    r.divisors = unitary_divisors(n_value);
    r.count = static_cast<long long>(r.divisors.size());

    VarietyModel m = polarized_scalar(n_value);
    Homo phi_l(m, m, Variance::ToDual, to_rat(m.ample));
    for (long long k : r.divisors)
        r.kernel_orders.emplace_back(k, torsion_kernel_order(phi_l, k));
    return r;
}

}  // namespace avdeq
