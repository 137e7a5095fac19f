#pragma once

#include "avdeq/homo.hpp"

namespace avdeq {

// Divisors k of N with gcd(k, N/k) = 1, sorted ascending.
std::vector<long long> unitary_divisors(long long n_value);

// Distinct prime factors by deterministic trial division.
std::vector<long long> prime_factors(long long n_value);

// Order of { p in (1/k) Lambda / Lambda : phi(p) in Lambda }, computed from
// the Smith form of phi. Throws NotIsogeny for singular or non-integral phi.
Int torsion_kernel_order(const Homo& phi, long long k);

struct PartnerReport {
    long long n_value = 1;                                  // N
    std::vector<long long> divisors;                        // unitary divisors
    long long count = 1;                                    // 2^(distinct primes)
    std::vector<std::pair<long long, Int>> kernel_orders;   // (k, |Ker(phi_L) cap A_k|)
};

// Enumeration of derived-equivalence partners for the End(A) = Z model at
// level N: one partner per unitary divisor k, realized as the quotient of A
// by Ker(phi_L) cap A_k.
PartnerReport partner_count(long long n_value);

}  // namespace avdeq
