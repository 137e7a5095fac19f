#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace avdeq {

// All arithmetic in this library is exact: arbitrary-precision integers and
// canonical rationals (positive denominator, gcd(num,den)=1).
using Int = mpz_class;
using Rat = mpq_class;

// Error with a stable machine-readable kind ("NotSkew", "Singular", ...).
struct calc_error : std::runtime_error {
    std::string kind;
    calc_error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw calc_error(kind, msg);
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail("Singular", "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

// Exact integer square root; nullopt when v is not a perfect square.
inline std::optional<Int> isqrt_exact(const Int& v) {
    if (v < 0) return std::nullopt;
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// Canonical fraction string "num/den" with den > 0.
inline std::string to_fraction_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int parse_int(const std::string& s) {
    if (s.empty()) fail("BadInput", "empty integer literal");
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        fail("BadInput", "bad integer literal '" + s + "'");
    }
}

// Accepts "3", "-3" and "num/den" forms.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace avdeq
