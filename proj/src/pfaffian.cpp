#include "avdeq/pfaffian.hpp"

namespace avdeq {

// Skew-symmetric elimination: reduce to 2x2 blocks, multiplying the pivots.
// Pf([[0,a],[-a,0]] (+) S) = a * Pf(S) after the Schur update of S, and each
// row/column transposition flips the sign.
Rat pfaffian(const RatMat& m) {
    if (!m.is_square()) fail("DimensionMismatch", "pfaffian of non-square matrix");
    if (m.rows % 2 != 0) fail("OddDimension", "pfaffian needs even dimension");
    if (!is_skew_symmetric(m)) fail("NotSkew", "pfaffian needs a skew-symmetric matrix");
    const long n = m.rows;
    if (n == 0) return Rat(1);

    RatMat w = m;
    Rat pf(1);
    for (long k = 0; k + 1 < n; k += 2) {
        long piv = -1;
        for (long i = k + 1; i < n; ++i)
            if (w(k, i) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);  // row k pairs with nothing
        if (piv != k + 1) {
            for (long j = 0; j < n; ++j) std::swap(w(piv, j), w(k + 1, j));
            for (long i = 0; i < n; ++i) std::swap(w(i, piv), w(i, k + 1));
            pf = -pf;
        }
        const Rat a = w(k, k + 1);
        pf *= a;
        for (long i = k + 2; i < n; ++i)
            for (long j = k + 2; j < n; ++j)
                w(i, j) += (w(k + 1, i) * w(k, j) - w(k, i) * w(k + 1, j)) / a;
    }
    return pf;
}

Rat pfaffian(const IntMat& m) { return pfaffian(to_rat(m)); }

}  // namespace avdeq
