#include "avdeq/matrix.hpp"

namespace avdeq {

// Gaussian elimination with exact rational pivots; returns (det, rank) and
// optionally accumulates the inverse.
namespace {

struct GaussResult {
    Rat det;
    long rank;
};

GaussResult gauss(RatMat m, RatMat* inv) {
    const long n = m.rows;
    if (inv) *inv = RatMat::identity(n);
    Rat d(1);
    long r = 0;
    for (long col = 0; col < m.cols && r < m.rows; ++col) {
        long piv = -1;
        for (long i = r; i < m.rows; ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            d = 0;
            continue;
        }
        if (piv != r) {
            for (long j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
            if (inv)
                for (long j = 0; j < n; ++j) std::swap((*inv)(piv, j), (*inv)(r, j));
            d = -d;
        }
        d *= m(r, col);
        Rat p = m(r, col);
        for (long j = 0; j < m.cols; ++j) m(r, j) /= p;
        if (inv)
            for (long j = 0; j < n; ++j) (*inv)(r, j) /= p;
        for (long i = 0; i < m.rows; ++i) {
            if (i == r || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (long j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
            if (inv)
                for (long j = 0; j < n; ++j) (*inv)(i, j) -= f * (*inv)(r, j);
        }
        ++r;
    }
    if (r < std::min(m.rows, m.cols)) d = 0;
    return {d, r};
}

}  // namespace

Rat det(const RatMat& m) {
    if (!m.is_square()) fail("DimensionMismatch", "det of non-square matrix");
    if (m.rows == 0) return Rat(1);
    return gauss(m, nullptr).det;
}

// Bareiss fraction-free determinant: all intermediates stay integral.
Int det(const IntMat& m) {
    if (!m.is_square()) fail("DimensionMismatch", "det of non-square matrix");
    const long n = m.rows;
    if (n == 0) return Int(1);
    IntMat w = m;
    Int prev(1);
    int sgn = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            for (long j = 0; j < n; ++j) std::swap(w(piv, j), w(k, j));
            sgn = -sgn;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                w(i, j) = t / prev;  // exact by Bareiss
            }
        prev = w(k, k);
    }
    return sgn > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

long rank(const RatMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return gauss(m, nullptr).rank;
}

RatMat inverse(const RatMat& m) {
    if (!m.is_square()) fail("DimensionMismatch", "inverse of non-square matrix");
    RatMat inv;
    auto g = gauss(m, &inv);
    if (g.det == 0) fail("Singular", "matrix not invertible");
    return inv;
}

RatMat solve_left(const RatMat& b, const RatMat& a) {
    return b * inverse(a);
}

}  // namespace avdeq
