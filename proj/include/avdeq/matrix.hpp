#pragma once

#include <initializer_list>
#include <vector>

#include "avdeq/numeric.hpp"

namespace avdeq {

// Dense row-major matrix over an exact scalar ring (Int or Rat).
template <typename T>
struct Mat {
    long rows = 0;
    long cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows = static_cast<long>(init.size());
        cols = rows ? static_cast<long>(init.begin()->size()) : 0;
        a.reserve(static_cast<size_t>(rows) * cols);
        for (auto& row : init) {
            if (static_cast<long>(row.size()) != cols)
                fail("DimensionMismatch", "ragged initializer");
            for (auto& v : row) a.push_back(v);
        }
    }

    T& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Mat zero(long r, long c) { return Mat(r, c); }

    bool is_square() const { return rows == cols; }
    bool is_zero() const {
        for (const T& v : a)
            if (v != 0) return false;
        return true;
    }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <typename T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail("DimensionMismatch", "matrix add");
    Mat<T> r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

template <typename T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail("DimensionMismatch", "matrix sub");
    Mat<T> r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

template <typename T>
Mat<T> operator-(const Mat<T>& x) {
    Mat<T> r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = -x.a[i];
    return r;
}

template <typename T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) fail("DimensionMismatch", "matrix mul");
    Mat<T> r(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            const T& v = x(i, k);
            if (v == 0) continue;
            for (long j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

template <typename T>
Mat<T> operator*(const T& c, const Mat<T>& x) {
    Mat<T> r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = c * x.a[i];
    return r;
}

template <typename T>
Mat<T> transpose(const Mat<T>& x) {
    Mat<T> r(x.cols, x.rows);
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

template <typename T>
bool is_skew_symmetric(const Mat<T>& x) {
    if (!x.is_square()) return false;
    for (long i = 0; i < x.rows; ++i)
        for (long j = i; j < x.cols; ++j)
            if (x(i, j) != -x(j, i)) return false;
    return true;
}

template <typename T>
bool is_symmetric(const Mat<T>& x) {
    if (!x.is_square()) return false;
    for (long i = 0; i < x.rows; ++i)
        for (long j = i + 1; j < x.cols; ++j)
            if (x(i, j) != x(j, i)) return false;
    return true;
}

// Kronecker product, block order follows the left factor.
template <typename T>
Mat<T> kron(const Mat<T>& x, const Mat<T>& y) {
    Mat<T> r(x.rows * y.rows, x.cols * y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j) {
            if (x(i, j) == 0) continue;
            for (long p = 0; p < y.rows; ++p)
                for (long q = 0; q < y.cols; ++q)
                    r(i * y.rows + p, j * y.cols + q) = x(i, j) * y(p, q);
        }
    return r;
}

template <typename T>
Mat<T> hstack(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows) fail("DimensionMismatch", "hstack");
    Mat<T> r(x.rows, x.cols + y.cols);
    for (long i = 0; i < x.rows; ++i) {
        for (long j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
        for (long j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
    }
    return r;
}

template <typename T>
Mat<T> vstack(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.cols) fail("DimensionMismatch", "vstack");
    Mat<T> r(x.rows + y.rows, x.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (long i = 0; i < y.rows; ++i)
        for (long j = 0; j < x.cols; ++j) r(x.rows + i, j) = y(i, j);
    return r;
}

// 2x2 block assembly [[a,b],[c,d]].
template <typename T>
Mat<T> block2x2(const Mat<T>& a, const Mat<T>& b, const Mat<T>& c, const Mat<T>& d) {
    return vstack(hstack(a, b), hstack(c, d));
}

template <typename T>
Mat<T> submatrix(const Mat<T>& x, long i0, long j0, long r, long c) {
    Mat<T> s(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) s(i, j) = x(i0 + i, j0 + j);
    return s;
}

// Columns selected in the given order.
template <typename T>
Mat<T> select_columns(const Mat<T>& x, const std::vector<long>& idx) {
    Mat<T> s(x.rows, static_cast<long>(idx.size()));
    for (long i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < idx.size(); ++j) s(i, static_cast<long>(j)) = x(i, idx[j]);
    return s;
}

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

inline bool is_integral(const RatMat& m) {
    for (const Rat& q : m.a)
        if (!is_integral(q)) return false;
    return true;
}

inline IntMat to_int(const RatMat& m) {
    IntMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) {
        if (!is_integral(m.a[i])) fail("BadInput", "matrix entry not integral");
        r.a[i] = m.a[i].get_num();
    }
    return r;
}

// gcd of all entries (0 for the zero matrix).
inline Int content(const IntMat& m) {
    Int g = 0;
    for (const Int& v : m.a) g = gcd(g, v);
    return g;
}

// Least common multiple of entry denominators.
inline Int common_denominator(const RatMat& m) {
    Int d = 1;
    for (const Rat& q : m.a) d = lcm(d, q.get_den());
    return d;
}

// m = result / denom with result integral.
inline IntMat clear_denominators(const RatMat& m, Int& denom) {
    denom = common_denominator(m);
    IntMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i)
        r.a[i] = m.a[i].get_num() * (denom / m.a[i].get_den());
    return r;
}

Rat det(const RatMat& m);
Int det(const IntMat& m);
long rank(const RatMat& m);

// Exact inverse; throws Singular.
RatMat inverse(const RatMat& m);
inline RatMat inverse(const IntMat& m) { return inverse(to_rat(m)); }

// Solve x * a = b over the rationals for square nonsingular a.
RatMat solve_left(const RatMat& b, const RatMat& a);

}  // namespace avdeq
