#include "avdeq/lattice.hpp"

#include <algorithm>

namespace avdeq {

namespace {

// Row HNF in place via Euclidean row operations; u (when given) accumulates
// the same operations starting from the identity, so u * input = result.
long hnf_in_place(IntMat& m, IntMat* u) {
    const long rows = m.rows, cols = m.cols;
    long r = 0;
    for (long col = 0; col < cols && r < rows; ++col) {
        // Euclid on the entries of this column below row r.
        while (true) {
            long piv = -1;
            for (long i = r; i < rows; ++i) {
                if (m(i, col) == 0) continue;
                if (piv < 0 || abs(m(i, col)) < abs(m(piv, col))) piv = i;
            }
            if (piv < 0) break;
            if (piv != r) {
                for (long j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
                if (u)
                    for (long j = 0; j < u->cols; ++j) std::swap((*u)(piv, j), (*u)(r, j));
            }
            bool clean = true;
            for (long i = r + 1; i < rows; ++i) {
                if (m(i, col) == 0) continue;
                Int q = m(i, col) / m(r, col);  // truncated division is fine for Euclid
                if (q != 0) {
                    for (long j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
                    if (u)
                        for (long j = 0; j < u->cols; ++j) (*u)(i, j) -= q * (*u)(r, j);
                }
                if (m(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m(r, col) == 0) continue;
        if (m(r, col) < 0) {
            for (long j = 0; j < cols; ++j) m(r, j) = -m(r, j);
            if (u)
                for (long j = 0; j < u->cols; ++j) (*u)(r, j) = -(*u)(r, j);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (long i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(r, col).get_mpz_t());
            if (q != 0) {
                for (long j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
                if (u)
                    for (long j = 0; j < u->cols; ++j) (*u)(i, j) -= q * (*u)(r, j);
            }
        }
        ++r;
    }
    return r;  // rank
}

}  // namespace

IntMat hnf(const IntMat& m) {
    IntMat w = m;
    long r = hnf_in_place(w, nullptr);
    return submatrix(w, 0, 0, r, w.cols);
}

void hnf_with_transform(const IntMat& m, IntMat& h, IntMat& u) {
    h = m;
    u = IntMat::identity(m.rows);
    hnf_in_place(h, &u);
}

SmithForm snf(const IntMat& m) {
    IntMat w = m;
    const long rows = w.rows, cols = w.cols, n = std::min(rows, cols);

    auto row_op = [&](long dst, long src, const Int& q) {
        for (long j = 0; j < cols; ++j) w(dst, j) -= q * w(src, j);
    };
    auto col_op = [&](long dst, long src, const Int& q) {
        for (long i = 0; i < rows; ++i) w(i, dst) -= q * w(i, src);
    };

    for (long k = 0; k < n; ++k) {
        // Move a minimal nonzero entry of the trailing block to (k,k).
        long pi = -1, pj = -1;
        for (long i = k; i < rows; ++i)
            for (long j = k; j < cols; ++j) {
                if (w(i, j) == 0) continue;
                if (pi < 0 || abs(w(i, j)) < abs(w(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != k)
            for (long j = 0; j < cols; ++j) std::swap(w(pi, j), w(k, j));
        if (pj != k)
            for (long i = 0; i < rows; ++i) std::swap(w(i, pj), w(i, k));

        bool again = true;
        while (again) {
            again = false;
            for (long i = k + 1; i < rows; ++i) {
                if (w(i, k) == 0) continue;
                Int q = w(i, k) / w(k, k);
                row_op(i, k, q);
                if (w(i, k) != 0) {  // remainder smaller than pivot: swap up
                    for (long j = 0; j < cols; ++j) std::swap(w(i, j), w(k, j));
                    again = true;
                }
            }
            for (long j = k + 1; j < cols; ++j) {
                if (w(k, j) == 0) continue;
                Int q = w(k, j) / w(k, k);
                col_op(j, k, q);
                if (w(k, j) != 0) {
                    for (long i = 0; i < rows; ++i) std::swap(w(i, j), w(i, k));
                    again = true;
                }
            }
            if (again) continue;
            // Pivot must divide every entry of the trailing block.
            for (long i = k + 1; i < rows && !again; ++i)
                for (long j = k + 1; j < cols && !again; ++j)
                    if (w(i, j) % w(k, k) != 0) {
                        for (long jj = 0; jj < cols; ++jj) w(k, jj) += w(i, jj);
                        again = true;
                    }
        }
        if (w(k, k) < 0)
            for (long j = 0; j < cols; ++j) w(k, j) = -w(k, j);
    }

    SmithForm sf;
    sf.d = IntMat::zero(rows, cols);
    for (long k = 0; k < n; ++k) {
        sf.d(k, k) = w(k, k);
        if (w(k, k) != 0) sf.divisors.push_back(w(k, k));
    }
    return sf;
}

IntMat left_kernel(const IntMat& m) {
    IntMat h, u;
    hnf_with_transform(m, h, u);
    long r = 0;
    while (r < h.rows) {
        bool zero = true;
        for (long j = 0; j < h.cols; ++j)
            if (h(r, j) != 0) {
                zero = false;
                break;
            }
        if (zero) break;
        ++r;
    }
    // Rows r.. of u span the left kernel; HNF-canonicalize the basis.
    return hnf(submatrix(u, r, 0, m.rows - r, u.cols));
}

LatticeSubgroup::LatticeSubgroup(long ambient, IntMat generators) {
    if (generators.cols != ambient) fail("DimensionMismatch", "lattice generators vs ambient rank");
    ambient_rank = ambient;
    basis = hnf(generators);
}

bool in_row_lattice(const IntMat& h, const std::vector<Int>& v) {
    if (static_cast<long>(v.size()) != h.cols)
        fail("DimensionMismatch", "vector vs lattice ambient rank");
    // Reduce v against the HNF rows; membership iff the remainder vanishes
    // and every elimination quotient is integral.
    std::vector<Int> w = v;
    for (long i = 0; i < h.rows; ++i) {
        long pc = -1;
        for (long j = 0; j < h.cols; ++j)
            if (h(i, j) != 0) {
                pc = j;
                break;
            }
        if (pc < 0) continue;
        if (w[pc] % h(i, pc) != 0) return false;
        Int q = w[pc] / h(i, pc);
        if (q != 0)
            for (long j = pc; j < h.cols; ++j) w[j] -= q * h(i, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

LatticeSubgroup saturate(const LatticeSubgroup& l) {
    if (l.rank() == 0) return l;
    // Integer kernels are saturated, so taking the kernel of the kernel
    // yields the saturation of the row span.
    IntMat k = right_kernel(l.basis);
    IntMat sat = k.rows == 0 ? IntMat::identity(l.ambient_rank) : right_kernel(k);
    LatticeSubgroup out;
    out.ambient_rank = l.ambient_rank;
    out.basis = sat;
    return out;
}

std::optional<Int> lattice_index(const LatticeSubgroup& sub, const LatticeSubgroup& super) {
    if (sub.ambient_rank != super.ambient_rank)
        fail("DimensionMismatch", "lattice index in different ambient lattices");
    for (long i = 0; i < sub.basis.rows; ++i) {
        std::vector<Int> row(sub.basis.cols);
        for (long j = 0; j < sub.basis.cols; ++j) row[j] = sub.basis(i, j);
        if (!in_row_lattice(super.basis, row)) fail("NotSublattice", "containment check failed");
    }
    if (sub.rank() < super.rank()) return std::nullopt;
    if (sub.rank() > super.rank()) fail("NotSublattice", "sub has larger rank than super");
    const long r = sub.rank();
    if (r == 0) return Int(1);
    // Write sub = C * super over Q; the index is |det C|.
    RatMat bs = to_rat(sub.basis), bt = to_rat(super.basis);
    // Solve C * bt = bs using a column basis where bt is invertible.
    std::vector<long> pivot_cols;
    long row = 0;
    for (long col = 0; col < super.basis.cols && row < r; ++col)
        if (super.basis(row, col) != 0) {
            pivot_cols.push_back(col);
            ++row;
        }
    RatMat bt_sq = select_columns(bt, pivot_cols);
    RatMat bs_sq = select_columns(bs, pivot_cols);
    RatMat c = solve_left(bs_sq, bt_sq);
    Rat dv = det(c);
    if (dv == 0) fail("NotSublattice", "rank collapse in index computation");
    Int d = abs(dv.get_num());
    if (dv.get_den() != 1) fail("NotSublattice", "non-integral change of basis");
    return d;
}

}  // namespace avdeq
