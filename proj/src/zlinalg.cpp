#include "oddarc/zlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace oddarc {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Extended gcd: returns g >= 0 with s*a + t*b = g.
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    s = s0;
    t = t0;
    return r0;
}

void row_axpy(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < M.cols(); ++j)
        if (M(src, j) != 0) M(dst, j) -= q * M(src, j);
}

void row_swap(IntMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
}

void row_negate(IntMatrix& M, std::size_t a) {
    for (std::size_t j = 0; j < M.cols(); ++j) M(a, j) = -M(a, j);
}

void col_axpy(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < M.rows(); ++i)
        if (M(i, src) != 0) M(i, dst) -= q * M(i, src);
}

void col_swap(IntMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix M(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
    }
    return M;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

HermiteForm hermite_rows(const IntMatrix& A, bool with_transform) {
    IntMatrix W = A;
    IntMatrix U = with_transform ? IntMatrix::identity(A.rows()) : IntMatrix();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < W.cols() && r < W.rows(); ++c) {
        for (;;) {
            std::size_t best = W.rows();
            for (std::size_t i = r; i < W.rows(); ++i)
                if (W(i, c) != 0 && (best == W.rows() || abs(W(i, c)) < abs(W(best, c)))) best = i;
            if (best == W.rows()) break;
            row_swap(W, r, best);
            if (with_transform) row_swap(U, r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < W.rows(); ++i) {
                if (W(i, c) == 0) continue;
                Int q = floor_div(W(i, c), W(r, c));
                row_axpy(W, i, r, q);
                if (with_transform) row_axpy(U, i, r, q);
                if (W(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (W(r, c) == 0) continue;
        if (W(r, c) < 0) {
            row_negate(W, r);
            if (with_transform) row_negate(U, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(W(i, c), W(r, c));
            row_axpy(W, i, r, q);
            if (with_transform) row_axpy(U, i, r, q);
        }
        pivots.push_back(c);
        ++r;
    }
    HermiteForm out;
    out.rank = r;
    out.pivots = pivots;
    out.H = IntMatrix(r, W.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < W.cols(); ++j) out.H(i, j) = W(i, j);
    out.U = std::move(U);
    return out;
}

bool Lattice::add(std::vector<Int> v) {
    if (v.size() != dim_) throw std::invalid_argument("Lattice::add: dimension mismatch");
    bool changed = false;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t p = piv_[k];
        // Entries before this pivot are already cleared by earlier rows.
        for (std::size_t j = (k == 0 ? 0 : piv_[k - 1] + 1); j < p; ++j) {
            if (v[j] != 0) {
                // New pivot column strictly before row k: insert v here.
                if (v[j] < 0)
                    for (auto& x : v) x = -x;
                rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
                piv_.insert(piv_.begin() + static_cast<std::ptrdiff_t>(k), j);
                reduce_above(k);
                return true;
            }
        }
        if (v[p] == 0) continue;
        auto& row = rows_[k];
        if (v[p] % row[p] == 0) {
            Int q = v[p] / row[p];
            for (std::size_t j = p; j < dim_; ++j)
                if (row[j] != 0) v[j] -= q * row[j];
            continue;
        }
        Int s, t;
        Int g = ext_gcd(row[p], v[p], s, t);
        Int ra = row[p] / g, va = v[p] / g;
        std::vector<Int> nr(dim_), nv(dim_);
        for (std::size_t j = p; j < dim_; ++j) {
            nr[j] = s * row[j] + t * v[j];
            nv[j] = ra * v[j] - va * row[j];
        }
        row = std::move(nr);
        v = std::move(nv);
        reduce_above(k);
        changed = true;
    }
    std::size_t start = rows_.empty() ? 0 : piv_.back() + 1;
    for (std::size_t j = start; j < dim_; ++j) {
        if (v[j] == 0) continue;
        if (v[j] < 0)
            for (auto& x : v) x = -x;
        rows_.push_back(std::move(v));
        piv_.push_back(j);
        reduce_above(rows_.size() - 1);
        return true;
    }
    return changed;
}

void Lattice::reduce_above(std::size_t k) {
    // Reduce row k against later pivots, then earlier rows against row k.
    for (std::size_t l = k + 1; l < rows_.size(); ++l) {
        Int q = floor_div(rows_[k][piv_[l]], rows_[l][piv_[l]]);
        if (q == 0) continue;
        for (std::size_t j = piv_[l]; j < dim_; ++j)
            if (rows_[l][j] != 0) rows_[k][j] -= q * rows_[l][j];
    }
    for (std::size_t i = 0; i < k; ++i) {
        Int q = floor_div(rows_[i][piv_[k]], rows_[k][piv_[k]]);
        if (q == 0) continue;
        for (std::size_t j = piv_[k]; j < dim_; ++j)
            if (rows_[k][j] != 0) rows_[i][j] -= q * rows_[k][j];
    }
}

IntMatrix Lattice::basis() const {
    IntMatrix B(rows_.size(), dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < dim_; ++j) B(i, j) = rows_[i][j];
    // Rows may have been modified out of order; a final HNF pass makes the form canonical.
    return hermite_rows(B).H;
}

bool Lattice::contains(std::vector<Int> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t p = piv_[k];
        for (std::size_t j = (k == 0 ? 0 : piv_[k - 1] + 1); j < p; ++j)
            if (v[j] != 0) return false;
        if (v[p] == 0) continue;
        if (v[p] % rows_[k][p] != 0) return false;
        Int q = v[p] / rows_[k][p];
        for (std::size_t j = p; j < dim_; ++j) v[j] -= q * rows_[k][j];
    }
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntMatrix lattice_basis(const IntMatrix& A) {
    Lattice L(A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) L.add(A.row(i));
    return L.basis();
}

IntMatrix kernel_basis_Z(const IntMatrix& M) {
    const std::size_t n = M.cols();
    if (M.rows() == 0) return IntMatrix::identity(n);
    HermiteForm hf = hermite_rows(M.transpose(), true);
    IntMatrix K(n - hf.rank, n);
    for (std::size_t i = hf.rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) K(i - hf.rank, j) = hf.U(i, j);
    if (K.rows() == 0) return IntMatrix(n, 0);
    return hermite_rows(K).H.transpose();
}

SmithForm smith_normal_form(const IntMatrix& M) {
    IntMatrix D = M;
    IntMatrix U = IntMatrix::identity(M.rows());
    IntMatrix V = IntMatrix::identity(M.cols());
    const std::size_t lim = std::min(M.rows(), M.cols());
    for (std::size_t t = 0; t < lim; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t bi = D.rows(), bj = D.cols();
            for (std::size_t i = t; i < D.rows(); ++i)
                for (std::size_t j = t; j < D.cols(); ++j)
                    if (D(i, j) != 0 && (bi == D.rows() || abs(D(i, j)) < abs(D(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == D.rows()) break;
            row_swap(D, t, bi);
            row_swap(U, t, bi);
            col_swap(D, t, bj);
            col_swap(V, t, bj);
            bool dirty = false;
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                if (D(i, t) == 0) continue;
                Int q = floor_div(D(i, t), D(t, t));
                row_axpy(D, i, t, q);
                row_axpy(U, i, t, q);
                if (D(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                if (D(t, j) == 0) continue;
                Int q = floor_div(D(t, j), D(t, t));
                col_axpy(D, j, t, q);
                col_axpy(V, j, t, q);
                if (D(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // Enforce divisibility of the trailing block by the pivot.
            std::size_t fi = D.rows();
            for (std::size_t i = t + 1; i < D.rows() && fi == D.rows(); ++i)
                for (std::size_t j = t + 1; j < D.cols(); ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        fi = i;
                        break;
                    }
            if (fi == D.rows()) break;
            row_axpy(D, t, fi, Int(-1));
            row_axpy(U, t, fi, Int(-1));
        }
        if (D(t, t) < 0) {
            row_negate(D, t);
            row_negate(U, t);
        }
    }
    return {std::move(U), std::move(D), std::move(V)};
}

std::vector<Int> smith_invariants(const IntMatrix& M) {
    SmithForm s = smith_normal_form(M);
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i)
        if (s.D(i, i) != 0) out.push_back(s.D(i, i));
    return out;
}

std::size_t rank_Q(const IntMatrix& M) {
    std::vector<std::vector<Rational>> a(M.rows(), std::vector<Rational>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] = Rational(M(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && a[p][c] == 0) ++p;
        if (p == M.rows()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < M.rows(); ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < M.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<std::vector<Rational>>> inverse_Q(const IntMatrix& M) {
    const std::size_t n = M.rows();
    if (M.cols() != n) throw std::invalid_argument("inverse_Q: matrix not square");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(M(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                if (a[c][j] != 0) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

std::optional<std::vector<Rational>> solve_Q(const IntMatrix& A, const std::vector<Int>& b) {
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m) throw std::invalid_argument("solve_Q: dimension mismatch");
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(A(i, j));
        a[i][n] = Rational(b[i]);
    }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j <= n; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (a[i][n] != 0) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = a[i][n];
    return x;
}

std::optional<BitRow> solve_f2(const std::vector<BitRow>& A, const BitRow& b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("solve_f2: dimension mismatch");
    const std::size_t n = m == 0 ? 0 : A[0].size();
    std::vector<BitRow> aug(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("solve_f2: ragged matrix");
        aug[i] = A[i];
        aug[i].push_back(b[i] & 1);
    }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && !aug[p][c]) ++p;
        if (p == m) continue;
        std::swap(aug[p], aug[r]);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && aug[i][c])
                for (std::size_t j = c; j <= n; ++j) aug[i][j] ^= aug[r][j];
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (aug[i][n]) return std::nullopt;
    BitRow x(n, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = aug[i][n];
    return x;
}

std::size_t rank_f2(std::vector<BitRow> A) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && !(A[p][c] & 1)) ++p;
        if (p == m) continue;
        std::swap(A[p], A[r]);
        for (std::size_t i = r + 1; i < m; ++i)
            if (A[i][c] & 1)
                for (std::size_t j = c; j < n; ++j) A[i][j] ^= A[r][j];
        ++r;
    }
    return r;
}

}  // namespace oddarc
