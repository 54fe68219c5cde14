#include "gsor/csr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gsor {

namespace vec {

DenseVector zeros(std::size_t n) { return DenseVector(n, 0.0); }

DenseVector ones(std::size_t n) { return DenseVector(n, 1.0); }

double dot(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const DenseVector& a) { return std::sqrt(dot(a, a)); }

void axpy(double a, const DenseVector& x, DenseVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void scale(DenseVector& x, double a) {
    for (double& v : x) v *= a;
}

DenseVector combine(double a, const DenseVector& x, double b, const DenseVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("combine: length mismatch");
    DenseVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
    return r;
}

}  // namespace vec

CsrMatrix csr_from_triplets(std::span<const Triplet> triplets, int n_rows, int n_cols) {
    if (n_rows < 0 || n_cols < 0)
        throw std::invalid_argument("csr_from_triplets: negative dimension");
    for (const Triplet& t : triplets) {
        if (t.row < 0 || t.row >= n_rows || t.col < 0 || t.col >= n_cols)
            throw std::invalid_argument("csr_from_triplets: index out of range");
    }

    // counting sort by row, then sort and merge duplicates within each row
    std::vector<int> count(n_rows + 1, 0);
    for (const Triplet& t : triplets) ++count[t.row + 1];
    std::partial_sum(count.begin(), count.end(), count.begin());

    std::vector<std::pair<int, double>> entries(triplets.size());
    {
        std::vector<int> next(count.begin(), count.end() - 1);
        for (const Triplet& t : triplets) entries[next[t.row]++] = {t.col, t.value};
    }

    CsrMatrix A;
    A.n_rows = n_rows;
    A.n_cols = n_cols;
    A.row_ptr.assign(n_rows + 1, 0);
    A.col_idx.reserve(triplets.size());
    A.values.reserve(triplets.size());
    for (int i = 0; i < n_rows; ++i) {
        auto first = entries.begin() + count[i];
        auto last = entries.begin() + count[i + 1];
        std::sort(first, last, [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto it = first; it != last;) {
            int col = it->first;
            double sum = 0.0;
            for (; it != last && it->first == col; ++it) sum += it->second;
            A.col_idx.push_back(col);
            A.values.push_back(sum);
        }
        A.row_ptr[i + 1] = static_cast<int>(A.col_idx.size());
    }
    return A;
}

CsrMatrix csr_identity(int n) {
    CsrMatrix I;
    I.n_rows = I.n_cols = n;
    I.row_ptr.resize(n + 1);
    I.col_idx.resize(n);
    I.values.assign(n, 1.0);
    for (int i = 0; i <= n; ++i) I.row_ptr[i] = i;
    std::iota(I.col_idx.begin(), I.col_idx.end(), 0);
    return I;
}

CsrMatrix csr_add(double a, const CsrMatrix& A, double b, const CsrMatrix& B) {
    if (A.n_rows != B.n_rows || A.n_cols != B.n_cols)
        throw std::invalid_argument("csr_add: shape mismatch");
    CsrMatrix C;
    C.n_rows = A.n_rows;
    C.n_cols = A.n_cols;
    C.row_ptr.assign(A.n_rows + 1, 0);
    C.col_idx.reserve(A.nnz() + B.nnz());
    C.values.reserve(A.nnz() + B.nnz());
    for (int i = 0; i < A.n_rows; ++i) {
        int pa = A.row_ptr[i], ea = A.row_ptr[i + 1];
        int pb = B.row_ptr[i], eb = B.row_ptr[i + 1];
        while (pa < ea || pb < eb) {
            int ca = pa < ea ? A.col_idx[pa] : A.n_cols;
            int cb = pb < eb ? B.col_idx[pb] : B.n_cols;
            int c = std::min(ca, cb);
            double v = 0.0;
            if (ca == c) v += a * A.values[pa++];
            if (cb == c) v += b * B.values[pb++];
            C.col_idx.push_back(c);
            C.values.push_back(v);
        }
        C.row_ptr[i + 1] = static_cast<int>(C.col_idx.size());
    }
    return C;
}

CsrMatrix csr_shift(const CsrMatrix& A, double shift) {
    if (!A.is_square()) throw std::invalid_argument("csr_shift: matrix not square");
    return csr_add(1.0, A, shift, csr_identity(A.n_rows));
}

CsrMatrix csr_transpose(const CsrMatrix& A) {
    CsrMatrix T;
    T.n_rows = A.n_cols;
    T.n_cols = A.n_rows;
    T.row_ptr.assign(A.n_cols + 1, 0);
    T.col_idx.resize(A.nnz());
    T.values.resize(A.nnz());
    for (int k = 0; k < A.nnz(); ++k) ++T.row_ptr[A.col_idx[k] + 1];
    std::partial_sum(T.row_ptr.begin(), T.row_ptr.end(), T.row_ptr.begin());
    std::vector<int> next(T.row_ptr.begin(), T.row_ptr.end() - 1);
    for (int i = 0; i < A.n_rows; ++i) {
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
            int pos = next[A.col_idx[k]]++;
            T.col_idx[pos] = i;
            T.values[pos] = A.values[k];
        }
    }
    return T;
}

double csr_max_abs(const CsrMatrix& A) {
    double m = 0.0;
    for (double v : A.values) m = std::max(m, std::abs(v));
    return m;
}

bool csr_is_symmetric(const CsrMatrix& A, double rtol) {
    if (!A.is_square()) return false;
    const CsrMatrix At = csr_transpose(A);
    const double tol = rtol * std::max(csr_max_abs(A), 1e-300);
    // A and A^T were built through the same sorted-row representation, so a
    // merge comparison per row covers both patterns.
    for (int i = 0; i < A.n_rows; ++i) {
        int pa = A.row_ptr[i], ea = A.row_ptr[i + 1];
        int pb = At.row_ptr[i], eb = At.row_ptr[i + 1];
        while (pa < ea || pb < eb) {
            int ca = pa < ea ? A.col_idx[pa] : A.n_cols;
            int cb = pb < eb ? At.col_idx[pb] : At.n_cols;
            double va = 0.0, vb = 0.0;
            int c = std::min(ca, cb);
            if (ca == c) va = A.values[pa++];
            if (cb == c) vb = At.values[pb++];
            if (std::abs(va - vb) > tol) return false;
        }
    }
    return true;
}

DenseVector spmv(const CsrMatrix& A, const DenseVector& x) {
    if (static_cast<int>(x.size()) != A.n_cols)
        throw std::invalid_argument("spmv: dimension mismatch");
    DenseVector y(A.n_rows, 0.0);
    for (int i = 0; i < A.n_rows; ++i) {
        double s = 0.0;
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) s += A.values[k] * x[A.col_idx[k]];
        y[i] = s;
    }
    return y;
}

CsrMatrix kron_sum(const CsrMatrix& V) {
    if (!V.is_square()) throw std::invalid_argument("kron_sum: V not square");
    const int m = V.n_rows;
    const int n = m * m;
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(2 * m) * V.nnz());
    // grid index g = i*m + j; I(x)V acts within a block, V(x)I across blocks
    for (int i = 0; i < m; ++i) {
        for (int r = 0; r < m; ++r) {
            for (int k = V.row_ptr[r]; k < V.row_ptr[r + 1]; ++k) {
                trips.push_back({i * m + r, i * m + V.col_idx[k], V.values[k]});
            }
        }
    }
    for (int r = 0; r < m; ++r) {
        for (int k = V.row_ptr[r]; k < V.row_ptr[r + 1]; ++k) {
            for (int j = 0; j < m; ++j) {
                trips.push_back({r * m + j, V.col_idx[k] * m + j, V.values[k]});
            }
        }
    }
    return csr_from_triplets(trips, n, n);
}

}  // namespace gsor
