#pragma once

#include <span>

#include "gsor/types.hpp"

namespace gsor {

struct Triplet {
    int row;
    int col;
    double value;
};

/// Sparse real matrix in compressed-sparse-row form.
/// Invariants: row_ptr is nondecreasing with row_ptr[0] = 0 and
/// row_ptr[n_rows] = nnz; within each row column indices are strictly
/// increasing (no duplicates); every column index is < n_cols.
struct CsrMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> row_ptr{0};
    std::vector<int> col_idx;
    std::vector<double> values;

    int nnz() const { return static_cast<int>(col_idx.size()); }
    bool is_square() const { return n_rows == n_cols; }
};

/// Build a CSR matrix from coordinate triplets. Duplicates are summed,
/// rows come out sorted. Out-of-range indices throw std::invalid_argument.
CsrMatrix csr_from_triplets(std::span<const Triplet> triplets, int n_rows, int n_cols);

CsrMatrix csr_identity(int n);

/// a*A + b*B for matrices with identical shape.
CsrMatrix csr_add(double a, const CsrMatrix& A, double b, const CsrMatrix& B);

/// A + shift*I (square A).
CsrMatrix csr_shift(const CsrMatrix& A, double shift);

CsrMatrix csr_transpose(const CsrMatrix& A);

/// Largest entry magnitude; 0 for an empty matrix.
double csr_max_abs(const CsrMatrix& A);

/// Value-wise symmetry test: |A - A^T| <= rtol * max|A| entrywise.
bool csr_is_symmetric(const CsrMatrix& A, double rtol = 1e-12);

/// Sparse matrix-vector product.
DenseVector spmv(const CsrMatrix& A, const DenseVector& x);

/// I (x) V + V (x) I for square V of order m: the m^2 x m^2 matrix coupling a
/// uniform grid in both directions (five-point stencil when V is tridiagonal).
CsrMatrix kron_sum(const CsrMatrix& V);

}  // namespace gsor
