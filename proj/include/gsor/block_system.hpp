#pragma once

#include <utility>

#include "gsor/csr.hpp"

namespace gsor {

/// The 2x2-block real form of (W + iT)(x + iy) = p + iq:
///
///     [ W  -T ] [x]   [p]
///     [ T   W ] [y] = [q]
///
/// W and T must be square, equally sized and symmetric (checked on
/// construction to 1e-12 relative). W is additionally assumed positive
/// definite; that is verified by the Cholesky factorization at first use,
/// not here. The 2n x 2n matrix is never assembled.
struct BlockSystem {
    CsrMatrix W;
    CsrMatrix T;
    DenseVector p;
    DenseVector q;

    BlockSystem(CsrMatrix W_, CsrMatrix T_, DenseVector p_, DenseVector q_);

    int n() const { return W.n_rows; }
};

/// (W*x - T*y, T*x + W*y)
std::pair<DenseVector, DenseVector> apply_block_A(const BlockSystem& sys, const DenseVector& x,
                                                  const DenseVector& y);

/// Relative residual sqrt(|p - (Wx-Ty)|^2 + |q - (Tx+Wy)|^2) / sqrt(|p|^2 + |q|^2).
/// Equals the relative residual of the complex system exactly.
/// Throws std::invalid_argument when the right-hand side is zero.
double block_residual(const BlockSystem& sys, const DenseVector& x, const DenseVector& y);

}  // namespace gsor
