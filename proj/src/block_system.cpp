#include "gsor/block_system.hpp"

#include <cmath>

namespace gsor {

BlockSystem::BlockSystem(CsrMatrix W_, CsrMatrix T_, DenseVector p_, DenseVector q_)
    : W(std::move(W_)), T(std::move(T_)), p(std::move(p_)), q(std::move(q_)) {
    if (!W.is_square() || !T.is_square() || W.n_rows != T.n_rows)
        throw std::invalid_argument("BlockSystem: W and T must be square of equal order");
    if (p.size() != q.size() || static_cast<int>(p.size()) != W.n_rows)
        throw std::invalid_argument("BlockSystem: right-hand side length mismatch");
    if (!csr_is_symmetric(W)) throw std::invalid_argument("BlockSystem: W is not symmetric");
    if (!csr_is_symmetric(T)) throw std::invalid_argument("BlockSystem: T is not symmetric");
}

std::pair<DenseVector, DenseVector> apply_block_A(const BlockSystem& sys, const DenseVector& x,
                                                  const DenseVector& y) {
    if (static_cast<int>(x.size()) != sys.n() || static_cast<int>(y.size()) != sys.n())
        throw std::invalid_argument("apply_block_A: dimension mismatch");
    DenseVector top = spmv(sys.W, x);
    vec::axpy(-1.0, spmv(sys.T, y), top);
    DenseVector bottom = spmv(sys.T, x);
    vec::axpy(1.0, spmv(sys.W, y), bottom);
    return {std::move(top), std::move(bottom)};
}

double block_residual(const BlockSystem& sys, const DenseVector& x, const DenseVector& y) {
    const double bnorm = std::hypot(vec::norm(sys.p), vec::norm(sys.q));
    if (bnorm == 0.0)
        throw std::invalid_argument("block_residual: zero right-hand side");
    auto [ax, ay] = apply_block_A(sys, x, y);
    double s = 0.0;
    for (int i = 0; i < sys.n(); ++i) {
        const double rp = sys.p[i] - ax[i];
        const double rq = sys.q[i] - ay[i];
        s += rp * rp + rq * rq;
    }
    return std::sqrt(s) / bnorm;
}

}  // namespace gsor
