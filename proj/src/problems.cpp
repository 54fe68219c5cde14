#include "gsor/problems.hpp"

#include <cmath>

namespace gsor {

namespace {

CsrMatrix tridiag(int m, double lo, double di, double up) {
    std::vector<Triplet> t;
    t.reserve(3 * m);
    for (int i = 0; i < m; ++i) {
        if (i > 0) t.push_back({i, i - 1, lo});
        t.push_back({i, i, di});
        if (i + 1 < m) t.push_back({i, i + 1, up});
    }
    return csr_from_triplets(t, m, m);
}

CsrMatrix scaled(CsrMatrix A, double factor) {
    for (double& v : A.values) v *= factor;
    return A;
}

// E = e1 em' + em e1' as an m x m matrix
CsrMatrix corner_pair(int m) {
    std::vector<Triplet> t;
    if (m == 1) {
        t.push_back({0, 0, 2.0});
    } else {
        t.push_back({0, m - 1, 1.0});
        t.push_back({m - 1, 0, 1.0});
    }
    return csr_from_triplets(t, m, m);
}

// E (x) I on the m^2 grid
CsrMatrix corner_pair_blocks(int m) {
    const CsrMatrix E = corner_pair(m);
    std::vector<Triplet> t;
    for (int r = 0; r < m; ++r) {
        for (int k = E.row_ptr[r]; k < E.row_ptr[r + 1]; ++k) {
            for (int j = 0; j < m; ++j)
                t.push_back({r * m + j, E.col_idx[k] * m + j, E.values[k]});
        }
    }
    return csr_from_triplets(t, m * m, m * m);
}

}  // namespace

Benchmark benchmark_from_index(int index) {
    if (index < 1 || index > 4)
        throw std::invalid_argument("benchmark index must be 1..4");
    return static_cast<Benchmark>(index);
}

Problem build_problem(const ProblemSpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("build_problem: m must be >= 1");
    const int m = spec.m;
    const int n = m * m;
    const double h = 1.0 / (m + 1);
    const double inv_h2 = 1.0 / (h * h);

    CsrMatrix W, T;
    DenseVector p, q;
    bool rhs_from_ones = true;

    switch (spec.example) {
        case Benchmark::parabolic: {
            const double tau = spec.tau > 0.0 ? spec.tau : h;
            const CsrMatrix K = kron_sum(tridiag(m, -inv_h2, 2.0 * inv_h2, -inv_h2));
            const double shift_w = (3.0 - std::sqrt(3.0)) / tau;
            const double shift_t =
                spec.parabolic_equal_shifts ? shift_w : (3.0 + std::sqrt(3.0)) / tau;
            W = csr_shift(K, shift_w);
            T = csr_shift(K, shift_t);
            p.resize(n);
            q.resize(n);
            for (int j = 1; j <= n; ++j) {  // (1 - i) j / (tau (j+1)^2), 1-based j
                const double v = j / (tau * double(j + 1) * double(j + 1));
                p[j - 1] = v;
                q[j - 1] = -v;
            }
            rhs_from_ones = false;
            break;
        }
        case Benchmark::dynamics: {
            const CsrMatrix K = kron_sum(tridiag(m, -inv_h2, 2.0 * inv_h2, -inv_h2));
            W = csr_shift(K, -spec.omega * spec.omega);
            T = csr_shift(scaled(K, spec.mu_damp), 10.0 * spec.omega);
            break;
        }
        case Benchmark::periodic: {
            const CsrMatrix V = tridiag(m, -1.0, 2.0, -1.0);
            const CsrMatrix Vc = csr_add(1.0, V, -1.0, corner_pair(m));
            T = kron_sum(V);
            W = csr_add(10.0, kron_sum(Vc), 9.0, corner_pair_blocks(m));
            break;
        }
        case Benchmark::helmholtz: {
            const CsrMatrix K = kron_sum(tridiag(m, -inv_h2, 2.0 * inv_h2, -inv_h2));
            W = csr_shift(K, spec.sigma1);
            T = scaled(csr_identity(n), spec.sigma2);
            break;
        }
    }

    if (rhs_from_ones) {
        // b = (1+i) A 1: with A 1 = W1 + i T1 this is (W1 - T1) + i (W1 + T1);
        // no complex matrix is formed
        const DenseVector w1 = spmv(W, vec::ones(n));
        const DenseVector t1 = spmv(T, vec::ones(n));
        p = vec::combine(1.0, w1, -1.0, t1);
        q = vec::combine(1.0, w1, 1.0, t1);
    }

    const bool normalize = spec.normalize.value_or(spec.example != Benchmark::periodic);
    if (normalize) {
        const double scale = h * h;
        for (double& v : W.values) v *= scale;
        for (double& v : T.values) v *= scale;
        vec::scale(p, scale);
        vec::scale(q, scale);
    }

    ComplexVector b(p, q);
    return Problem{BlockSystem(std::move(W), std::move(T), std::move(p), std::move(q)),
                   std::move(b)};
}

RotatedSystem rotate_system(const CsrMatrix& W, const CsrMatrix& T, const ComplexVector& b,
                            double beta, double delta) {
    if (beta == 0.0 && delta == 0.0)
        throw std::invalid_argument("rotate_system: zero rotation");
    if (static_cast<int>(b.size()) != W.n_rows)
        throw std::invalid_argument("rotate_system: dimension mismatch");
    RotatedSystem out;
    out.W = csr_add(beta, W, delta, T);
    out.T = csr_add(beta, T, -delta, W);
    out.b = ComplexVector(vec::combine(beta, b.re, delta, b.im),
                          vec::combine(beta, b.im, -delta, b.re));
    return out;
}

}  // namespace gsor
