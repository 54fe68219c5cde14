#include "gsor/cholesky.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gsor {

namespace {

// Matrices at or below this order are factored without reordering.
constexpr int kReorderCutoff = 64;

std::vector<int> node_degrees(const CsrMatrix& A) {
    std::vector<int> deg(A.n_rows, 0);
    for (int i = 0; i < A.n_rows; ++i) {
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
            if (A.col_idx[k] != i) ++deg[i];
        }
    }
    return deg;
}

// BFS from `start`; returns nodes in visit order and the index where the
// last level begins. Neighbors are enqueued in ascending-degree order.
std::pair<std::vector<int>, int> bfs_levels(const CsrMatrix& A, int start,
                                            const std::vector<int>& deg,
                                            std::vector<int>& mark, int stamp) {
    std::vector<int> order;
    order.reserve(A.n_rows);
    order.push_back(start);
    mark[start] = stamp;
    std::size_t level_begin = 0;
    std::size_t last_level_begin = 0;
    while (level_begin < order.size()) {
        const std::size_t level_end = order.size();
        last_level_begin = level_begin;
        for (std::size_t idx = level_begin; idx < level_end; ++idx) {
            const int u = order[idx];
            std::vector<int> nbrs;
            for (int k = A.row_ptr[u]; k < A.row_ptr[u + 1]; ++k) {
                const int v = A.col_idx[k];
                if (v != u && mark[v] != stamp) {
                    mark[v] = stamp;
                    nbrs.push_back(v);
                }
            }
            std::sort(nbrs.begin(), nbrs.end(),
                      [&deg](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
            order.insert(order.end(), nbrs.begin(), nbrs.end());
        }
        level_begin = level_end;
    }
    return {std::move(order), static_cast<int>(last_level_begin)};
}

}  // namespace

std::vector<int> rcm_ordering(const CsrMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("rcm_ordering: matrix not square");
    const int n = A.n_rows;
    const std::vector<int> deg = node_degrees(A);
    std::vector<int> mark(n, -1);
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> placed(n, false);
    int stamp = 0;

    for (int seed = 0; seed < n; ++seed) {
        if (placed[seed]) continue;
        // pseudo-peripheral start: hop to a lowest-degree node of the last
        // BFS level until the level structure stops changing
        int start = seed;
        auto [component, last_begin] = bfs_levels(A, start, deg, mark, stamp++);
        for (int pass = 0; pass < 8; ++pass) {
            int candidate = component[last_begin];
            for (std::size_t i = last_begin; i < component.size(); ++i) {
                if (deg[component[i]] < deg[candidate]) candidate = component[i];
            }
            if (candidate == start) break;
            auto [next_component, next_begin] = bfs_levels(A, candidate, deg, mark, stamp++);
            start = candidate;
            component = std::move(next_component);
            last_begin = next_begin;
        }
        for (int v : component) {
            order.push_back(v);
            placed[v] = true;
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

SpdFactor cholesky(const CsrMatrix& W) {
    if (!W.is_square()) throw std::invalid_argument("cholesky: matrix not square");
    const int n = W.n_rows;

    std::vector<int> perm(n);
    if (n > kReorderCutoff) {
        perm = rcm_ordering(W);
    } else {
        std::iota(perm.begin(), perm.end(), 0);
    }
    std::vector<int> inv(n);
    for (int k = 0; k < n; ++k) inv[perm[k]] = k;

    // row envelope of the permuted lower triangle; Cholesky fill stays inside it
    std::vector<int> first(n);
    std::iota(first.begin(), first.end(), 0);
    for (int r = 0; r < n; ++r) {
        const int pi = inv[r];
        for (int k = W.row_ptr[r]; k < W.row_ptr[r + 1]; ++k) {
            const int pj = inv[W.col_idx[k]];
            if (pj < pi) first[pi] = std::min(first[pi], pj);
        }
    }

    std::vector<std::size_t> offset(n + 1, 0);
    for (int i = 0; i < n; ++i)
        offset[i + 1] = offset[i] + static_cast<std::size_t>(i - first[i] + 1);
    std::vector<double> sky(offset[n], 0.0);
    auto entry = [&](int i, int j) -> double& { return sky[offset[i] + (j - first[i])]; };

    for (int r = 0; r < n; ++r) {
        const int pi = inv[r];
        for (int k = W.row_ptr[r]; k < W.row_ptr[r + 1]; ++k) {
            const int pj = inv[W.col_idx[k]];
            if (pj <= pi) entry(pi, pj) = W.values[k];
        }
    }

    for (int i = 0; i < n; ++i) {
        const int fi = first[i];
        for (int j = fi; j < i; ++j) {
            const int fj = first[j];
            const int lo = std::max(fi, fj);
            double s = entry(i, j);
            for (int k = lo; k < j; ++k) s -= entry(i, k) * entry(j, k);
            entry(i, j) = s / entry(j, j);
        }
        double d = entry(i, i);
        for (int k = fi; k < i; ++k) d -= entry(i, k) * entry(i, k);
        if (!(d > 0.0)) throw NotPositiveDefinite("cholesky: non-positive pivot at row " +
                                                  std::to_string(i));
        entry(i, i) = std::sqrt(d);
    }

    SpdFactor F;
    F.perm = std::move(perm);
    CsrMatrix& L = F.lower;
    L.n_rows = L.n_cols = n;
    L.row_ptr.assign(n + 1, 0);
    std::size_t kept = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = first[i]; j <= i; ++j)
            if (entry(i, j) != 0.0) ++kept;
        L.row_ptr[i + 1] = static_cast<int>(kept);
    }
    L.col_idx.reserve(kept);
    L.values.reserve(kept);
    for (int i = 0; i < n; ++i) {
        for (int j = first[i]; j <= i; ++j) {
            const double v = entry(i, j);
            if (v != 0.0) {
                L.col_idx.push_back(j);
                L.values.push_back(v);
            }
        }
    }
    return F;
}

DenseVector solve_spd(const SpdFactor& F, const DenseVector& rhs) {
    const int n = F.n();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("solve_spd: dimension mismatch");
    const CsrMatrix& L = F.lower;

    DenseVector x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[F.perm[i]];

    // forward: L z = P b   (diagonal entry is last in each row)
    for (int i = 0; i < n; ++i) {
        double s = x[i];
        const int end = L.row_ptr[i + 1] - 1;
        for (int k = L.row_ptr[i]; k < end; ++k) s -= L.values[k] * x[L.col_idx[k]];
        x[i] = s / L.values[end];
    }
    // backward: L^T y = z, traversing L's rows from the bottom
    for (int i = n - 1; i >= 0; --i) {
        const int end = L.row_ptr[i + 1] - 1;
        x[i] /= L.values[end];
        const double xi = x[i];
        for (int k = L.row_ptr[i]; k < end; ++k) x[L.col_idx[k]] -= L.values[k] * xi;
    }

    DenseVector out(n);
    for (int i = 0; i < n; ++i) out[F.perm[i]] = x[i];
    return out;
}

DenseVector spd_apply(const SpdFactor& F, const DenseVector& v) {
    const int n = F.n();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("spd_apply: dimension mismatch");
    const CsrMatrix& L = F.lower;

    DenseVector u(n);
    for (int i = 0; i < n; ++i) u[i] = v[F.perm[i]];

    DenseVector t(n, 0.0);  // t = L^T u
    for (int i = 0; i < n; ++i) {
        for (int k = L.row_ptr[i]; k < L.row_ptr[i + 1]; ++k) t[L.col_idx[k]] += L.values[k] * u[i];
    }
    DenseVector s(n, 0.0);  // s = L t
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = L.row_ptr[i]; k < L.row_ptr[i + 1]; ++k) acc += L.values[k] * t[L.col_idx[k]];
        s[i] = acc;
    }

    DenseVector out(n);
    for (int i = 0; i < n; ++i) out[F.perm[i]] = s[i];
    return out;
}

}  // namespace gsor
