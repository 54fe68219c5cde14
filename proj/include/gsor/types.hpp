#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gsor {

using DenseVector = std::vector<double>;

/// Thrown when a factorization or inner solve meets a matrix that is not
/// symmetric positive definite (non-positive pivot, CG breakdown).
struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

/// Complex vector carried as paired real vectors. re and im must have equal
/// length; there is no complex matrix type anywhere in the library.
struct ComplexVector {
    DenseVector re;
    DenseVector im;

    ComplexVector() = default;
    ComplexVector(DenseVector real, DenseVector imag) : re(std::move(real)), im(std::move(imag)) {
        if (re.size() != im.size())
            throw std::invalid_argument("ComplexVector: re/im length mismatch");
    }

    std::size_t size() const { return re.size(); }
};

/// Iteration parameters shared by the stationary solvers.
///   alpha  relaxation (GSOR) or shift (MHSS) parameter
///   tol    relative-residual stopping tolerance
///   maxit  iteration cap; hitting it is reported, not thrown
struct IterParams {
    double alpha = 1.0;
    double tol = 1e-6;
    int maxit = 2000;
};

/// Outcome of an iterative solve. residual_history holds the relative
/// residual recorded at each outer check (one entry per iteration for the
/// stationary methods, one per restart cycle plus termination for GMRES).
/// For GMRES, `iterations` counts restart cycles and `inner_iterations` the
/// total Krylov steps; the stationary solvers leave inner_iterations at 0.
struct SolveReport {
    int iterations = 0;
    std::vector<double> residual_history;
    bool converged = false;
    double final_residual = 0.0;
    int inner_iterations = 0;
};

namespace vec {

DenseVector zeros(std::size_t n);
DenseVector ones(std::size_t n);
double dot(const DenseVector& a, const DenseVector& b);
double norm(const DenseVector& a);
/// y += a*x
void axpy(double a, const DenseVector& x, DenseVector& y);
void scale(DenseVector& x, double a);
/// a*x + b*y
DenseVector combine(double a, const DenseVector& x, double b, const DenseVector& y);

}  // namespace vec

}  // namespace gsor
