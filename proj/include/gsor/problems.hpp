#pragma once

#include <optional>

#include "gsor/block_system.hpp"

namespace gsor {

/// The four benchmark systems, all on an m x m uniform grid of the unit
/// square with mesh size h = 1/(m+1), K = I(x)V + V(x)I the five-point
/// stencil with V = h^-2 tridiag(-1,2,-1):
///
///   parabolic   W = K + ((3-sqrt(3))/tau) I, T = K + ((3+sqrt(3))/tau) I,
///               b_j = (1-i) j / (tau (j+1)^2); an implicit time step of a
///               parabolic equation, tau the step size (default h).
///   dynamics    W = K - omega^2 I, T = 10 omega I + mu K; a damped
///               frequency-response system (omega = pi, mu = 0.02).
///   periodic    T the Dirichlet five-point stencil without the h^-2 factor,
///               W = 10 (I(x)Vc + Vc(x)I) + 9 (e1 em' + em e1')(x)I with Vc
///               the periodic variant; unscaled.
///   helmholtz   W = K + sigma1 I, T = sigma2 I (sigma1 = sigma2 = 100).
///
/// For dynamics, periodic and helmholtz, b = (1+i) A 1, so the exact solution
/// is the all-ones complex vector. Systems with `normalize` set (default for
/// all but periodic) are scaled through by h^2: W, T, p, q all multiplied,
/// which leaves the iteration behavior unchanged.
enum class Benchmark { parabolic = 1, dynamics = 2, periodic = 3, helmholtz = 4 };

Benchmark benchmark_from_index(int index);

struct ProblemSpec {
    Benchmark example = Benchmark::parabolic;
    int m = 16;
    double tau = 0.0;      // parabolic time step; <= 0 selects the default tau = h
    double omega = 3.14159265358979323846;
    double mu_damp = 0.02;
    double sigma1 = 100.0;
    double sigma2 = 100.0;
    std::optional<bool> normalize;  // unset: true except for periodic
    /// Variant of the parabolic system with the same (3-sqrt(3))/tau shift on
    /// both W and T (making them equal). Off by default; the distinct-shift
    /// form is the one whose optimal parameters match the reference table.
    bool parabolic_equal_shifts = false;
};

struct Problem {
    BlockSystem system;
    ComplexVector b;  // p + iq, duplicated from the system for complex-side solvers
};

Problem build_problem(const ProblemSpec& spec);

struct RotatedSystem {
    CsrMatrix W;
    CsrMatrix T;
    ComplexVector b;
};

/// Multiply (W + iT)u = b through by beta - i*delta:
/// W~ = beta W + delta T, T~ = beta T - delta W, b~ = (beta - i delta) b.
/// The solution is unchanged; the rotation can move definiteness from T to W.
/// (beta, delta) = (0, 0) is rejected.
RotatedSystem rotate_system(const CsrMatrix& W, const CsrMatrix& T, const ComplexVector& b,
                            double beta, double delta);

}  // namespace gsor
