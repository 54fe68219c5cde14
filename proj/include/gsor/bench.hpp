#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "gsor/problems.hpp"

namespace gsor {

enum class Method { mhss, gsor, gmres, gsor_gmres };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Where the iteration parameter comes from:
///   computed     rho(S) by power method, then the optimal-parameter formula
///                (MHSS has no such formula and falls back to the reference
///                table)
///   paper_table  the published reference values (m in {16,...,512})
///   explicit_value  a user-supplied alpha
enum class AlphaSource { computed, paper_table, explicit_value };

/// Reference optimal parameters per benchmark, grid size and method family
/// (stationary MHSS vs the GSOR family). Empty when the grid size is not one
/// of the tabulated ones.
std::optional<double> reference_alpha(Benchmark example, int m, Method method);

struct BenchRow {
    Benchmark example = Benchmark::parabolic;
    int m = 0;
    Method method = Method::gsor;
    double alpha_used = 0.0;  // 0 for unpreconditioned GMRES
    int iterations = 0;
    double final_residual = 0.0;
    double wall_time_s = 0.0;  // informational only, never asserted
    bool converged = false;
};

struct BenchConfig {
    std::vector<Benchmark> examples{Benchmark::parabolic, Benchmark::dynamics,
                                    Benchmark::periodic, Benchmark::helmholtz};
    std::vector<int> m_values{16, 32, 64};
    std::vector<Method> methods{Method::mhss, Method::gsor, Method::gmres, Method::gsor_gmres};
    double tol = 1e-6;
    int maxit = 2000;  // outer iterations (restart cycles for the GMRES family)
    int restart = 10;
    AlphaSource alpha_source = AlphaSource::paper_table;
    double alpha_explicit = 0.0;
};

/// Parse the flat key-value config format:
///
///     examples = 1 2 3 4
///     m = 16 32 64
///     methods = gsor mhss gmres gsor-gmres
///     tol = 1e-6
///     maxit = 2000
///     restart = 10
///     alpha_source = paper        # or: computed, or a number
///
/// '#' starts a comment; unknown keys are errors.
BenchConfig parse_bench_config(std::istream& in);
BenchConfig parse_bench_config(const std::filesystem::path& path);

struct AlphaRow {
    Benchmark example;
    int m;
    double rho;
    double alpha;
    int power_iterations;
    bool converged;
};

/// Estimate rho(S) per (example, m) by the power method and evaluate the
/// optimal-parameter formula.
std::vector<AlphaRow> run_alpha_table(const std::vector<Benchmark>& examples,
                                      const std::vector<int>& m_list, double tol = 1e-8);

/// One row per (example, m, method): zero initial guess, true-residual
/// stopping. Rows are produced in config order and the run is deterministic.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Single solver run on an already-built problem.
BenchRow run_single(const Problem& problem, Benchmark example, int m, Method method, double alpha,
                    double tol, int maxit, int restart);

/// Eigenvalue CSV for the iteration matrix G_alpha, the preconditioned matrix
/// and (when the benchmark admits it) the block matrix itself. Columns are
/// set,re,im with set in {A, G, precondA}; the A set is derived from the
/// joint eigenvector data and is omitted, with a header note, when W and T do
/// not share eigenvectors. Dense-oracle regime: m is capped at 32.
void export_spectrum(const ProblemSpec& spec, double alpha, const std::filesystem::path& path);

enum class ReportFormat { csv, markdown };

/// Write rows as CSV (canonical, machine-readable) or a markdown table per
/// example with methods as row groups and grid sizes as columns.
void export_report(const std::vector<BenchRow>& rows, ReportFormat format,
                   const std::filesystem::path& path);

/// Inverse of the CSV writer, for round-tripping reports.
std::vector<BenchRow> read_report_csv(const std::filesystem::path& path);

}  // namespace gsor
