// Command-line harness for the solver toolkit: optimal-parameter estimation,
// single solves, benchmark suites, spectrum data and matrix export.
//
// Exit codes: 0 success (all runs converged), 1 usage or configuration error,
// 2 at least one run did not converge, 3 numerical error (e.g. a matrix that
// is not positive definite).

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "gsor/bench.hpp"
#include "gsor/cholesky.hpp"
#include "gsor/matrix_market.hpp"
#include "gsor/power_method.hpp"
#include "gsor/theory.hpp"

namespace {

using namespace gsor;

void print_row(const BenchRow& row) {
    std::cout << "example=" << static_cast<int>(row.example) << " m=" << row.m
              << " method=" << method_name(row.method) << " alpha=" << row.alpha_used
              << " iterations=" << row.iterations
              << " converged=" << (row.converged ? "yes" : "no")
              << " final_residual=" << row.final_residual << " wall_time_s=" << row.wall_time_s
              << "\n";
}

int run_alpha(int example, int m, double tol) {
    const auto rows = run_alpha_table({benchmark_from_index(example)}, {m}, tol);
    const AlphaRow& r = rows.front();
    std::cout << "example=" << example << " m=" << m << " rho=" << r.rho << " alpha=" << r.alpha
              << " power_iterations=" << r.power_iterations
              << " converged=" << (r.converged ? "yes" : "no") << "\n";
    return r.converged ? 0 : 2;
}

int run_solve(int example, int m, const std::string& method_str, double alpha_explicit,
              bool alpha_given, const std::string& alpha_source, double tol, int maxit,
              int restart) {
    const Method method = method_from_name(method_str);
    const Benchmark example_id = benchmark_from_index(example);

    ProblemSpec spec;
    spec.example = example_id;
    spec.m = m;
    const Problem problem = build_problem(spec);

    double alpha = 0.0;
    if (method != Method::gmres) {
        if (alpha_given) {
            alpha = alpha_explicit;
        } else if (alpha_source == "computed" && method != Method::mhss) {
            const SpdFactor Wf = cholesky(problem.system.W);
            alpha = optimal_alpha(power_method_rho_S(Wf, problem.system.T).value);
        } else if (alpha_source == "computed" || alpha_source == "paper") {
            const auto a = reference_alpha(example_id, m, method);
            if (!a) {
                std::cerr << "no reference alpha for example " << example << ", m=" << m
                          << "; pass --alpha\n";
                return 1;
            }
            alpha = *a;
        } else {
            std::cerr << "unknown alpha source '" << alpha_source << "'\n";
            return 1;
        }
    }

    const BenchRow row = run_single(problem, example_id, m, method, alpha, tol, maxit, restart);
    print_row(row);
    return row.converged ? 0 : 2;
}

int run_bench_cmd(const std::string& config_path, const std::string& out_path,
                  const std::string& format) {
    const BenchConfig config = parse_bench_config(std::filesystem::path(config_path));
    const std::vector<BenchRow> rows = run_bench(config);
    for (const BenchRow& row : rows) print_row(row);
    if (!out_path.empty()) {
        export_report(rows, format == "markdown" ? ReportFormat::markdown : ReportFormat::csv,
                      out_path);
        std::cout << "wrote " << out_path << "\n";
    }
    for (const BenchRow& row : rows)
        if (!row.converged) return 2;
    return 0;
}

int run_spectrum(int example, int m, double alpha, const std::string& out_path) {
    ProblemSpec spec;
    spec.example = benchmark_from_index(example);
    spec.m = m;
    export_spectrum(spec, alpha, out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int run_export(int example, int m, const std::string& out_dir) {
    ProblemSpec spec;
    spec.example = benchmark_from_index(example);
    spec.m = m;
    const Problem problem = build_problem(spec);
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_matrix_market(problem.system.W, dir / "W.mtx", true);
    write_matrix_market(problem.system.T, dir / "T.mtx", true);
    write_vector(problem.system.p, dir / "p.txt");
    write_vector(problem.system.q, dir / "q.txt");
    write_vector(problem.b.re, dir / "b_re.txt");
    write_vector(problem.b.im, dir / "b_im.txt");
    std::cout << "wrote W.mtx T.mtx p.txt q.txt b_re.txt b_im.txt to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver toolkit for complex symmetric systems (W + iT)u = b"};
    app.require_subcommand(1);

    int example = 1;
    int m = 16;
    double tol = 1e-6;
    double power_tol = 1e-8;
    int maxit = 2000;
    int restart = 10;
    double alpha = 0.0;
    std::string method = "gsor";
    std::string alpha_source = "paper";
    std::string config_path, out_path, out_dir, format = "csv";

    CLI::App* alpha_cmd = app.add_subcommand("alpha", "estimate rho(S) and the optimal parameter");
    alpha_cmd->add_option("--example", example, "benchmark index 1..4")->required();
    alpha_cmd->add_option("--m", m, "grid size")->required();
    alpha_cmd->add_option("--tol", power_tol, "power-method tolerance");

    CLI::App* solve_cmd = app.add_subcommand("solve", "run one solver on one benchmark");
    solve_cmd->add_option("--example", example)->required();
    solve_cmd->add_option("--m", m)->required();
    solve_cmd->add_option("--method", method, "gsor|mhss|gmres|gsor-gmres");
    CLI::Option* alpha_opt = solve_cmd->add_option("--alpha", alpha, "explicit parameter");
    solve_cmd->add_option("--alpha-source", alpha_source, "computed|paper");
    solve_cmd->add_option("--tol", tol);
    solve_cmd->add_option("--maxit", maxit);
    solve_cmd->add_option("--restart", restart);

    CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark suite from a config file");
    bench_cmd->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    bench_cmd->add_option("--out", out_path, "report file");
    bench_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "markdown"}));

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "write eigenvalue data for plotting (m <= 32)");
    spectrum_cmd->add_option("--example", example)->required();
    spectrum_cmd->add_option("--m", m)->required();
    spectrum_cmd->add_option("--alpha", alpha)->required();
    spectrum_cmd->add_option("--out", out_path)->required();

    CLI::App* export_cmd = app.add_subcommand("export", "write W, T and right-hand sides to files");
    export_cmd->add_option("--example", example)->required();
    export_cmd->add_option("--m", m)->required();
    export_cmd->add_option("--out-dir", out_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*alpha_cmd) return run_alpha(example, m, power_tol);
        if (*solve_cmd)
            return run_solve(example, m, method, alpha, alpha_opt->count() > 0, alpha_source, tol,
                             maxit, restart);
        if (*bench_cmd) return run_bench_cmd(config_path, out_path, format);
        if (*spectrum_cmd) return run_spectrum(example, m, alpha, out_path);
        if (*export_cmd) return run_export(example, m, out_dir);
    } catch (const gsor::NotPositiveDefinite& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
