#include "gsor/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "gsor/krylov.hpp"
#include "gsor/power_method.hpp"
#include "gsor/stationary.hpp"
#include "gsor/theory.hpp"

namespace gsor {

std::string method_name(Method m) {
    switch (m) {
        case Method::mhss: return "mhss";
        case Method::gsor: return "gsor";
        case Method::gmres: return "gmres";
        case Method::gsor_gmres: return "gsor-gmres";
    }
    throw std::logic_error("method_name: bad enum");
}

Method method_from_name(const std::string& name) {
    if (name == "mhss") return Method::mhss;
    if (name == "gsor") return Method::gsor;
    if (name == "gmres") return Method::gmres;
    if (name == "gsor-gmres" || name == "gsor_gmres") return Method::gsor_gmres;
    throw std::invalid_argument("unknown method: " + name);
}

namespace {

// Published optimal parameters, indexed by grid size m.
const std::map<int, double> kMhssAlpha[4] = {
    {{16, 1.06}, {32, 0.75}, {64, 0.54}, {128, 0.40}, {256, 0.30}, {512, 0.21}},
    {{16, 0.21}, {32, 0.08}, {64, 0.04}, {128, 0.02}, {256, 0.01}, {512, 0.005}},
    {{16, 1.61}, {32, 1.01}, {64, 0.53}, {128, 0.26}, {256, 0.13}, {512, 0.07}},
    {{16, 0.37}, {32, 0.09}, {64, 0.021}, {128, 0.005}, {256, 0.002}, {512, 0.0005}},
};
const std::map<int, double> kGsorAlpha[4] = {
    {{16, 0.550}, {32, 0.495}, {64, 0.457}, {128, 0.432}, {256, 0.428}, {512, 0.412}},
    {{16, 0.455}, {32, 0.455}, {64, 0.455}, {128, 0.455}, {256, 0.455}, {512, 0.457}},
    {{16, 0.908}, {32, 0.776}, {64, 0.566}, {128, 0.353}, {256, 0.199}, {512, 0.105}},
    {{16, 0.862}, {32, 0.862}, {64, 0.862}, {128, 0.862}, {256, 0.862}, {512, 0.862}},
};

double computed_gsor_alpha(const Problem& problem) {
    const SpdFactor Wf = cholesky(problem.system.W);
    const RhoEstimate rho = power_method_rho_S(Wf, problem.system.T);
    return optimal_alpha(rho.value);
}

double pick_alpha(const BenchConfig& config, const Problem& problem, Benchmark example, int m,
                  Method method) {
    if (method == Method::gmres) return 0.0;
    switch (config.alpha_source) {
        case AlphaSource::explicit_value:
            return config.alpha_explicit;
        case AlphaSource::paper_table: {
            const auto a = reference_alpha(example, m, method);
            if (!a)
                throw std::invalid_argument("no reference alpha for m=" + std::to_string(m));
            return *a;
        }
        case AlphaSource::computed: {
            if (method == Method::mhss) {
                // no closed-form optimal shift for MHSS; use the reference value
                const auto a = reference_alpha(example, m, method);
                if (!a)
                    throw std::invalid_argument("no reference alpha for m=" + std::to_string(m));
                return *a;
            }
            return computed_gsor_alpha(problem);
        }
    }
    throw std::logic_error("pick_alpha: bad enum");
}

}  // namespace

std::optional<double> reference_alpha(Benchmark example, int m, Method method) {
    const int idx = static_cast<int>(example) - 1;
    const auto& table = (method == Method::mhss) ? kMhssAlpha[idx] : kGsorAlpha[idx];
    const auto it = table.find(m);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

BenchConfig parse_bench_config(std::istream& in) {
    BenchConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string eq;
        if (!(ls >> eq) || eq != "=")
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        auto rest = [&ls]() {
            std::vector<std::string> words;
            std::string w;
            while (ls >> w) words.push_back(w);
            return words;
        };
        const std::vector<std::string> values = rest();
        if (values.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": no value");

        if (key == "examples") {
            config.examples.clear();
            for (const auto& v : values) config.examples.push_back(benchmark_from_index(std::stoi(v)));
        } else if (key == "m") {
            config.m_values.clear();
            for (const auto& v : values) config.m_values.push_back(std::stoi(v));
        } else if (key == "methods") {
            config.methods.clear();
            for (const auto& v : values) config.methods.push_back(method_from_name(v));
        } else if (key == "tol") {
            config.tol = std::stod(values.at(0));
        } else if (key == "maxit") {
            config.maxit = std::stoi(values.at(0));
        } else if (key == "restart") {
            config.restart = std::stoi(values.at(0));
        } else if (key == "alpha_source") {
            const std::string& v = values.at(0);
            if (v == "computed") {
                config.alpha_source = AlphaSource::computed;
            } else if (v == "paper" || v == "paper-table" || v == "table") {
                config.alpha_source = AlphaSource::paper_table;
            } else {
                config.alpha_source = AlphaSource::explicit_value;
                config.alpha_explicit = std::stod(v);
            }
        } else if (key == "alpha") {
            config.alpha_source = AlphaSource::explicit_value;
            config.alpha_explicit = std::stod(values.at(0));
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    if (config.examples.empty() || config.m_values.empty() || config.methods.empty())
        throw std::invalid_argument("config: examples, m and methods must be nonempty");
    for (int m : config.m_values)
        if (m < 2) throw std::invalid_argument("config: m must be >= 2");
    return config;
}

BenchConfig parse_bench_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config " + path.string());
    return parse_bench_config(in);
}

std::vector<AlphaRow> run_alpha_table(const std::vector<Benchmark>& examples,
                                      const std::vector<int>& m_list, double tol) {
    std::vector<AlphaRow> rows;
    for (Benchmark example : examples) {
        for (int m : m_list) {
            if (m < 2) throw std::invalid_argument("run_alpha_table: m must be >= 2");
            ProblemSpec spec;
            spec.example = example;
            spec.m = m;
            const Problem problem = build_problem(spec);
            const SpdFactor Wf = cholesky(problem.system.W);
            const RhoEstimate rho = power_method_rho_S(Wf, problem.system.T, tol);
            rows.push_back({example, m, rho.value, optimal_alpha(rho.value), rho.iterations,
                            rho.converged});
        }
    }
    return rows;
}

BenchRow run_single(const Problem& problem, Benchmark example, int m, Method method, double alpha,
                    double tol, int maxit, int restart) {
    BenchRow row;
    row.example = example;
    row.m = m;
    row.method = method;
    row.alpha_used = alpha;

    const auto start = std::chrono::steady_clock::now();
    SolveReport report;
    switch (method) {
        case Method::gsor: {
            report = gsor_solve(problem.system, {alpha, tol, maxit}).report;
            break;
        }
        case Method::mhss: {
            report =
                mhss_solve(problem.system.W, problem.system.T, problem.b, {alpha, tol, maxit})
                    .report;
            break;
        }
        case Method::gmres:
        case Method::gsor_gmres: {
            const BlockSystem& sys = problem.system;
            const int n = sys.n();
            DenseVector rhs(2 * n);
            std::copy(sys.p.begin(), sys.p.end(), rhs.begin());
            std::copy(sys.q.begin(), sys.q.end(), rhs.begin() + n);
            GmresConfig cfg;
            cfg.restart = restart;
            cfg.tol = tol;
            cfg.maxit = maxit * restart;  // maxit counts cycles; the cap is on inner steps
            auto true_residual = [&sys, n](const DenseVector& v) {
                DenseVector x(v.begin(), v.begin() + n);
                DenseVector y(v.begin() + n, v.end());
                return block_residual(sys, x, y);
            };
            if (method == Method::gmres) {
                const LinearOperator op = block_operator(sys);
                report = gmres_restart(op, rhs, cfg, vec::zeros(2 * n), true_residual).report;
            } else {
                const SpdFactor Wf = cholesky(sys.W);
                const LinearOperator op = gsor_preconditioned_operator(Wf, sys.T, alpha);
                auto [e, f] = gsor_precond_solve(Wf, sys.T, alpha, sys.p, sys.q);
                DenseVector prhs(2 * n);
                std::copy(e.begin(), e.end(), prhs.begin());
                std::copy(f.begin(), f.end(), prhs.begin() + n);
                report = gmres_restart(op, prhs, cfg, vec::zeros(2 * n), true_residual).report;
            }
            break;
        }
    }
    const auto stop = std::chrono::steady_clock::now();

    row.iterations = report.iterations;
    row.final_residual = report.final_residual;
    row.converged = report.converged;
    row.wall_time_s = std::chrono::duration<double>(stop - start).count();
    return row;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (Benchmark example : config.examples) {
        for (int m : config.m_values) {
            ProblemSpec spec;
            spec.example = example;
            spec.m = m;
            const Problem problem = build_problem(spec);
            for (Method method : config.methods) {
                const double alpha = pick_alpha(config, problem, example, m, method);
                rows.push_back(run_single(problem, example, m, method, alpha, config.tol,
                                          config.maxit, config.restart));
            }
        }
    }
    return rows;
}

void export_spectrum(const ProblemSpec& spec, double alpha, const std::filesystem::path& path) {
    if (spec.m > 32) throw std::invalid_argument("export_spectrum: m capped at 32");
    const Problem problem = build_problem(spec);
    const CsrMatrix& W = problem.system.W;
    const CsrMatrix& T = problem.system.T;
    const int n = W.n_rows;

    const SEigenData sd = s_eigen_decomposition(W, T);
    const SpectrumResult sr = gsor_spectrum(sd.mu, alpha);

    // The block matrix [[W,-T],[T,W]] has eigenvalues w_j (1 +- i mu_j) when
    // the S-eigenvectors are eigenvectors of W as well (W and T share an
    // eigenbasis). Check that before emitting the A set.
    std::vector<double> w_eigs(n);
    bool a_available = true;
    const double wscale = std::max(csr_max_abs(W), 1e-300);
    for (int j = 0; j < n && a_available; ++j) {
        DenseVector v(n);
        for (int i = 0; i < n; ++i) v[i] = sd.vectors.at(i, j);
        const DenseVector wv = spmv(W, v);
        const double vv = vec::dot(v, v);
        const double w = vec::dot(v, wv) / vv;
        double dev = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = wv[i] - w * v[i];
            dev += d * d;
        }
        if (std::sqrt(dev / vv) > 1e-8 * wscale) a_available = false;
        w_eigs[j] = w;
    }

    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_spectrum: cannot open " + path.string());
    out << std::setprecision(17);
    out << "# spectrum data: benchmark " << static_cast<int>(spec.example) << ", m=" << spec.m
        << ", alpha=" << alpha << "\n";
    out << "# sets: G = iteration matrix, precondA = preconditioned block matrix";
    if (a_available) {
        out << ", A = block matrix\n";
    } else {
        out << "; A set omitted (W and T do not share an eigenbasis)\n";
    }
    out << "set,re,im\n";
    if (a_available) {
        for (int j = 0; j < n; ++j) {
            out << "A," << w_eigs[j] << "," << w_eigs[j] * sd.mu[j] << "\n";
            out << "A," << w_eigs[j] << "," << -w_eigs[j] * sd.mu[j] << "\n";
        }
    }
    for (const auto& l : sr.lambda) out << "G," << l.real() << "," << l.imag() << "\n";
    for (const auto& v : sr.precond_eigs)
        out << "precondA," << v.real() << "," << v.imag() << "\n";
    if (!out) throw std::runtime_error("export_spectrum: write failed for " + path.string());
}

void export_report(const std::vector<BenchRow>& rows, ReportFormat format,
                   const std::filesystem::path& path) {
    if (rows.empty()) throw std::invalid_argument("export_report: no rows");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_report: cannot open " + path.string());

    if (format == ReportFormat::csv) {
        out << "example,m,method,alpha,iterations,converged,final_residual,wall_time_s\n";
        out << std::setprecision(17);
        for (const BenchRow& r : rows) {
            out << static_cast<int>(r.example) << "," << r.m << "," << method_name(r.method)
                << "," << r.alpha_used << "," << r.iterations << "," << (r.converged ? 1 : 0)
                << "," << r.final_residual << "," << r.wall_time_s << "\n";
        }
    } else {
        // one table per example: methods as row groups, grid sizes as columns
        std::vector<int> ms;
        for (const BenchRow& r : rows)
            if (std::find(ms.begin(), ms.end(), r.m) == ms.end()) ms.push_back(r.m);
        std::vector<Benchmark> examples;
        for (const BenchRow& r : rows)
            if (std::find(examples.begin(), examples.end(), r.example) == examples.end())
                examples.push_back(r.example);
        std::vector<Method> methods;
        for (const BenchRow& r : rows)
            if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
                methods.push_back(r.method);

        auto find_row = [&rows](Benchmark e, int m, Method method) -> const BenchRow* {
            for (const BenchRow& r : rows)
                if (r.example == e && r.m == m && r.method == method) return &r;
            return nullptr;
        };

        for (Benchmark e : examples) {
            out << "### benchmark " << static_cast<int>(e) << "\n\n";
            out << "| method |";
            for (int m : ms) out << " m=" << m << " |";
            out << "\n|---|";
            for (std::size_t i = 0; i < ms.size(); ++i) out << "---|";
            out << "\n";
            for (Method method : methods) {
                out << "| " << method_name(method) << " |";
                for (int m : ms) {
                    const BenchRow* r = find_row(e, m, method);
                    if (!r) {
                        out << " - |";
                    } else if (r->converged) {
                        out << " " << r->iterations << " |";
                    } else {
                        out << " \xE2\x80\xA0 |";  // dagger for no convergence
                    }
                }
                out << "\n";
            }
            out << "\n";
        }
    }
    if (!out) throw std::runtime_error("export_report: write failed for " + path.string());
}

std::vector<BenchRow> read_report_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_report_csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) ||
        line != "example,m,method,alpha,iterations,converged,final_residual,wall_time_s")
        throw std::runtime_error("read_report_csv: bad header");
    std::vector<BenchRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        auto next = [&]() {
            if (!std::getline(ls, field, ','))
                throw std::runtime_error("read_report_csv: short row: " + line);
            return field;
        };
        BenchRow r;
        r.example = benchmark_from_index(std::stoi(next()));
        r.m = std::stoi(next());
        r.method = method_from_name(next());
        r.alpha_used = std::stod(next());
        r.iterations = std::stoi(next());
        r.converged = std::stoi(next()) != 0;
        r.final_residual = std::stod(next());
        r.wall_time_s = std::stod(next());
        rows.push_back(r);
    }
    return rows;
}

}  // namespace gsor
