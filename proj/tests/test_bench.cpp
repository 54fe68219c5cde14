#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsor/bench.hpp"
#include "gsor/theory.hpp"
#include "oracle.hpp"

using namespace gsor;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("gsor_bench_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::vector<std::array<double, 3>> read_spectrum_csv(const std::filesystem::path& file,
                                                     const std::string& set) {
    std::ifstream in(file);
    REQUIRE(in.good());
    std::vector<std::array<double, 3>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("set,", 0) == 0) continue;
        std::istringstream ls(line);
        std::string tag, re, im;
        std::getline(ls, tag, ',');
        std::getline(ls, re, ',');
        std::getline(ls, im, ',');
        if (tag == set) rows.push_back({std::stod(re), std::stod(im), 0.0});
    }
    return rows;
}

}  // namespace

TEST_CASE("reference_alpha covers the tabulated grids") {
    CHECK(reference_alpha(Benchmark::parabolic, 16, Method::gsor) == 0.550);
    CHECK(reference_alpha(Benchmark::parabolic, 16, Method::mhss) == 1.06);
    CHECK(reference_alpha(Benchmark::periodic, 64, Method::gsor) == 0.566);
    CHECK(reference_alpha(Benchmark::helmholtz, 512, Method::gsor) == 0.862);
    CHECK(reference_alpha(Benchmark::helmholtz, 32, Method::mhss) == 0.09);
    CHECK(reference_alpha(Benchmark::dynamics, 128, Method::gsor_gmres) == 0.455);
    CHECK_FALSE(reference_alpha(Benchmark::dynamics, 48, Method::gsor).has_value());
}

TEST_CASE("run_alpha_table reproduces the published values where they are consistent") {
    const auto rows = run_alpha_table({Benchmark::dynamics}, {16, 32, 64});
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.converged);
        CHECK(std::abs(r.alpha - 0.455) <= 0.005);
    }
    const auto r3 = run_alpha_table({Benchmark::periodic}, {16});
    CHECK(std::abs(r3[0].alpha - 0.908) <= 0.005);
    CHECK(std::abs(optimal_factor(r3[0].rho) - 0.092) <= 0.005);
}

TEST_CASE("run_alpha_table on the helmholtz benchmark matches the closed-form radius") {
    // The dominant eigenvalue of S is sigma2 / (kmin + sigma1) with kmin the
    // smallest eigenvalue of the five-point stencil, 8 (m+1)^2 sin^2(pi h / 2).
    const auto rows = run_alpha_table({Benchmark::helmholtz}, {16});
    const double h = 1.0 / 17.0;
    const double kmin = 8.0 / (h * h) * std::pow(std::sin(0.5 * 3.14159265358979323846 * h), 2);
    const double rho = 100.0 / (kmin + 100.0);
    CHECK(rows[0].rho == doctest::Approx(rho).epsilon(1e-6));
    CHECK(rows[0].alpha == doctest::Approx(2.0 / (1.0 + std::sqrt(1.0 + rho * rho))).epsilon(1e-6));
}

TEST_CASE("run_alpha_table rejects undersized grids") {
    CHECK_THROWS_AS(run_alpha_table({Benchmark::dynamics}, {1}), std::invalid_argument);
}

TEST_CASE("run_bench reproduces published iteration counts for selected rows") {
    BenchConfig config;
    config.examples = {Benchmark::helmholtz};
    config.m_values = {64};
    config.methods = {Method::gsor};
    const auto rows = run_bench(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].converged);
    CHECK(rows[0].alpha_used == 0.862);
    CHECK(std::abs(rows[0].iterations - 8) <= 1);

    BenchConfig c2;
    c2.examples = {Benchmark::periodic};
    c2.m_values = {64};
    c2.methods = {Method::gsor_gmres};
    const auto rows2 = run_bench(c2);
    CHECK(rows2[0].converged);
    CHECK(rows2[0].alpha_used == 0.566);
    CHECK(std::abs(rows2[0].iterations - 2) <= 1);
}

TEST_CASE("run_bench reproduces the long unpreconditioned gmres row at m = 128") {
    BenchConfig config;
    config.examples = {Benchmark::dynamics};
    config.m_values = {128};
    config.methods = {Method::gmres};
    const auto rows = run_bench(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].converged);
    CHECK(rows[0].iterations >= 603);  // 670 within 10%
    CHECK(rows[0].iterations <= 737);
}

TEST_CASE("run_bench is deterministic") {
    BenchConfig config;
    config.examples = {Benchmark::helmholtz};
    config.m_values = {16};
    config.methods = {Method::gsor, Method::mhss, Method::gsor_gmres};
    config.alpha_source = AlphaSource::computed;
    const auto a = run_bench(config);
    const auto b = run_bench(config);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].iterations == b[i].iterations);
        CHECK(a[i].alpha_used == b[i].alpha_used);
        CHECK(a[i].final_residual == b[i].final_residual);
    }
}

TEST_CASE("computed alpha changes gsor iteration counts only marginally") {
    // The computed parameter lands on the exact optimum, where the iteration
    // matrix has a defective double eigenvalue and the transient costs a few
    // extra sweeps. Benchmark 1 at m = 16 measures 3 extra iterations against
    // the rounded published parameter; every other row stays within 2.
    for (int e = 1; e <= 4; ++e) {
        for (int m : {16, 32, 64}) {
            BenchConfig config;
            config.examples = {benchmark_from_index(e)};
            config.m_values = {m};
            config.methods = {Method::gsor};
            config.alpha_source = AlphaSource::paper_table;
            const auto table_rows = run_bench(config);
            config.alpha_source = AlphaSource::computed;
            const auto computed_rows = run_bench(config);
            const int diff = std::abs(table_rows[0].iterations - computed_rows[0].iterations);
            if (e == 1 && m == 16) {
                CHECK(diff <= 3);
            } else {
                CHECK(diff <= 2);
            }
        }
    }
}

TEST_CASE("parse_bench_config reads the flat key-value format") {
    std::istringstream in(
        "# comment\n"
        "examples = 1 4\n"
        "m = 16 32\n"
        "methods = gsor gsor-gmres\n"
        "tol = 1e-8\n"
        "maxit = 500\n"
        "restart = 20\n"
        "alpha_source = computed\n");
    const BenchConfig config = parse_bench_config(in);
    CHECK(config.examples == std::vector<Benchmark>{Benchmark::parabolic, Benchmark::helmholtz});
    CHECK(config.m_values == std::vector<int>{16, 32});
    CHECK(config.methods == std::vector<Method>{Method::gsor, Method::gsor_gmres});
    CHECK(config.tol == 1e-8);
    CHECK(config.maxit == 500);
    CHECK(config.restart == 20);
    CHECK(config.alpha_source == AlphaSource::computed);
}

TEST_CASE("parse_bench_config accepts an explicit alpha and rejects junk") {
    std::istringstream in("examples = 2\nm = 16\nmethods = gsor\nalpha_source = 0.5\n");
    const BenchConfig config = parse_bench_config(in);
    CHECK(config.alpha_source == AlphaSource::explicit_value);
    CHECK(config.alpha_explicit == 0.5);

    std::istringstream bad1("bogus_key = 3\n");
    CHECK_THROWS_AS(parse_bench_config(bad1), std::invalid_argument);
    std::istringstream bad2("examples = 7\nm = 16\nmethods = gsor\n");
    CHECK_THROWS_AS(parse_bench_config(bad2), std::invalid_argument);
    std::istringstream bad3("examples = 1\nm = 1\nmethods = gsor\n");
    CHECK_THROWS_AS(parse_bench_config(bad3), std::invalid_argument);
    std::istringstream bad4("examples = 1\nm = 16\nmethods = sor\n");
    CHECK_THROWS_AS(parse_bench_config(bad4), std::invalid_argument);
}

TEST_CASE("csv export writes header plus one line per row and round-trips") {
    TempDir dir;
    std::vector<BenchRow> rows(1);
    rows[0] = {Benchmark::dynamics, 16, Method::gsor, 0.455, 26, 8.7e-7, 0.012, true};
    const auto file = dir.path / "report.csv";
    export_report(rows, ReportFormat::csv, file);

    std::ifstream in(file);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 2);

    rows.push_back({Benchmark::periodic, 64, Method::gmres, 0.0, 2000, 3.4e-2, 1.5, false});
    export_report(rows, ReportFormat::csv, file);
    const auto back = read_report_csv(file);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].example == rows[i].example);
        CHECK(back[i].m == rows[i].m);
        CHECK(back[i].method == rows[i].method);
        CHECK(back[i].alpha_used == rows[i].alpha_used);
        CHECK(back[i].iterations == rows[i].iterations);
        CHECK(back[i].converged == rows[i].converged);
        CHECK(back[i].final_residual == rows[i].final_residual);
        CHECK(back[i].wall_time_s == rows[i].wall_time_s);
    }
}

TEST_CASE("markdown export groups methods as rows and grid sizes as columns") {
    TempDir dir;
    std::vector<BenchRow> rows;
    rows.push_back({Benchmark::parabolic, 16, Method::mhss, 1.06, 40, 9e-7, 0.1, true});
    rows.push_back({Benchmark::parabolic, 32, Method::mhss, 0.75, 54, 9e-7, 0.2, true});
    rows.push_back({Benchmark::parabolic, 16, Method::gsor, 0.55, 19, 9e-7, 0.1, true});
    rows.push_back({Benchmark::parabolic, 32, Method::gsor, 0.495, 22, 9e-7, 0.1, true});
    const auto file = dir.path / "report.md";
    export_report(rows, ReportFormat::markdown, file);

    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    CHECK(text.find("### benchmark 1") != std::string::npos);
    CHECK(text.find("| method | m=16 | m=32 |") != std::string::npos);
    CHECK(text.find("| mhss | 40 | 54 |") != std::string::npos);
    CHECK(text.find("| gsor | 19 | 22 |") != std::string::npos);
}

TEST_CASE("export_report rejects an empty row list") {
    TempDir dir;
    CHECK_THROWS_AS(export_report({}, ReportFormat::csv, dir.path / "x.csv"),
                    std::invalid_argument);
}

TEST_CASE("spectrum export bounds every iteration-matrix eigenvalue at the optimum") {
    TempDir dir;
    ProblemSpec spec;
    spec.example = Benchmark::parabolic;
    spec.m = 4;
    // alpha* from the same eigenvalue oracle the export uses; a less accurate
    // estimate sits off the tangency and the double root splits by sqrt(err)
    const Problem problem = build_problem(spec);
    double rho = 0.0;
    for (double v : s_eigenvalues(problem.system.W, problem.system.T))
        rho = std::max(rho, std::abs(v));
    const double astar = optimal_alpha(rho);
    const auto file = dir.path / "spec.csv";
    export_spectrum(spec, astar, file);
    const auto g = read_spectrum_csv(file, "G");
    REQUIRE(g.size() == 2u * 16u);
    for (const auto& row : g)
        CHECK(std::hypot(row[0], row[1]) <= 1.0 - astar + 1e-9);
}

TEST_CASE("spectrum export emits only ones for T = 0 at alpha = 1") {
    // synthetic block-diagonal instance routed through the helmholtz builder
    // with sigma2 = 0
    TempDir dir;
    ProblemSpec spec;
    spec.example = Benchmark::helmholtz;
    spec.m = 3;
    spec.sigma2 = 0.0;
    const auto file = dir.path / "spec.csv";
    export_spectrum(spec, 1.0, file);
    const auto pa = read_spectrum_csv(file, "precondA");
    REQUIRE(pa.size() == 2u * 9u);
    for (const auto& row : pa) {
        CHECK(row[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(row[1] == doctest::Approx(0.0));
    }
}

TEST_CASE("spectrum export keeps preconditioned eigenvalues inside the predicted disk") {
    TempDir dir;
    ProblemSpec spec;
    spec.example = Benchmark::helmholtz;
    spec.m = 16;
    const double alpha = 0.862;
    const auto file = dir.path / "spec.csv";
    export_spectrum(spec, alpha, file);
    const auto pa = read_spectrum_csv(file, "precondA");
    REQUIRE(pa.size() == 2u * 256u);
    const double center = 1.0 / alpha;
    const double radius = (1.0 - alpha) / alpha;
    for (const auto& row : pa)
        CHECK(std::hypot(row[0] - center, row[1]) <= radius + 1e-9);
}

TEST_CASE("spectrum export includes the block-matrix set when W and T commute") {
    TempDir dir;
    ProblemSpec spec;
    spec.example = Benchmark::helmholtz;
    spec.m = 4;
    const auto file = dir.path / "spec.csv";
    export_spectrum(spec, 0.8, file);
    const auto a = read_spectrum_csv(file, "A");
    CHECK(a.size() == 2u * 16u);  // W and T are both shifted stencils: shared eigenbasis

    // the periodic pair does not commute; the A set disappears with a note
    ProblemSpec spec3;
    spec3.example = Benchmark::periodic;
    spec3.m = 4;
    export_spectrum(spec3, 0.8, file);
    CHECK(read_spectrum_csv(file, "A").empty());
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("A set omitted") != std::string::npos);
}

TEST_CASE("spectrum export rejects oversized grids") {
    TempDir dir;
    ProblemSpec spec;
    spec.m = 33;
    CHECK_THROWS_AS(export_spectrum(spec, 0.5, dir.path / "x.csv"), std::invalid_argument);
}
