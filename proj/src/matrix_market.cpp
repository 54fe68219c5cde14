#include "gsor/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gsor {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

void write_matrix_market(const CsrMatrix& A, const std::filesystem::path& path, bool symmetric) {
    if (symmetric && !csr_is_symmetric(A))
        throw std::invalid_argument("write_matrix_market: matrix is not symmetric");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_matrix_market: cannot open " + path.string());
    out << "%%MatrixMarket matrix coordinate real " << (symmetric ? "symmetric" : "general")
        << "\n";
    out << std::setprecision(17);

    int count = 0;
    for (int i = 0; i < A.n_rows; ++i) {
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
            if (!symmetric || A.col_idx[k] <= i) ++count;
        }
    }
    out << A.n_rows << " " << A.n_cols << " " << count << "\n";
    for (int i = 0; i < A.n_rows; ++i) {
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
            if (symmetric && A.col_idx[k] > i) continue;
            out << i + 1 << " " << A.col_idx[k] + 1 << " " << A.values[k] << "\n";
        }
    }
    if (!out) throw std::runtime_error("write_matrix_market: write failed for " + path.string());
}

CsrMatrix read_matrix_market(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_matrix_market: cannot open " + path.string());

    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("read_matrix_market: empty file " + path.string());
    std::istringstream hs(header);
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix" ||
        lower(format) != "coordinate" || lower(field) != "real")
        throw std::runtime_error("read_matrix_market: unsupported header: " + header);
    const std::string sym = lower(symmetry);
    if (sym != "general" && sym != "symmetric")
        throw std::runtime_error("read_matrix_market: unsupported symmetry: " + symmetry);

    std::string line;
    int rows = 0, cols = 0, nnz = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ls(line);
        if (!(ls >> rows >> cols >> nnz))
            throw std::runtime_error("read_matrix_market: bad size line: " + line);
        break;
    }
    if (rows <= 0 || cols <= 0 || nnz < 0)
        throw std::runtime_error("read_matrix_market: bad dimensions in " + path.string());

    std::vector<Triplet> trips;
    trips.reserve(sym == "symmetric" ? 2 * nnz : nnz);
    int seen = 0;
    while (seen < nnz && std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ls(line);
        int i = 0, j = 0;
        double v = 0.0;
        if (!(ls >> i >> j >> v))
            throw std::runtime_error("read_matrix_market: bad entry line: " + line);
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw std::runtime_error("read_matrix_market: index out of range: " + line);
        trips.push_back({i - 1, j - 1, v});
        if (sym == "symmetric" && i != j) trips.push_back({j - 1, i - 1, v});
        ++seen;
    }
    if (seen != nnz)
        throw std::runtime_error("read_matrix_market: expected " + std::to_string(nnz) +
                                 " entries, found " + std::to_string(seen));
    return csr_from_triplets(trips, rows, cols);
}

void write_vector(const DenseVector& v, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_vector: cannot open " + path.string());
    out << std::setprecision(17);
    for (double e : v) out << e << "\n";
    if (!out) throw std::runtime_error("write_vector: write failed for " + path.string());
}

DenseVector read_vector(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_vector: cannot open " + path.string());
    DenseVector v;
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        double e;
        if (ls >> e) {
            v.push_back(e);
            double extra;
            if (ls >> extra)
                throw std::runtime_error("read_vector: more than one value per line: " + line);
        } else {
            std::string rest;
            if (ls.clear(), ls >> rest)
                throw std::runtime_error("read_vector: bad line: " + line);
        }
    }
    return v;
}

}  // namespace gsor
