#pragma once

#include <filesystem>

#include "gsor/csr.hpp"

namespace gsor {

/// Write a matrix in Matrix Market coordinate format (real). With
/// `symmetric` set, only the lower triangle is stored and the header declares
/// symmetric storage; the matrix must actually be symmetric.
void write_matrix_market(const CsrMatrix& A, const std::filesystem::path& path,
                         bool symmetric = false);

/// Read a Matrix Market coordinate file (real, general or symmetric).
/// Symmetric storage is expanded to the full pattern. Malformed input throws
/// std::runtime_error.
CsrMatrix read_matrix_market(const std::filesystem::path& path);

/// Plain-text vector files, one value per line. '#' starts a comment.
void write_vector(const DenseVector& v, const std::filesystem::path& path);
DenseVector read_vector(const std::filesystem::path& path);

}  // namespace gsor
