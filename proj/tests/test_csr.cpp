#include <doctest.h>

#include "gsor/csr.hpp"
#include "oracle.hpp"

using namespace gsor;

namespace {

CsrMatrix tridiag3() {
    std::vector<Triplet> t = {{0, 0, 2},  {0, 1, -1}, {1, 0, -1}, {1, 1, 2},
                              {1, 2, -1}, {2, 1, -1}, {2, 2, 2}};
    return csr_from_triplets(t, 3, 3);
}

}  // namespace

TEST_CASE("csr_from_triplets builds the 2x2 tridiagonal matrix") {
    std::vector<Triplet> t = {{0, 0, 2}, {0, 1, -1}, {1, 0, -1}, {1, 1, 2}};
    const CsrMatrix A = csr_from_triplets(t, 2, 2);
    CHECK(A.n_rows == 2);
    CHECK(A.nnz() == 4);
    CHECK(A.row_ptr == std::vector<int>{0, 2, 4});
    CHECK(A.col_idx == std::vector<int>{0, 1, 0, 1});
    CHECK(A.values == std::vector<double>{2, -1, -1, 2});
}

TEST_CASE("csr_from_triplets sums duplicates") {
    std::vector<Triplet> t = {{0, 0, 1}, {0, 0, 1}};
    const CsrMatrix A = csr_from_triplets(t, 1, 1);
    CHECK(A.nnz() == 1);
    CHECK(A.values[0] == 2.0);
}

TEST_CASE("csr_from_triplets accepts an empty triplet list") {
    const CsrMatrix A = csr_from_triplets(std::span<const Triplet>{}, 3, 3);
    CHECK(A.n_rows == 3);
    CHECK(A.n_cols == 3);
    CHECK(A.nnz() == 0);
    CHECK(A.row_ptr == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("csr_from_triplets rejects out-of-range indices") {
    std::vector<Triplet> t = {{0, 3, 1.0}};
    CHECK_THROWS_AS(csr_from_triplets(t, 2, 2), std::invalid_argument);
    std::vector<Triplet> t2 = {{-1, 0, 1.0}};
    CHECK_THROWS_AS(csr_from_triplets(t2, 2, 2), std::invalid_argument);
}

TEST_CASE("csr_from_triplets sorts within rows") {
    std::vector<Triplet> t = {{0, 2, 3.0}, {0, 0, 1.0}, {0, 1, 2.0}};
    const CsrMatrix A = csr_from_triplets(t, 1, 3);
    CHECK(A.col_idx == std::vector<int>{0, 1, 2});
    CHECK(A.values == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("spmv identity") {
    const CsrMatrix I = csr_identity(3);
    const DenseVector x = {1, 2, 3};
    CHECK(spmv(I, x) == x);
}

TEST_CASE("spmv tridiagonal row sums") {
    const DenseVector y = spmv(tridiag3(), {1, 1, 1});
    CHECK(y == DenseVector{1, 0, 1});
}

TEST_CASE("spmv matches the dense oracle on a random 5x5 matrix") {
    std::mt19937 rng(7);
    const oracle::DenseMatrix D = oracle::random_dense(5, rng);
    const CsrMatrix A = oracle::to_csr(D);
    const DenseVector x = oracle::random_vector(5, rng);
    const DenseVector ref = oracle::matvec(D, x);
    const DenseVector got = spmv(A, x);
    for (int i = 0; i < 5; ++i) CHECK(got[i] == doctest::Approx(ref[i]).epsilon(1e-14));
}

TEST_CASE("spmv rejects a dimension mismatch") {
    CHECK_THROWS_AS(spmv(csr_identity(3), DenseVector{1, 2}), std::invalid_argument);
}

TEST_CASE("spmv is linear") {
    std::mt19937 rng(11);
    const CsrMatrix A = oracle::to_csr(oracle::random_dense(6, rng));
    const DenseVector x = oracle::random_vector(6, rng);
    const DenseVector y = oracle::random_vector(6, rng);
    const double a = 0.37, b = -1.91;
    const DenseVector lhs = spmv(A, vec::combine(a, x, b, y));
    const DenseVector rhs = vec::combine(a, spmv(A, x), b, spmv(A, y));
    for (int i = 0; i < 6; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-13));
}

TEST_CASE("kron_sum of a 1x1 matrix doubles it") {
    std::vector<Triplet> t = {{0, 0, 2.0}};
    const CsrMatrix K = kron_sum(csr_from_triplets(t, 1, 1));
    CHECK(K.n_rows == 1);
    CHECK(K.values == std::vector<double>{4.0});
}

TEST_CASE("kron_sum of the 2x2 tridiagonal matrix") {
    std::vector<Triplet> t = {{0, 0, 2}, {0, 1, -1}, {1, 0, -1}, {1, 1, 2}};
    const CsrMatrix K = kron_sum(csr_from_triplets(t, 2, 2));
    const oracle::DenseMatrix D = oracle::from_csr(K);
    for (int i = 0; i < 4; ++i) CHECK(D.at(i, i) == 4.0);
    const std::vector<std::pair<int, int>> off = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    for (auto [i, j] : off) {
        CHECK(D.at(i, j) == -1.0);
        CHECK(D.at(j, i) == -1.0);
    }
    CHECK(D.at(0, 3) == 0.0);
    CHECK(D.at(1, 2) == 0.0);
}

TEST_CASE("kron_sum matches the dense Kronecker oracle for all m <= 6") {
    std::mt19937 rng(23);
    for (int m = 1; m <= 6; ++m) {
        const oracle::DenseMatrix V = oracle::random_symmetric(m, rng);
        const oracle::DenseMatrix I = oracle::identity(m);
        oracle::DenseMatrix ref = oracle::kron(I, V);
        const oracle::DenseMatrix KI = oracle::kron(V, I);
        for (std::size_t k = 0; k < ref.data.size(); ++k) ref.data[k] += KI.data[k];
        const CsrMatrix K = kron_sum(oracle::to_csr(V));
        CHECK(oracle::max_abs_diff(oracle::from_csr(K), ref) == 0.0);
    }
}

TEST_CASE("kron_sum rejects a rectangular input") {
    std::vector<Triplet> t = {{0, 0, 1.0}};
    CHECK_THROWS_AS(kron_sum(csr_from_triplets(t, 1, 2)), std::invalid_argument);
}

TEST_CASE("csr_add merges patterns") {
    const CsrMatrix A = tridiag3();
    const CsrMatrix C = csr_add(2.0, A, -1.0, csr_identity(3));
    const oracle::DenseMatrix D = oracle::from_csr(C);
    CHECK(D.at(0, 0) == 3.0);
    CHECK(D.at(0, 1) == -2.0);
    CHECK(D.at(1, 1) == 3.0);
}

TEST_CASE("csr_shift adds to the diagonal") {
    const CsrMatrix A = csr_shift(tridiag3(), 5.0);
    const oracle::DenseMatrix D = oracle::from_csr(A);
    for (int i = 0; i < 3; ++i) CHECK(D.at(i, i) == 7.0);
}

TEST_CASE("csr_transpose and symmetry checks") {
    std::vector<Triplet> t = {{0, 1, 3.0}, {1, 0, 3.0}, {0, 0, 1.0}};
    const CsrMatrix A = csr_from_triplets(t, 2, 2);
    CHECK(csr_is_symmetric(A));
    std::vector<Triplet> t2 = {{0, 1, 3.0}, {1, 0, 2.0}};
    CHECK_FALSE(csr_is_symmetric(csr_from_triplets(t2, 2, 2)));
    const CsrMatrix At = csr_transpose(csr_from_triplets(t2, 2, 2));
    CHECK(oracle::from_csr(At).at(1, 0) == 3.0);
    CHECK(oracle::from_csr(At).at(0, 1) == 2.0);
}

TEST_CASE("csr_is_symmetric tolerates rounded symmetric input") {
    std::vector<Triplet> t = {{0, 1, 1.0}, {1, 0, 1.0 + 1e-15}, {0, 0, 1.0}, {1, 1, 1.0}};
    CHECK(csr_is_symmetric(csr_from_triplets(t, 2, 2)));
}
