// Dense matrices over GF(p): row reduction, solving, nullspaces, products.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liecrown/gfp.hpp"

namespace liecrown {

using Vec = std::vector<u32>;

struct Mat {
    std::size_t rows = 0, cols = 0;
    Vec a;  // row-major, entries in [0, p)

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    u32& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    u32 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    u32* row(std::size_t r) { return a.data() + r * cols; }
    const u32* row(std::size_t r) const { return a.data() + r * cols; }

    Vec row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols); }
    void set_row(std::size_t r, const Vec& v) {
        for (std::size_t c = 0; c < cols; ++c) at(r, c) = v[c];
    }
    void append_row(const Vec& v) {
        a.insert(a.end(), v.begin(), v.end());
        ++rows;
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rs, std::size_t cols);

    bool operator==(const Mat& o) const = default;
};

struct RrefResult {
    Mat m;                         // RREF with zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per row, strictly increasing
};

// Unique reduced row-echelon form of the row space of m.
RrefResult rref(const PrimeField& F, const Mat& m);

Mat mat_mul(const PrimeField& F, const Mat& x, const Mat& y);
Mat mat_add(const PrimeField& F, const Mat& x, const Mat& y);
Mat mat_sub(const PrimeField& F, const Mat& x, const Mat& y);
Mat mat_neg(const PrimeField& F, const Mat& x);
Mat transpose(const Mat& m);
std::size_t rank_of(const PrimeField& F, const Mat& m);

// v * m (row vector times matrix).
Vec vec_mat(const PrimeField& F, const Vec& v, const Mat& m);
// m * v^T (matrix times column vector).
Vec mat_vec(const PrimeField& F, const Mat& m, const Vec& v);

Vec vec_add(const PrimeField& F, const Vec& x, const Vec& y);
Vec vec_sub(const PrimeField& F, const Vec& x, const Vec& y);
Vec vec_scale(const PrimeField& F, u32 c, const Vec& x);
bool is_zero(const Vec& v);

// One solution x of x * A = b (row convention), if any.
std::optional<Vec> solve_left(const PrimeField& F, const Mat& A, const Vec& b);
// Basis (as rows) of { x : x * A = 0 }.
Mat left_nullspace(const PrimeField& F, const Mat& A);
// Basis (as rows) of { x : A * x^T = 0 }.
Mat right_nullspace(const PrimeField& F, const Mat& A);
// Inverse of a square invertible matrix, or nullopt.
std::optional<Mat> inverse(const PrimeField& F, const Mat& m);

}  // namespace liecrown
