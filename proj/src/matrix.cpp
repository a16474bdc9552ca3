#include "liecrown/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace liecrown {

Mat Mat::from_rows(const std::vector<Vec>& rs, std::size_t cols) {
    Mat m(rs.size(), cols);
    for (std::size_t r = 0; r < rs.size(); ++r) {
        if (rs[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        m.set_row(r, rs[r]);
    }
    return m;
}

RrefResult rref(const PrimeField& F, const Mat& m) {
    Mat w = m;
    const std::size_t R = w.rows, C = w.cols;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < C && lead < R; ++col) {
        std::size_t sel = lead;
        while (sel < R && w.at(sel, col) == 0) ++sel;
        if (sel == R) continue;
        if (sel != lead)
            for (std::size_t c = col; c < C; ++c) std::swap(w.at(sel, c), w.at(lead, c));
        u32 piv = w.at(lead, col);
        if (piv != 1) row_scale(F, w.row(lead) + col, F.inv(piv), C - col);
        for (std::size_t r = 0; r < R; ++r) {
            if (r == lead) continue;
            u32 f = w.at(r, col);
            if (f) row_axpy(F, w.row(r) + col, w.row(lead) + col, F.neg(f), C - col);
        }
        pivots.push_back(col);
        ++lead;
    }
    RrefResult out;
    out.rank = pivots.size();
    out.pivots = std::move(pivots);
    out.m = Mat(out.rank, C);
    for (std::size_t r = 0; r < out.rank; ++r) out.m.set_row(r, w.row_vec(r));
    return out;
}

Mat mat_mul(const PrimeField& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            u32 c = x.at(i, k);
            if (c) row_axpy(F, out.row(i), y.row(k), c, y.cols);
        }
    return out;
}

Mat mat_add(const PrimeField& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape");
    Mat out = x;
    row_axpy(F, out.a.data(), y.a.data(), 1, out.a.size());
    return out;
}

Mat mat_sub(const PrimeField& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_sub: shape");
    Mat out = x;
    row_axpy(F, out.a.data(), y.a.data(), F.neg(1), out.a.size());
    return out;
}

Mat mat_neg(const PrimeField& F, const Mat& x) {
    Mat out = x;
    row_scale(F, out.a.data(), F.neg(1), out.a.size());
    return out;
}

Mat transpose(const Mat& m) {
    Mat out(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
    return out;
}

std::size_t rank_of(const PrimeField& F, const Mat& m) { return rref(F, m).rank; }

Vec vec_mat(const PrimeField& F, const Vec& v, const Mat& m) {
    if (v.size() != m.rows) throw std::invalid_argument("vec_mat: shape");
    Vec out(m.cols, 0);
    for (std::size_t k = 0; k < m.rows; ++k)
        if (v[k]) row_axpy(F, out.data(), m.row(k), v[k], m.cols);
    return out;
}

Vec mat_vec(const PrimeField& F, const Mat& m, const Vec& v) {
    if (v.size() != m.cols) throw std::invalid_argument("mat_vec: shape");
    Vec out(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        u64 acc = 0;
        for (std::size_t c = 0; c < m.cols; ++c) acc += u64(m.at(r, c)) * v[c];
        out[r] = F.reduce(acc);
    }
    return out;
}

Vec vec_add(const PrimeField& F, const Vec& x, const Vec& y) {
    Vec out = x;
    row_axpy(F, out.data(), y.data(), 1, out.size());
    return out;
}

Vec vec_sub(const PrimeField& F, const Vec& x, const Vec& y) {
    Vec out = x;
    row_axpy(F, out.data(), y.data(), F.neg(1), out.size());
    return out;
}

Vec vec_scale(const PrimeField& F, u32 c, const Vec& x) {
    Vec out = x;
    row_scale(F, out.data(), c, out.size());
    return out;
}

bool is_zero(const Vec& v) {
    for (u32 x : v)
        if (x) return false;
    return true;
}

std::optional<Vec> solve_left(const PrimeField& F, const Mat& A, const Vec& b) {
    // x * A = b  ⇔  A^T x^T = b^T; row-reduce [A^T | b^T].
    if (b.size() != A.cols) throw std::invalid_argument("solve_left: shape");
    Mat aug(A.cols, A.rows + 1);
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t c = 0; c < A.cols; ++c) aug.at(c, r) = A.at(r, c);
    for (std::size_t c = 0; c < A.cols; ++c) aug.at(c, A.rows) = b[c];
    RrefResult rr = rref(F, aug);
    Vec x(A.rows, 0);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] == A.rows) return std::nullopt;  // inconsistent
        x[rr.pivots[r]] = rr.m.at(r, A.rows);
    }
    return x;
}

Mat right_nullspace(const PrimeField& F, const Mat& A) {
    RrefResult rr = rref(F, A);
    const std::size_t n = A.cols;
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    Mat out(0, n);
    out.a.reserve((n - rr.rank) * n);
    for (std::size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(n, 0);
        v[free_c] = 1;
        for (std::size_t r = 0; r < rr.rank; ++r)
            v[rr.pivots[r]] = F.neg(rr.m.at(r, free_c));
        out.append_row(v);
    }
    return out;
}

Mat left_nullspace(const PrimeField& F, const Mat& A) {
    return right_nullspace(F, transpose(A));
}

std::optional<Mat> inverse(const PrimeField& F, const Mat& m) {
    if (m.rows != m.cols) return std::nullopt;
    const std::size_t n = m.rows;
    Mat aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    RrefResult rr = rref(F, aug);
    if (rr.rank != n || rr.pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.m.at(r, n + c);
    return inv;
}

}  // namespace liecrown
