#include "ggms/linalg.hpp"

#include <stdexcept>

namespace ggms {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty rational literal");
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::runtime_error("bad rational literal: " + s);
    }
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows, int cols) {
    Mat m(0, cols);
    m.cols_ = cols;
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Mat Mat::mul(const Mat& other) const {
    assert(cols_ == other.rows_);
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rat& y = other(k, j);
                if (y != 0) out(i, j) += x * y;
            }
        }
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Rref rref(const Mat& m) {
    Mat w = m;
    const int nr = w.rows(), nc = w.cols();
    Rref out;
    out.r = Mat(0, nc);
    int row = 0;
    std::vector<int> pivot_of_row;
    for (int col = 0; col < nc && row < nr; ++col) {
        int sel = -1;
        for (int i = row; i < nr; ++i)
            if (w(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < nc; ++j) std::swap(w(sel, j), w(row, j));
        Rat inv = Rat(1) / w(row, col);
        for (int j = col; j < nc; ++j) w(row, j) *= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == row || w(i, col) == 0) continue;
            Rat f = w(i, col);
            for (int j = col; j < nc; ++j) w(i, j) -= f * w(row, j);
        }
        pivot_of_row.push_back(col);
        ++row;
    }
    out.rank = row;
    out.pivots = pivot_of_row;
    for (int i = 0; i < row; ++i) out.r.append_row(w.row(i));
    return out;
}

std::vector<std::vector<Rat>> nullspace(const Mat& m) {
    Rref r = rref(m);
    const int nc = m.cols();
    std::vector<bool> is_piv(nc, false);
    for (int p : r.pivots) is_piv[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < nc; ++free) {
        if (is_piv[free]) continue;
        std::vector<Rat> v(nc, Rat(0));
        v[free] = 1;
        for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> residue(const Rref& r, std::vector<Rat> v) {
    for (int i = 0; i < r.rank; ++i) {
        const Rat& c = v[r.pivots[i]];
        if (c == 0) continue;
        Rat f = c;
        for (int j = 0; j < int(v.size()); ++j) v[j] -= f * r.r(i, j);
    }
    return v;
}

bool in_row_span(const Rref& r, const std::vector<Rat>& v) {
    std::vector<Rat> res = residue(r, v);
    for (const Rat& x : res)
        if (x != 0) return false;
    return true;
}

bool lp_feasible(const Mat& a, const std::vector<Rat>& b) {
    // Phase one: minimize the sum of artificial variables for A x = b,
    // x >= 0.  Rows with negative b are flipped first.
    const int m = a.rows(), n = a.cols();
    Mat t(m + 1, n + m + 1); // tableau; last column = rhs
    for (int i = 0; i < m; ++i) {
        Rat s = (b[i] < 0) ? Rat(-1) : Rat(1);
        for (int j = 0; j < n; ++j) t(i, j) = s * a(i, j);
        t(i, n + i) = 1;
        t(i, n + m) = s * b[i];
    }
    // objective row: sum of artificial rows (we minimize sum of artificials)
    for (int j = 0; j <= n + m; ++j) {
        Rat s(0);
        for (int i = 0; i < m; ++i) s += t(i, j);
        t(m, j) = s;
    }
    for (int i = 0; i < m; ++i) t(m, n + i) = 0;

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        int col = -1; // Bland: smallest index with positive reduced cost
        for (int j = 0; j < n + m; ++j)
            if (t(m, j) > 0) { col = j; break; }
        if (col < 0) break;
        int row = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t(i, col) <= 0) continue;
            Rat ratio = t(i, n + m) / t(i, col);
            if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
                best = ratio;
                row = i;
            }
        }
        if (row < 0) break; // unbounded cannot happen in phase one
        Rat inv = Rat(1) / t(row, col);
        for (int j = 0; j <= n + m; ++j) t(row, j) *= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == row || t(i, col) == 0) continue;
            Rat f = t(i, col);
            for (int j = 0; j <= n + m; ++j) t(i, j) -= f * t(row, j);
        }
        basis[row] = col;
    }
    return t(m, n + m) == 0;
}

} // namespace ggms
