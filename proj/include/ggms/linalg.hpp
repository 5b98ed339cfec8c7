#pragma once

#include "ggms/rational.hpp"

#include <cassert>
#include <vector>

namespace ggms {

// Dense matrix over Rat.  Deliberately minimal: the weight-space
// computations never exceed a few hundred rows, so simplicity and
// deterministic pivoting matter more than asymptotics.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    void append_row(const std::vector<Rat>& row) {
        assert(cols_ == 0 || int(row.size()) == cols_);
        if (cols_ == 0) cols_ = int(row.size());
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::vector<Rat> row(int i) const {
        return std::vector<Rat>(a_.begin() + size_t(i) * cols_,
                                a_.begin() + size_t(i + 1) * cols_);
    }

    bool is_zero() const {
        for (const Rat& x : a_)
            if (x != 0) return false;
        return true;
    }

    static Mat from_rows(const std::vector<std::vector<Rat>>& rows, int cols);

    Mat mul(const Mat& other) const;
    Mat transpose() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Reduced row echelon form with fixed pivot order (leftmost column,
// first usable row).  All derived bases are therefore deterministic.
struct Rref {
    Mat r;                    // echelonized rows (rank many, zero rows dropped)
    std::vector<int> pivots;  // pivot column per row
    int rank = 0;

    bool is_pivot(int col) const {
        for (int p : pivots)
            if (p == col) return true;
        return false;
    }
};

Rref rref(const Mat& m);

// Basis of the right nullspace {x : m x = 0}, echelonized, one vector per
// free column in column order.
std::vector<std::vector<Rat>> nullspace(const Mat& m);

// Row span membership: is v in the row space described by r?
bool in_row_span(const Rref& r, const std::vector<Rat>& v);

// Coordinates of v in the given (independent) rows; empty optional if v
// is outside their span.
std::vector<Rat> residue(const Rref& r, std::vector<Rat> v);

// Exact rational feasibility LP:  does there exist x >= 0 with A x = b?
// Phase-one simplex with Bland's rule.  Used for point-in-hull tests.
bool lp_feasible(const Mat& a, const std::vector<Rat>& b);

} // namespace ggms
