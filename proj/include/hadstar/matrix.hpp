#pragma once

#include <initializer_list>
#include <vector>

#include "hadstar/rational.hpp"

namespace hadstar {

/// Dense matrix over the exact rationals, row-major.  Small sizes only (the
/// toolkit never goes past a few dozen rows), so all algorithms favour
/// exactness and determinism over asymptotics.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Rat> row(int r) const;
    Mat transposed() const;
    Mat operator*(const Mat& rhs) const;
    bool operator==(const Mat& rhs) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Reduced row echelon form.  Pivot choice is the first row with a nonzero
/// entry in the current column, so the result is deterministic.  If `pivots`
/// is non-null it receives the pivot column indices in order.
Mat rref(Mat m, std::vector<int>* pivots = nullptr);

int rank(const Mat& m);

/// Basis of the right kernel, one vector per RREF free column, each in
/// canonical primitive-integer form (content 1, first nonzero entry
/// positive), ordered by free column index.
std::vector<std::vector<Rat>> kernel_basis(const Mat& m);

/// Determinant of a square matrix by single-step fraction-free elimination:
/// rows are first scaled to integers (the scales are divided back out at the
/// end), then every intermediate division is exact over the integers.
Rat det_bareiss(const Mat& m);

/// Classical adjugate via signed cofactors; satisfies
/// m * adjugate(m) = det(m) * I, which the implementation re-checks.
Mat adjugate(const Mat& m);

}  // namespace hadstar
