#include "hadstar/matrix.hpp"

namespace hadstar {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw InternalError("ragged matrix initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rat> Mat::row(int r) const {
    std::vector<Rat> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("matrix product shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return out;
}

Mat rref(Mat m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int pivot = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int c = 0; c < m.cols(); ++c) swap(m.at(pivot, c), m.at(lead, c));
        Rat inv = m.at(lead, col);
        for (int c = 0; c < m.cols(); ++c) m.at(lead, c) /= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(lead, c);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return m;
}

int rank(const Mat& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

std::vector<std::vector<Rat>> kernel_basis(const Mat& m) {
    std::vector<int> pivots;
    Mat r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free] = 1;
        // Pivot row i has its 1 in column pivots[i]; solve for that entry.
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat det_bareiss(const Mat& m) {
    if (m.rows() != m.cols()) throw InternalError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    // Clear denominators row by row; det(original) = det(integer matrix) / scale.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rat x = m.at(i, j) * l;
            a[i][j] = x.get_num();
        }
        scale *= l;
    }

    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    Rat det(sign * a[n - 1][n - 1], scale);
    det.canonicalize();
    return det;
}

Mat adjugate(const Mat& m) {
    if (m.rows() != m.cols()) throw InternalError("adjugate of non-square matrix");
    const int n = m.rows();
    if (n == 0) return m;
    if (n == 1) {
        Mat one(1, 1);
        one.at(0, 0) = 1;
        return one;
    }
    Mat adj(n, n);
    Mat minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = m.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            Rat cof = det_bareiss(minor);
            if ((i + j) % 2) cof = -cof;
            adj.at(j, i) = cof;  // transposed cofactor
        }

    // Cheap self-check of the defining identity at these sizes.
    Rat d = det_bareiss(m);
    Mat prod = m * adj;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (prod.at(i, j) != (i == j ? d : Rat(0)))
                throw InternalError("adjugate identity check failed");
    return adj;
}

}  // namespace hadstar
