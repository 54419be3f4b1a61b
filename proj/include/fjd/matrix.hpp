#ifndef FJD_MATRIX_HPP
#define FJD_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "fjd/numeric.hpp"

namespace fjd {

// Dense integer matrix, sized for lattice ranks (n <= ~10); exact arithmetic.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    // Exact determinant (fraction-free Bareiss elimination).
    Int det() const;
    // k-th leading principal minor, 1 <= k <= n.
    Int leading_minor(int k) const;
    // adj(A) with A * adj(A) = det(A) * I.
    IntMat adjugate() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += f * row j
    void add_row(int i, int j, const Int& f);
    void add_col(int i, int j, const Int& f);
    void negate_row(int i);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

} // namespace fjd

#endif
