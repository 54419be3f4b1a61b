#include "fjd/matrix.hpp"

#include <stdexcept>

#include "fjd/errors.hpp"

namespace fjd {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionMismatch("IntMat: ragged initializer");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("IntMat::operator*: inner dimensions differ");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

std::vector<Int> IntMat::operator*(const std::vector<Int>& v) const {
    if (cols_ != static_cast<int>(v.size()))
        throw DimensionMismatch("IntMat::operator*: vector length differs from columns");
    std::vector<Int> r(static_cast<size_t>(rows_), Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
    return r;
}

bool IntMat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Int IntMat::leading_minor(int k) const {
    if (!is_square() || k < 1 || k > rows_) throw DimensionMismatch("leading_minor: bad size");
    // Bareiss on the top-left k x k block.
    IntMat m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
    Int prev(1);
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (m(p, p) == 0) {
            int piv = -1;
            for (int i = p + 1; i < k; ++i)
                if (m(i, p) != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            m.swap_rows(p, piv);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j) {
                Int t = m(i, j) * m(p, p) - m(i, p) * m(p, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(p, p);
    }
    return sign > 0 ? m(k - 1, k - 1) : Int(-m(k - 1, k - 1));
}

Int IntMat::det() const {
    if (!is_square()) throw DimensionMismatch("det: not square");
    if (rows_ == 0) return Int(1);
    return leading_minor(rows_);
}

IntMat IntMat::adjugate() const {
    if (!is_square()) throw DimensionMismatch("adjugate: not square");
    const int n = rows_;
    IntMat adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    IntMat minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int mi = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int mj = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mi, mj) = (*this)(r, c);
                    ++mj;
                }
                ++mi;
            }
            Int cof = minor.det();
            if ((i + j) % 2 != 0) cof = -cof;
            adj(j, i) = cof;  // transposed cofactor
        }
    return adj;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::add_row(int i, int j, const Int& f) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
}

void IntMat::add_col(int i, int j, const Int& f) {
    for (int r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

} // namespace fjd
