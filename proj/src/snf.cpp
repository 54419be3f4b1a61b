#include "fjd/snf.hpp"

#include <cstdlib>
#include <stdexcept>

#include "fjd/errors.hpp"

namespace fjd {

namespace {

bool is_isolated(const IntMat& m, int s) {
    for (int i = s + 1; i < m.rows(); ++i)
        if (m(i, s) != 0) return false;
    for (int j = s + 1; j < m.cols(); ++j)
        if (m(s, j) != 0) return false;
    return true;
}

// Location of the minimal nonzero |entry| in the trailing block m(s:, s:).
bool locate_min_abs(const IntMat& m, int s, int& irow, int& icol) {
    bool found = false;
    Int best;
    for (int i = s; i < m.rows(); ++i)
        for (int j = s; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int v = abs(m(i, j));
            if (!found || v < best) {
                best = v;
                irow = i;
                icol = j;
                found = true;
            }
        }
    return found;
}

bool pivot_divides_block(const IntMat& m, int s, int& irow, int& icol) {
    for (int i = s + 1; i < m.rows(); ++i)
        for (int j = s + 1; j < m.cols(); ++j)
            if (!divides(m(s, s), m(i, j))) {
                irow = i;
                icol = j;
                return false;
            }
    return true;
}

} // namespace

SNFDecomposition smith_normal_form(const IntMat& s) {
    if (!s.is_square()) throw DimensionMismatch("smith_normal_form: matrix not square");
    const int n = s.rows();
    if (s.det() == 0) throw Singular("smith_normal_form: det = 0");

    IntMat d = s;
    IntMat p = IntMat::identity(n);  // row ops
    IntMat q = IntMat::identity(n);  // col ops

    for (int step = 0; step < n; ++step) {
        while (true) {
            if (is_isolated(d, step)) {
                int jr = 0, jc = 0;
                if (pivot_divides_block(d, step, jr, jc)) break;
                // Pull a row with a non-multiple into the pivot row and redo the step.
                d.add_row(step, jr, Int(1));
                p.add_row(step, jr, Int(1));
            }
            int ir = step, ic = step;
            locate_min_abs(d, step, ir, ic);
            d.swap_rows(step, ir);
            p.swap_rows(step, ir);
            d.swap_cols(step, ic);
            q.swap_cols(step, ic);

            for (int i = step + 1; i < n; ++i) {
                if (d(i, step) == 0) continue;
                Int f = d(i, step) / d(step, step);
                d.add_row(i, step, -f);
                p.add_row(i, step, -f);
            }
            for (int j = step + 1; j < n; ++j) {
                if (d(step, j) == 0) continue;
                Int f = d(step, j) / d(step, step);
                d.add_col(j, step, -f);
                q.add_col(j, step, -f);
            }
        }
        if (d(step, step) < 0) {
            d.negate_row(step);
            p.negate_row(step);
        }
    }

    SNFDecomposition out;
    out.p_mat = p;
    out.q_mat = q;
    out.diag.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.diag.push_back(d(i, i));

    // P S Q = diag, |det P| = |det Q| = 1, divisibility chain.
    IntMat check = p * s * q;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (check(i, j) != (i == j ? out.diag[static_cast<size_t>(i)] : Int(0)))
                throw std::logic_error("smith_normal_form: decomposition check failed");
    if (abs(p.det()) != 1 || abs(q.det()) != 1)
        throw std::logic_error("smith_normal_form: transform not unimodular");
    for (int i = 0; i + 1 < n; ++i)
        if (!divides(out.diag[static_cast<size_t>(i)], out.diag[static_cast<size_t>(i) + 1]))
            throw std::logic_error("smith_normal_form: divisibility chain broken");
    return out;
}

} // namespace fjd
