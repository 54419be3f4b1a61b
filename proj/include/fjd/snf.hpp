#ifndef FJD_SNF_HPP
#define FJD_SNF_HPP

#include <vector>

#include "fjd/matrix.hpp"

namespace fjd {

// P * S * Q = diag(a_1, ..., a_n) with P, Q unimodular and a_1 | a_2 | ... | a_n,
// all a_i > 0 (S square nonsingular).
struct SNFDecomposition {
    IntMat p_mat;
    IntMat q_mat;
    std::vector<Int> diag;
};

SNFDecomposition smith_normal_form(const IntMat& s);

} // namespace fjd

#endif
