#pragma once

#include <cstddef>
#include <vector>

#include "seifert/exact/int_matrix.hpp"

namespace seifert::exact {

// U * A * V = S with U, V unimodular and S diagonal, each diagonal entry
// dividing the next. U_inv and V_inv are maintained alongside so that
// preimages under the coordinate change are available without a solve.
struct SmithDecomposition {
    IntMatrix U;      // rows x rows
    IntMatrix S;      // rows x cols, zero off the main diagonal
    IntMatrix V;      // cols x cols
    IntMatrix U_inv;
    IntMatrix V_inv;
    std::vector<Int> diagonal;  // min(rows, cols) entries, d1 | d2 | ..., >= 0
    std::size_t rank = 0;       // number of nonzero diagonal entries
    // nonzero diagonal entries in divisibility order (unit factors included)
    std::vector<Int> invariant_factors;
};

// Smallest-nonzero-absolute-value pivoting; S is canonical, U and V are not.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace seifert::exact
