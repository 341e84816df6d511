#include "seifert/exact/smith.hpp"

#include <cstdlib>

namespace seifert::exact {

namespace {

// Elementary operations applied to S are mirrored on U/V and inverted on
// U_inv/V_inv, keeping U*A*V = S, U*U_inv = I and V*V_inv = I throughout.
struct Worker {
    IntMatrix S, U, V, U_inv, V_inv;

    explicit Worker(const IntMatrix& a)
        : S(a),
          U(IntMatrix::identity(a.rows())),
          V(IntMatrix::identity(a.cols())),
          U_inv(IntMatrix::identity(a.rows())),
          V_inv(IntMatrix::identity(a.cols())) {}

    void row_swap(std::size_t i, std::size_t j) {
        S.swap_rows(i, j);
        U.swap_rows(i, j);
        U_inv.swap_cols(i, j);
    }
    void col_swap(std::size_t i, std::size_t j) {
        S.swap_cols(i, j);
        V.swap_cols(i, j);
        V_inv.swap_rows(i, j);
    }
    // row[i] += q * row[t]
    void row_add(std::size_t i, std::size_t t, const Int& q) {
        S.add_row_multiple(i, t, q);
        U.add_row_multiple(i, t, q);
        U_inv.add_col_multiple(t, i, -q);
    }
    // col[j] += q * col[t]
    void col_add(std::size_t j, std::size_t t, const Int& q) {
        S.add_col_multiple(j, t, q);
        V.add_col_multiple(j, t, q);
        V_inv.add_row_multiple(t, j, -q);
    }
    void row_negate(std::size_t i) {
        S.negate_row(i);
        U.negate_row(i);
        U_inv.negate_col(i);
    }
};

// position of a smallest-absolute-value nonzero entry of S[t.., t..]
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Int& x = s(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                best = ax;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    Worker w(a);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t dim = m < n ? m : n;

    for (std::size_t t = 0; t < dim; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(w.S, t, pi, pj)) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            // reduce column t by the pivot, re-pivoting on any remainder
            bool column_clear = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.S(i, t) == 0) continue;
                Int q = floor_div(w.S(i, t), w.S(t, t));
                w.row_add(i, t, -q);
                if (w.S(i, t) != 0) {
                    w.row_swap(t, i);  // strictly smaller remainder becomes pivot
                    column_clear = false;
                }
            }
            if (!column_clear) continue;

            bool row_clear = true;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.S(t, j) == 0) continue;
                Int q = floor_div(w.S(t, j), w.S(t, t));
                w.col_add(j, t, -q);
                if (w.S(t, j) != 0) {
                    w.col_swap(t, j);
                    row_clear = false;
                }
            }
            if (!row_clear) continue;  // column may have been refilled

            // column and row at t are clear; enforce pivot | remaining block
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j) {
                    if (mod_floor(w.S(i, j), w.S(t, t)) != 0) {
                        w.row_add(t, i, 1);  // pull offending row up, go again
                        divides_all = false;
                    }
                }
            if (divides_all) break;
        }

        if (w.S(t, t) < 0) w.row_negate(t);
    }

    SmithDecomposition out;
    out.diagonal.reserve(dim);
    for (std::size_t t = 0; t < dim; ++t) {
        out.diagonal.push_back(w.S(t, t));
        if (w.S(t, t) != 0) {
            ++out.rank;
            out.invariant_factors.push_back(w.S(t, t));
        }
    }
    out.U = std::move(w.U);
    out.S = std::move(w.S);
    out.V = std::move(w.V);
    out.U_inv = std::move(w.U_inv);
    out.V_inv = std::move(w.V_inv);
    return out;
}

}  // namespace seifert::exact
