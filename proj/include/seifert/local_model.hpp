#pragma once

#include <cstddef>
#include <vector>

#include "seifert/exact/abelian.hpp"

namespace seifert::local_model {

using exact::FpAbelianGroup;
using exact::Int;

// Cyclic quotient chart A^n / mu_M(a_1, ..., a_n). Weights are stored as
// canonical residues in [0, M); the defining assumption is
// gcd(a_1, ..., a_n, M) = 1. Base field of characteristic 0 throughout.
struct CyclicChart {
    Int order;                 // M >= 1
    std::vector<Int> weights;  // n >= 1 residues mod M

    CyclicChart(Int order, std::vector<Int> weights);
    std::size_t dim() const { return weights.size(); }
    bool operator==(const CyclicChart&) const = default;
};

// Quasi-reflection-free form of a chart: mu_C (C = prod c_i) acts by
// coordinate-wise reflections, and the chart is, as a variety,
// A^n / mu_{M/C}(d_1, ..., d_n).
struct ReducedChart {
    CyclicChart source;
    std::vector<Int> reflection_orders;  // c_i = gcd of the other weights and M
    Int reflection_product;             // C = prod c_i
    std::vector<Int> reduced_weights;   // d_i = a_i c_i / C, in [0, reduced_order * c_i)
    Int reduced_order;                  // M / C

    std::size_t dim() const { return source.dim(); }
    bool operator==(const ReducedChart&) const = default;
};

ReducedChart reduce_chart(const CyclicChart& chart);

// Assemble a reduced chart from its components, synthesising the source
// presentation. Throws InvalidLocalData when the components do not form a
// valid chart (reflection orders not pairwise coprime, or the
// reconstructed weights violate gcd(a, M) = 1).
ReducedChart reduced_chart_from_parts(const Int& reduced_order, std::vector<Int> reflection_orders,
                                      std::vector<Int> reduced_weights);

// The Seifert bundle G_m x A^n / mu_M(r, a_1, ..., a_n) over the chart.
struct QuotientPresentation {
    Int fiber_weight;  // r, a residue mod chart.order (0 allowed)
    CyclicChart chart;

    QuotientPresentation(Int r, CyclicChart c);
    bool operator==(const QuotientPresentation&) const = default;
};

// Seifert data over a reduced chart: the bundle Y(O(l), sum (b_i/c_i) D_i)
// with D_i the coordinate divisors and c_i the chart's reflection orders.
struct LocalSeifertData {
    ReducedChart chart;
    Int bundle_class;                   // l, a residue mod reduced_order
    std::vector<Int> branch_numerators; // b_i with 0 <= b_i < c_i

    LocalSeifertData(ReducedChart chart, Int l, std::vector<Int> b);
    bool operator==(const LocalSeifertData&) const = default;
};

// Unique solution (l, b) of r = l*C + sum a_i b_i (mod M) with
// 0 <= b_i < c_i; l is reduced mod M/C.
struct ResidueDecomposition {
    Int l;
    std::vector<Int> b;
};
ResidueDecomposition decompose_residue(const ReducedChart& chart, const Int& r);

LocalSeifertData to_seifert(const QuotientPresentation& qp);
QuotientPresentation to_quotient(const LocalSeifertData& lsd);

// gcd(r, M) = 1, or r = 0 over a chart whose reduction is smooth
bool quotient_is_smooth(const QuotientPresentation& qp);

// Pairwise coprime reflection orders and the scaled bundle class
// l*C + sum_i (C/c_i) b_i d_i coprime to the reduced order. Requires
// gcd(b_i, c_i) = 1 for every i; throws HypothesisNotMet otherwise.
bool seifert_is_smooth(const LocalSeifertData& lsd);

// Same predicate decided through the class group generator test; used to
// cross-check the gcd route.
bool seifert_is_smooth_by_generator(const LocalSeifertData& lsd);

// Cl of the chart: cyclic of the reduced order.
FpAbelianGroup local_class_group(const ReducedChart& chart);

// Class of the j-th coordinate divisor: d_j mod reduced order.
Int local_divisor_class(const ReducedChart& chart, std::size_t j);

// Class of the divisor sum_j v_j D_j: sum v_j d_j mod reduced order.
Int local_chern(const ReducedChart& chart, const std::vector<Int>& coeffs);

// One branch fraction b/c over a local divisor of the given class. The
// engine behind fiber multiplicities, shared with the global module where
// the branch denominators are detached from the chart's own reduction.
struct LocalBranch {
    Int b;
    Int c;              // c >= 1
    Int divisor_class;  // residue mod the reduced order
};

// Smallest M >= 1 with c | M for every branch and
// M*l + sum (M b/c) * divisor_class = 0 (mod reduced_order).
Int local_multiplicity(const Int& reduced_order, const Int& l,
                       const std::vector<LocalBranch>& branches);

// local_multiplicity applied to the data's own chart.
Int multiplicity_at_center(const LocalSeifertData& lsd);

// Test-only equivalence of charts under weight rescaling by units mod M.
bool charts_equivalent(const CyclicChart& a, const CyclicChart& b);

}  // namespace seifert::local_model
