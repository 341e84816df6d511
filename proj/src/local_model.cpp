#include "seifert/local_model.hpp"

#include <algorithm>

#include "seifert/errors.hpp"

namespace seifert::local_model {

using exact::ext_gcd;
using exact::gcd;
using exact::inv_mod;
using exact::lcm;
using exact::mod_floor;

CyclicChart::CyclicChart(Int order_, std::vector<Int> weights_)
    : order(std::move(order_)), weights(std::move(weights_)) {
    if (order < 1) throw InvalidLocalData("CyclicChart: order must be >= 1");
    if (weights.empty()) throw InvalidLocalData("CyclicChart: at least one weight required");
    Int g = order;
    for (Int& a : weights) {
        a = mod_floor(a, order);
        g = gcd(g, a);
    }
    if (g != 1) throw InvalidLocalData("CyclicChart: gcd(weights, order) must be 1");
}

QuotientPresentation::QuotientPresentation(Int r, CyclicChart c)
    : fiber_weight(mod_floor(r, c.order)), chart(std::move(c)) {}

LocalSeifertData::LocalSeifertData(ReducedChart chart_, Int l, std::vector<Int> b)
    : chart(std::move(chart_)), bundle_class(mod_floor(l, chart.reduced_order)),
      branch_numerators(std::move(b)) {
    if (branch_numerators.size() != chart.dim())
        throw DimensionMismatch("LocalSeifertData: one numerator per coordinate required");
    for (std::size_t i = 0; i < branch_numerators.size(); ++i)
        if (branch_numerators[i] < 0 || branch_numerators[i] >= chart.reflection_orders[i])
            throw InvalidLocalData("LocalSeifertData: numerators must satisfy 0 <= b_i < c_i");
}

ReducedChart reduce_chart(const CyclicChart& chart) {
    const std::size_t n = chart.dim();
    ReducedChart out{chart, std::vector<Int>(n), Int(1), std::vector<Int>(n), Int(0)};
    for (std::size_t i = 0; i < n; ++i) {
        Int c = chart.order;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) c = gcd(c, chart.weights[j]);
        out.reflection_orders[i] = c;
        out.reflection_product *= c;
    }
    out.reduced_order = chart.order / out.reflection_product;
    for (std::size_t i = 0; i < n; ++i)
        out.reduced_weights[i] =
            chart.weights[i] * out.reflection_orders[i] / out.reflection_product;
    return out;
}

ReducedChart reduced_chart_from_parts(const Int& reduced_order, std::vector<Int> reflection_orders,
                                      std::vector<Int> reduced_weights) {
    const std::size_t n = reflection_orders.size();
    if (reduced_weights.size() != n)
        throw DimensionMismatch("reduced_chart_from_parts: component lengths differ");
    if (n == 0) throw InvalidLocalData("reduced_chart_from_parts: at least one coordinate required");
    if (reduced_order < 1)
        throw InvalidLocalData("reduced_chart_from_parts: reduced order must be >= 1");
    Int C = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (reflection_orders[i] < 1)
            throw InvalidLocalData("reduced_chart_from_parts: reflection orders must be >= 1");
        for (std::size_t j = i + 1; j < n; ++j)
            if (gcd(reflection_orders[i], reflection_orders[j]) != 1)
                throw InvalidLocalData(
                    "reduced_chart_from_parts: reflection orders must be pairwise coprime");
        C *= reflection_orders[i];
    }
    const Int order = reduced_order * C;
    std::vector<Int> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        reduced_weights[i] = mod_floor(reduced_weights[i], reduced_order * reflection_orders[i]);
        weights[i] = reduced_weights[i] * (C / reflection_orders[i]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        Int g = reduced_order;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) g = gcd(g, reduced_weights[i]);
        if (g != 1)
            throw InvalidLocalData(
                "reduced_chart_from_parts: weights violate the reduced-chart gcd condition");
    }
    Int g = order;
    for (const Int& a : weights) g = gcd(g, a);
    if (g != 1)
        throw InvalidLocalData("reduced_chart_from_parts: reconstructed weights violate gcd(a, M) = 1");
    ReducedChart out{CyclicChart(order, std::move(weights)), std::move(reflection_orders), C,
                     std::move(reduced_weights), reduced_order};
    return out;
}

ResidueDecomposition decompose_residue(const ReducedChart& chart, const Int& r) {
    const std::size_t n = chart.dim();
    const Int& M = chart.source.order;
    const Int rr = mod_floor(r, M);
    ResidueDecomposition out;
    out.b.resize(n);
    Int rest = rr;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& c = chart.reflection_orders[i];
        // a_i is invertible mod c_i, so b_i is pinned by a_i b_i = r (mod c_i)
        if (c == 1) {
            out.b[i] = 0;
            continue;
        }
        Int ai = mod_floor(chart.source.weights[i], c);
        out.b[i] = mod_floor(rr * inv_mod(ai, c), c);
        rest -= chart.source.weights[i] * out.b[i];
    }
    rest = mod_floor(rest, M);
    // rest is divisible by every c_i, hence by their product
    out.l = mod_floor(rest / chart.reflection_product, chart.reduced_order);
    return out;
}

LocalSeifertData to_seifert(const QuotientPresentation& qp) {
    ReducedChart rc = reduce_chart(qp.chart);
    ResidueDecomposition dec = decompose_residue(rc, qp.fiber_weight);
    return LocalSeifertData(std::move(rc), std::move(dec.l), std::move(dec.b));
}

QuotientPresentation to_quotient(const LocalSeifertData& lsd) {
    const ReducedChart& rc = lsd.chart;
    Int r = lsd.bundle_class * rc.reflection_product;
    for (std::size_t i = 0; i < rc.dim(); ++i)
        r += rc.source.weights[i] * lsd.branch_numerators[i];
    return QuotientPresentation(mod_floor(r, rc.source.order), rc.source);
}

bool quotient_is_smooth(const QuotientPresentation& qp) {
    if (gcd(qp.fiber_weight, qp.chart.order) == 1) return true;
    return qp.fiber_weight == 0 && reduce_chart(qp.chart).reduced_order == 1;
}

namespace {

// l * prod c_i + sum_i (prod_{j != i} c_j) b_i d_i, the class whose
// invertibility mod the reduced order decides smoothness
Int scaled_bundle_class(const LocalSeifertData& lsd) {
    const ReducedChart& rc = lsd.chart;
    Int cls = lsd.bundle_class * rc.reflection_product;
    for (std::size_t i = 0; i < rc.dim(); ++i)
        cls += (rc.reflection_product / rc.reflection_orders[i]) * lsd.branch_numerators[i] *
               rc.reduced_weights[i];
    return cls;
}

void require_reduced_fractions(const LocalSeifertData& lsd) {
    for (std::size_t i = 0; i < lsd.chart.dim(); ++i)
        if (gcd(lsd.branch_numerators[i], lsd.chart.reflection_orders[i]) > 1)
            throw HypothesisNotMet("seifert_is_smooth: gcd(b_i, c_i) = 1 required");
}

bool reflection_orders_pairwise_coprime(const ReducedChart& rc) {
    for (std::size_t i = 0; i < rc.dim(); ++i)
        for (std::size_t j = i + 1; j < rc.dim(); ++j)
            if (gcd(rc.reflection_orders[i], rc.reflection_orders[j]) != 1) return false;
    return true;
}

}  // namespace

bool seifert_is_smooth(const LocalSeifertData& lsd) {
    require_reduced_fractions(lsd);
    if (!reflection_orders_pairwise_coprime(lsd.chart)) return false;
    bool smooth = gcd(scaled_bundle_class(lsd), lsd.chart.reduced_order) == 1;
#ifndef NDEBUG
    // the generator-test route must agree wherever the hypothesis holds
    if (smooth != seifert_is_smooth_by_generator(lsd))
        throw std::logic_error("seifert_is_smooth: criterion routes disagree");
#endif
    return smooth;
}

bool seifert_is_smooth_by_generator(const LocalSeifertData& lsd) {
    require_reduced_fractions(lsd);
    if (!reflection_orders_pairwise_coprime(lsd.chart)) return false;
    FpAbelianGroup cl = local_class_group(lsd.chart);
    exact::GroupElement g({mod_floor(scaled_bundle_class(lsd), lsd.chart.reduced_order)});
    return element_generates(g, cl);
}

FpAbelianGroup local_class_group(const ReducedChart& chart) {
    return FpAbelianGroup::cyclic(chart.reduced_order);
}

Int local_divisor_class(const ReducedChart& chart, std::size_t j) {
    if (j >= chart.dim()) throw DimensionMismatch("local_divisor_class: index out of range");
    return mod_floor(chart.reduced_weights[j], chart.reduced_order);
}

Int local_chern(const ReducedChart& chart, const std::vector<Int>& coeffs) {
    if (coeffs.size() != chart.dim())
        throw DimensionMismatch("local_chern: one coefficient per coordinate required");
    Int cls = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) cls += coeffs[j] * chart.reduced_weights[j];
    return mod_floor(cls, chart.reduced_order);
}

Int local_multiplicity(const Int& reduced_order, const Int& l,
                       const std::vector<LocalBranch>& branches) {
    Int base = 1;
    for (const LocalBranch& br : branches) {
        if (br.c < 1) throw InvalidLocalData("local_multiplicity: denominators must be >= 1");
        base = lcm(base, br.c);
    }
    // the class of M = k * base is linear in k, so the answer is the order
    // of the base class in Z / reduced_order
    Int cls = base * l;
    for (const LocalBranch& br : branches) cls += (base * br.b / br.c) * br.divisor_class;
    cls = mod_floor(cls, reduced_order);
    Int k = reduced_order / gcd(cls, reduced_order);
    return base * k;
}

Int multiplicity_at_center(const LocalSeifertData& lsd) {
    std::vector<LocalBranch> branches;
    branches.reserve(lsd.chart.dim());
    for (std::size_t i = 0; i < lsd.chart.dim(); ++i)
        branches.push_back({lsd.branch_numerators[i], lsd.chart.reflection_orders[i],
                            lsd.chart.reduced_weights[i]});
    return local_multiplicity(lsd.chart.reduced_order, lsd.bundle_class, branches);
}

bool charts_equivalent(const CyclicChart& a, const CyclicChart& b) {
    if (a.order != b.order || a.dim() != b.dim()) return false;
    for (Int s = 1; s < a.order || s == 1; ++s) {
        if (gcd(s, a.order) != 1) continue;
        std::vector<Int> scaled(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) scaled[i] = mod_floor(s * a.weights[i], a.order);
        std::vector<Int> target = b.weights;
        std::sort(scaled.begin(), scaled.end());
        std::sort(target.begin(), target.end());
        if (scaled == target) return true;
        if (a.order == 1) break;
    }
    return false;
}

}  // namespace seifert::local_model
