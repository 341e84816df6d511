#include "seifert/seifert_data.hpp"

#include "seifert/errors.hpp"

namespace seifert {

using exact::floor_div;
using exact::gcd;
using exact::lcm;
using exact::mod_floor;

BranchCoeff::BranchCoeff(Int b_, Int c_) : b(std::move(b_)), c(std::move(c_)) {
    if (c < 1) throw StructuralFault("BranchCoeff: denominator must be >= 1");
    if (b < 0 || b >= c) throw StructuralFault("BranchCoeff: 0 <= b < c required");
    Int g = gcd(b, c);
    if (g > 1) {
        b /= g;
        c /= g;
    }
    if (b == 0) c = 1;
}

bool qclasses_equal(const FpAbelianGroup& cl, const QClass& a, const QClass& b) {
    std::vector<Int> fa = cl.free_coords(a.numerator);
    std::vector<Int> fb = cl.free_coords(b.numerator);
    if (fa.size() != fb.size()) return false;
    for (std::size_t i = 0; i < fa.size(); ++i)
        if (b.denominator * fa[i] != a.denominator * fb[i]) return false;
    return true;
}

SeifertData::SeifertData(std::shared_ptr<const BaseVariety> base, GroupElement l_class,
                         std::vector<BranchCoeff> coeffs)
    : base_(std::move(base)), l_class_(std::move(l_class)), coeffs_(std::move(coeffs)) {
    if (!base_) throw StructuralFault("SeifertData: base required");
    if (l_class_.coords.size() != base_->cl().num_generators())
        throw DimensionMismatch("SeifertData: L class length mismatch");
    if (coeffs_.size() != base_->divisors().size())
        throw DimensionMismatch("SeifertData: one coefficient per base divisor required");
}

Int SeifertData::coefficient_lcm() const {
    Int l = 1;
    for (const BranchCoeff& bc : coeffs_) l = lcm(l, bc.c);
    return l;
}

namespace {

// coordinates of s * [L] + sum (s * b_i / c_i) [D_i]; s must be a
// multiple of every c_i
GroupElement scaled_class(const SeifertData& sd, const Int& s) {
    const std::size_t g = sd.base().cl().num_generators();
    GroupElement out{std::vector<Int>(g)};
    for (std::size_t k = 0; k < g; ++k) out.coords[k] = s * sd.l_class().coords[k];
    for (std::size_t i = 0; i < sd.coeffs().size(); ++i) {
        Int mult = s * sd.coeffs()[i].b / sd.coeffs()[i].c;
        if (mult == 0) continue;
        for (std::size_t k = 0; k < g; ++k)
            out.coords[k] += mult * sd.base().divisors()[i].cls.coords[k];
    }
    return out;
}

// Cl(X) / <Picard>, on the same generators
FpAbelianGroup picard_quotient(const BaseVariety& base) {
    exact::IntMatrix rel = base.cl().relations();
    for (const GroupElement& p : base.picard()) rel.append_row(p.coords);
    return FpAbelianGroup(base.cl().num_generators(), std::move(rel));
}

void require_valid(const SeifertData& sd, const char* op) {
    if (!validate(sd).ok())
        throw ValidationRequired(std::string(op) + ": Seifert data failed validation");
}

}  // namespace

ValidationReport validate(const SeifertData& sd, const Int& search_bound) {
    const BaseVariety& base = sd.base();
    ValidationReport report;

    const Int step = sd.coefficient_lcm();
    FpAbelianGroup quotient = picard_quotient(base);
    Int bound = search_bound;
    if (bound <= 0) {
        bound = step * quotient.torsion_exponent();
        if (bound < 1) bound = 1;
    }
    report.search_bound = bound;
    for (Int m = step; m <= bound; m += step) {
        if (subgroup_membership(scaled_class(sd, m), base.picard(), base.cl())) {
            report.least_trivializing_order = m;
            break;
        }
    }

    for (const auto& [i, j] : base.intersections()) {
        if (gcd(sd.coeffs()[i].c, sd.coeffs()[j].c) != 1)
            report.coprimality_failures.emplace_back(i, j);
    }

    for (const MarkedPoint& p : base.marked_points()) {
        ValidationReport::PointCheck check{p.name, true, true};
        const Int& mred = p.chart.reduced_order;
        const exact::IntMatrix& rel = base.cl().relations();
        for (std::size_t r = 0; r < rel.rows() && check.restriction_kills_relations; ++r) {
            Int v = 0;
            for (std::size_t k = 0; k < rel.cols(); ++k) v += rel(r, k) * p.restriction[k];
            if (mod_floor(v, mred) != 0) check.restriction_kills_relations = false;
        }
        for (const auto& [div, coord] : p.incident_divisors) {
            Int expected = local_model::local_divisor_class(p.chart, coord);
            if (base.restrict_class(p, base.divisors()[div].cls) != expected)
                check.incident_classes_match = false;
        }
        report.point_checks.push_back(std::move(check));
    }
    return report;
}

bool ValidationReport::ok() const {
    if (!least_trivializing_order) return false;
    if (!coprimality_failures.empty()) return false;
    for (const PointCheck& c : point_checks)
        if (!c.restriction_kills_relations || !c.incident_classes_match) return false;
    return true;
}

QClass chern_class(const SeifertData& sd) {
    Int den = sd.coefficient_lcm();
    return QClass{scaled_class(sd, den), den};
}

SeifertData quotient_by_mu(const SeifertData& sd, const Int& m) {
    if (m < 1) throw StructuralFault("quotient_by_mu: M must be >= 1");
    const std::size_t g = sd.base().cl().num_generators();
    GroupElement l{std::vector<Int>(g)};
    for (std::size_t k = 0; k < g; ++k) l.coords[k] = m * sd.l_class().coords[k];
    std::vector<BranchCoeff> coeffs;
    coeffs.reserve(sd.coeffs().size());
    for (std::size_t i = 0; i < sd.coeffs().size(); ++i) {
        const BranchCoeff& bc = sd.coeffs()[i];
        Int whole = floor_div(m * bc.b, bc.c);
        if (whole != 0)
            for (std::size_t k = 0; k < g; ++k)
                l.coords[k] += whole * sd.base().divisors()[i].cls.coords[k];
        coeffs.emplace_back(mod_floor(m * bc.b, bc.c), bc.c);
    }
    return SeifertData(sd.base_ptr(), std::move(l), std::move(coeffs));
}

Int global_order(const SeifertData& sd) {
    ValidationReport report = validate(sd);
    if (!report.ok()) throw ValidationRequired("global_order: Seifert data failed validation");
    Int order = *report.least_trivializing_order;
    for (const BranchCoeff& bc : sd.coeffs()) order = lcm(order, bc.c);
    for (const MarkedPoint& p : sd.base().marked_points())
        order = lcm(order, multiplicity_at(sd, p));
    return order;
}

Int multiplicity_at(const SeifertData& sd, const MarkedPoint& p) {
    const BaseVariety& base = sd.base();
    Int l = base.restrict_class(p, sd.l_class());
    std::vector<local_model::LocalBranch> branches;
    for (const auto& [div, coord] : p.incident_divisors) {
        (void)coord;
        const BranchCoeff& bc = sd.coeffs()[div];
        if (bc.is_trivial()) continue;
        branches.push_back({bc.b, bc.c, base.restrict_class(p, base.divisors()[div].cls)});
    }
    return local_model::local_multiplicity(p.chart.reduced_order, l, branches);
}

GroupElement ClassGroupY::lift(const GroupElement& cl_x_element) const {
    GroupElement out{std::vector<Int>(group.num_generators())};
    if (cl_x_element.coords.size() > out.coords.size())
        throw DimensionMismatch("ClassGroupY::lift: element does not fit the presentation");
    for (std::size_t i = 0; i < cl_x_element.coords.size(); ++i)
        out.coords[i] = cl_x_element.coords[i];
    return out;
}

ClassGroupY class_group_Y(const SeifertData& sd) {
    require_valid(sd, "class_group_Y");
    const BaseVariety& base = sd.base();
    const std::size_t g = base.cl().num_generators();

    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < sd.coeffs().size(); ++i)
        if (!sd.coeffs()[i].is_trivial()) branch.push_back(i);

    const std::size_t total = g + branch.size();
    exact::IntMatrix rel(0, total);
    // Cl(X) relations lifted
    for (std::size_t r = 0; r < base.cl().relations().rows(); ++r) {
        std::vector<Int> row(total);
        for (std::size_t k = 0; k < g; ++k) row[k] = base.cl().relations()(r, k);
        rel.append_row(row);
    }
    // f*[D_i] - c_i DY_i = 0
    for (std::size_t bi = 0; bi < branch.size(); ++bi) {
        std::vector<Int> row(total);
        for (std::size_t k = 0; k < g; ++k) row[k] = base.divisors()[branch[bi]].cls.coords[k];
        row[g + bi] = -sd.coeffs()[branch[bi]].c;
        rel.append_row(row);
    }
    // f*[L] + sum b_i DY_i = 0
    {
        std::vector<Int> row(total);
        for (std::size_t k = 0; k < g; ++k) row[k] = sd.l_class().coords[k];
        for (std::size_t bi = 0; bi < branch.size(); ++bi) row[g + bi] = sd.coeffs()[branch[bi]].b;
        rel.append_row(row);
    }

    ClassGroupY out{FpAbelianGroup(total, std::move(rel)), {}, branch, {}};
    out.generator_names = base.generator_names();
    for (std::size_t bi = 0; bi < branch.size(); ++bi)
        out.generator_names.push_back("DY_" + base.divisors()[branch[bi]].name);
    for (std::size_t bi = 0; bi < branch.size(); ++bi) {
        GroupElement dy{std::vector<Int>(total)};
        dy.coords[g + bi] = 1;
        out.branch_normal_forms.push_back(out.group.normal_coords(dy));
    }
    return out;
}

GroupElement canonical_class_Y(const SeifertData& sd) {
    ClassGroupY cly = class_group_Y(sd);
    const std::size_t g = sd.base().cl().num_generators();
    GroupElement k = cly.lift(sd.base().canonical_class());
    for (std::size_t bi = 0; bi < cly.branch_divisors.size(); ++bi)
        k.coords[g + bi] = sd.coeffs()[cly.branch_divisors[bi]].c - 1;
    return k;
}

std::string to_string(ContractionType t) {
    switch (t) {
        case ContractionType::ZeroSectionContractible: return "zero_section_contractible";
        case ContractionType::InfinitySectionContractible: return "infinity_section_contractible";
        case ContractionType::Neither: return "neither";
        case ContractionType::Undecidable: return "undecidable";
    }
    return "undecidable";
}

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::False: return "false";
        case Tristate::True: return "true";
        case Tristate::Undecidable: return "undecidable";
    }
    return "undecidable";
}

namespace {

// sign of the free coordinate of a rational class against the ample
// generator; requires free rank 1 and a declared direction
int chern_sign(const SeifertData& sd, const QClass& q) {
    const FpAbelianGroup& cl = sd.base().cl();
    Int coord = cl.free_coords(q.numerator)[0] * cl.free_coords(*sd.base().ample_direction())[0];
    return coord == 0 ? 0 : (coord > 0 ? 1 : -1);
}

}  // namespace

ContractionType contraction_type(const SeifertData& sd) {
    require_valid(sd, "contraction_type");
    if (!sd.base().ample_direction() || sd.base().cl().free_rank() != 1)
        return ContractionType::Undecidable;
    switch (chern_sign(sd, chern_class(sd))) {
        case -1: return ContractionType::ZeroSectionContractible;
        case 1: return ContractionType::InfinitySectionContractible;
        default: return ContractionType::Neither;
    }
}

SingularityPredicates singularity_predicates(const SeifertData& sd) {
    ContractionType ct = contraction_type(sd);
    if (ct == ContractionType::Undecidable)
        return {Tristate::Undecidable, Tristate::Undecidable};
    if (ct != ContractionType::InfinitySectionContractible)
        throw PreconditionFailed(
            "singularity_predicates: the cone construction requires a positive Chern class");

    const BaseVariety& base = sd.base();
    const FpAbelianGroup& cl = base.cl();
    // K_X + Delta as a rational class, Delta = sum (1 - 1/c_i) D_i
    Int den = sd.coefficient_lcm();
    GroupElement num{std::vector<Int>(cl.num_generators())};
    for (std::size_t k = 0; k < num.coords.size(); ++k)
        num.coords[k] = den * base.canonical_class().coords[k];
    for (std::size_t i = 0; i < sd.coeffs().size(); ++i) {
        Int mult = den - den / sd.coeffs()[i].c;
        if (mult == 0) continue;
        for (std::size_t k = 0; k < num.coords.size(); ++k)
            num.coords[k] += mult * base.divisors()[i].cls.coords[k];
    }
    QClass k_delta{num, den};

    QClass c1 = chern_class(sd);
    std::vector<Int> kd_free = cl.free_coords(k_delta.numerator);
    std::vector<Int> c1_free = cl.free_coords(c1.numerator);
    // K_X + Delta = lambda * c1 in Cl tensor Q: cross-ratio equality on the
    // free part (c1 is nonzero here)
    bool proportional = true;
    for (std::size_t i = 0; i < kd_free.size() && proportional; ++i)
        for (std::size_t j = i + 1; j < kd_free.size() && proportional; ++j)
            if (kd_free[i] * c1_free[j] != kd_free[j] * c1_free[i]) proportional = false;

    // -(K_X + Delta) ample means strictly positive against the direction
    int sign = chern_sign(sd, k_delta);
    return {proportional ? Tristate::True : Tristate::False,
            sign < 0 ? Tristate::True : Tristate::False};
}

}  // namespace seifert
