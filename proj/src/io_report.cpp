#include "seifert/io/report.hpp"

#include "seifert/errors.hpp"

namespace seifert::io {

namespace {

Json qclass_json(const BaseVariety& base, const QClass& q) {
    Json out = Json::object();
    out["numerator"] = int_vector_to_json(q.numerator.coords);
    out["denominator"] = int_to_json(q.denominator);
    Json values = Json::array();
    for (const Int& n : q.numerator.coords) values.push_back(rational_string(n, q.denominator));
    out["per_generator"] = std::move(values);
    (void)base;
    return out;
}

Json group_json(const exact::FpAbelianGroup& g) {
    Json out = normal_form_to_json(g);
    out["pretty"] = normal_form_pretty(g);
    return out;
}

Json normal_coords_json(const exact::NormalCoords& nc) {
    Json out = Json::object();
    out["torsion"] = int_vector_to_json(nc.torsion);
    out["free"] = int_vector_to_json(nc.free_part);
    return out;
}

}  // namespace

Json validation_report_json(const SeifertData& sd, const ValidationReport& report) {
    const BaseVariety& base = sd.base();
    Json out = Json::object();
    out["valid"] = report.ok();
    if (report.least_trivializing_order)
        out["least_trivializing_order"] = int_to_json(*report.least_trivializing_order);
    else
        out["least_trivializing_order"] = "FAIL";
    out["search_bound"] = int_to_json(report.search_bound);
    Json pairs = Json::array();
    for (const auto& [i, j] : report.coprimality_failures) {
        Json p = Json::array();
        p.push_back(base.divisors()[i].name);
        p.push_back(base.divisors()[j].name);
        pairs.push_back(std::move(p));
    }
    out["intersecting_pairs_not_coprime"] = std::move(pairs);
    Json points = Json::array();
    for (const auto& c : report.point_checks) {
        Json p = Json::object();
        p["name"] = c.name;
        p["restriction_kills_relations"] = c.restriction_kills_relations;
        p["incident_classes_match"] = c.incident_classes_match;
        points.push_back(std::move(p));
    }
    out["marked_point_checks"] = std::move(points);
    return out;
}

Json analyze_report_json(const InputDocument& doc) {
    const SeifertData& sd = *doc.seifert;
    const BaseVariety& base = sd.base();
    Json out = Json::object();
    out["validation"] = validation_report_json(sd, validate(sd));

    out["chern_class"] = qclass_json(base, chern_class(sd));

    Int order = global_order(sd);
    out["global_order"] = int_to_json(order);

    Json mults = Json::object();
    for (const MarkedPoint& p : base.marked_points())
        mults[p.name] = int_to_json(multiplicity_at(sd, p));
    out["fiber_multiplicities"] = std::move(mults);

    ClassGroupY cly = class_group_Y(sd);
    {
        Json jcl = group_json(cly.group);
        Json gens = Json::array();
        for (const std::string& n : cly.generator_names) gens.push_back(n);
        jcl["generators"] = std::move(gens);
        Json dys = Json::object();
        for (std::size_t bi = 0; bi < cly.branch_divisors.size(); ++bi)
            dys[cly.generator_names[base.cl().num_generators() + bi]] =
                normal_coords_json(cly.branch_normal_forms[bi]);
        jcl["branch_generators_normal_coords"] = std::move(dys);
        out["class_group_Y"] = std::move(jcl);
    }

    {
        GroupElement ky = canonical_class_Y(sd);
        Json jk = Json::object();
        jk["coords"] = int_vector_to_json(ky.coords);
        jk["normal_coords"] = normal_coords_json(cly.group.normal_coords(ky));
        out["canonical_class_Y"] = std::move(jk);
    }

    out["contraction_type"] = to_string(contraction_type(sd));
    try {
        SingularityPredicates pred = singularity_predicates(sd);
        out["q_cartier"] = to_string(pred.q_cartier);
        out["log_terminal"] = to_string(pred.log_terminal);
    } catch (const PreconditionFailed&) {
        out["q_cartier"] = "not_computed (requires positive Chern class)";
        out["log_terminal"] = "not_computed (requires positive Chern class)";
    }

    out["edge_class"] = int_vector_to_json(topology::edge_class(sd).coords);

    Json notes = Json::array();
    notes.push_back(
        "global_order is m(X) relative to the declared data: marked points must enumerate "
        "every singular point of (X, Delta) for it to be the true lcm over X");
    notes.push_back(
        "local freeness is modelled as membership in the declared Picard subgroup plus "
        "triviality under each marked point's restriction map");
    out["notes"] = std::move(notes);
    return out;
}

Json h1_report_json(const InputDocument& doc, bool orbifold) {
    if (!doc.profile)
        throw ParseError("document has no intersection_profile block (required for h1 commands)");
    const SeifertData& sd = *doc.seifert;
    Json out = Json::object();
    exact::FpAbelianGroup g = exact::FpAbelianGroup::trivial();
    if (orbifold) {
        std::vector<Int> c;
        for (const BranchCoeff& bc : sd.coeffs()) c.push_back(bc.c);
        g = topology::h1_orb(*doc.profile, c);
        out["group"] = "H1_orb(X, Delta)";
    } else {
        g = topology::h1_Y(*doc.profile, sd.coeffs());
        out["group"] = "H1(Y, Z)";
    }
    out["normal_form"] = group_json(g);
    Json gens = Json::array();
    if (!orbifold) gens.push_back("k");
    for (const NamedDivisor& d : sd.base().divisors()) gens.push_back("g_" + d.name);
    out["generators"] = std::move(gens);
    out["hypotheses"] =
        "asserted by caller: X smooth, H1(X, Z) = 0, divisors smooth and transversal";
    return out;
}

Json local_dict_report_json(const local_model::QuotientPresentation& qp) {
    local_model::LocalSeifertData lsd = local_model::to_seifert(qp);
    Json out = Json::object();
    out["order"] = int_to_json(qp.chart.order);
    out["weights"] = int_vector_to_json(qp.chart.weights);
    out["fiber_weight"] = int_to_json(qp.fiber_weight);
    Json red = Json::object();
    red["reflection_orders"] = int_vector_to_json(lsd.chart.reflection_orders);
    red["reduced_weights"] = int_vector_to_json(lsd.chart.reduced_weights);
    red["reduced_order"] = int_to_json(lsd.chart.reduced_order);
    out["reduced_chart"] = std::move(red);
    out["bundle_class_l"] = int_to_json(lsd.bundle_class);
    Json branch = Json::array();
    for (std::size_t i = 0; i < lsd.chart.dim(); ++i)
        branch.push_back(rational_string(lsd.branch_numerators[i], lsd.chart.reflection_orders[i]));
    out["branch_fractions"] = std::move(branch);
    out["base_smooth"] = (lsd.chart.reduced_order == 1);
    out["local_class_group"] = normal_form_pretty(local_model::local_class_group(lsd.chart));
    return out;
}

Json local_smooth_report_json(const local_model::QuotientPresentation& qp) {
    Json out = Json::object();
    out["order"] = int_to_json(qp.chart.order);
    out["weights"] = int_vector_to_json(qp.chart.weights);
    out["fiber_weight"] = int_to_json(qp.fiber_weight);
    out["total_space_smooth"] = local_model::quotient_is_smooth(qp);
    try {
        out["seifert_criterion"] = local_model::seifert_is_smooth(local_model::to_seifert(qp));
    } catch (const HypothesisNotMet&) {
        out["seifert_criterion"] = "not_applicable (some gcd(b_i, c_i) > 1)";
    }
    return out;
}

Json local_mult_report_json(const local_model::QuotientPresentation& qp) {
    local_model::LocalSeifertData lsd = local_model::to_seifert(qp);
    Json out = Json::object();
    out["order"] = int_to_json(qp.chart.order);
    out["weights"] = int_vector_to_json(qp.chart.weights);
    out["fiber_weight"] = int_to_json(qp.fiber_weight);
    out["multiplicity"] = int_to_json(local_model::multiplicity_at_center(lsd));
    return out;
}

Json snf_report_json(const exact::IntMatrix& a, bool include_transforms) {
    exact::SmithDecomposition snf = exact::smith_normal_form(a);
    Json out = Json::object();
    out["rows"] = static_cast<std::int64_t>(a.rows());
    out["cols"] = static_cast<std::int64_t>(a.cols());
    out["diagonal"] = int_vector_to_json(snf.diagonal);
    out["invariant_factors"] = int_vector_to_json(snf.invariant_factors);
    out["rank"] = static_cast<std::int64_t>(snf.rank);
    exact::FpAbelianGroup coker = exact::cokernel(a);
    Json jc = group_json(coker);
    out["cokernel"] = std::move(jc);
    if (include_transforms) {
        auto emit = [](const exact::IntMatrix& m) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(int_vector_to_json(m.row(i)));
            return rows;
        };
        out["U"] = emit(snf.U);
        out["S"] = emit(snf.S);
        out["V"] = emit(snf.V);
    }
    return out;
}

namespace {

bool is_scalar_array(const Json& j) {
    for (const Json& x : j)
        if (x.is_object() || x.is_array()) return false;
    return true;
}

void print_scalar(std::ostream& os, const Json& j) {
    if (j.is_string())
        os << j.get<std::string>();
    else
        os << j.dump();
}

void print_inline_array(std::ostream& os, const Json& j) {
    os << "[";
    bool first = true;
    for (const Json& x : j) {
        if (!first) os << ", ";
        print_scalar(os, x);
        first = false;
    }
    os << "]";
}

}  // namespace

void render_human(std::ostream& os, const Json& report, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (report.is_object()) {
        for (auto it = report.begin(); it != report.end(); ++it) {
            const Json& v = it.value();
            if (v.is_object()) {
                os << pad << it.key() << ":\n";
                render_human(os, v, indent + 2);
            } else if (v.is_array() && !is_scalar_array(v)) {
                os << pad << it.key() << ":\n";
                render_human(os, v, indent + 2);
            } else if (v.is_array()) {
                os << pad << it.key() << ": ";
                print_inline_array(os, v);
                os << "\n";
            } else {
                os << pad << it.key() << ": ";
                print_scalar(os, v);
                os << "\n";
            }
        }
    } else if (report.is_array()) {
        for (const Json& v : report) {
            if (v.is_array() && is_scalar_array(v)) {
                os << pad << "- ";
                print_inline_array(os, v);
                os << "\n";
            } else if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_human(os, v, indent + 2);
            } else {
                os << pad << "- ";
                print_scalar(os, v);
                os << "\n";
            }
        }
    } else {
        os << pad;
        print_scalar(os, report);
        os << "\n";
    }
}

}  // namespace seifert::io
