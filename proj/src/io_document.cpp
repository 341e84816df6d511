#include "seifert/io/document.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "seifert/errors.hpp"

namespace seifert::io {

namespace {

const long long kJsonIntLimit = 1LL << 53;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::optional<std::reference_wrapper<const Json>> optional_member(const Json& j, const char* key) {
    if (!j.is_object()) return std::nullopt;
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return std::cref(*it);
}

}  // namespace

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) {
        long x = v.get_si();
        if (x > -kJsonIntLimit && x < kJsonIntLimit) return Json(static_cast<std::int64_t>(x));
    }
    return Json(v.get_str());
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail(where, "not a decimal integer string: '" + j.get<std::string>() + "'");
        }
    }
    fail(where, "expected an integer (number or decimal string)");
}

Json int_vector_to_json(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

std::vector<Int> int_vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of integers");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const Json& x : j) out.push_back(int_from_json(x, where));
    return out;
}

std::string rational_string(const Int& num, const Int& den) {
    exact::Rat q(num, den);
    q.canonicalize();
    return q.get_str();
}

Json normal_form_to_json(const exact::FpAbelianGroup& g) {
    Json out = Json::object();
    out["free_rank"] = static_cast<std::int64_t>(g.free_rank());
    Json torsion = Json::array();
    for (const Int& d : g.torsion()) torsion.push_back(int_to_json(d));
    out["torsion"] = std::move(torsion);
    return out;
}

std::string normal_form_pretty(const exact::FpAbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank() == 1) {
        os << "ℤ";
        first = false;
    } else if (g.free_rank() > 1) {
        os << "ℤ^" << g.free_rank();
        first = false;
    }
    for (const Int& d : g.torsion()) {
        if (!first) os << " ⊕ ";
        os << "ℤ/" << d.get_str();
        first = false;
    }
    return os.str();
}

namespace {

GroupElement element_from_json(const Json& j, std::size_t gens, const std::string& where) {
    std::vector<Int> coords = int_vector_from_json(j, where);
    if (coords.size() != gens) fail(where, "expected one coordinate per class-group generator");
    return GroupElement(std::move(coords));
}

exact::IntMatrix matrix_from_json(const Json& j, std::size_t cols, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    exact::IntMatrix m(0, cols);
    for (const Json& row : j) {
        std::vector<Int> r = int_vector_from_json(row, where);
        if (r.size() != cols) fail(where, "row length mismatch");
        m.append_row(r);
    }
    return m;
}

Json matrix_to_json(const exact::IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(int_vector_to_json(m.row(i)));
    return rows;
}

}  // namespace

InputDocument parse_document(const Json& j) {
    InputDocument doc;
    const Json& version = member(j, "schema_version", "document");
    if (!version.is_string()) fail("document", "schema_version must be a string");
    doc.schema_version = version.get<std::string>();
    if (doc.schema_version != "1")
        fail("document", "unsupported schema_version '" + doc.schema_version + "'");

    const Json& jbase = member(j, "base", "document");
    const Json& jcl = member(jbase, "class_group", "base");
    const Json& jgens = member(jcl, "generators", "base.class_group");
    if (!jgens.is_array()) fail("base.class_group", "generators must be an array of names");
    std::vector<std::string> names;
    for (const Json& g : jgens) {
        if (!g.is_string()) fail("base.class_group", "generator names must be strings");
        names.push_back(g.get<std::string>());
    }
    const std::size_t gens = names.size();
    exact::IntMatrix relations(0, gens);
    if (auto jr = optional_member(jcl, "relations"))
        relations = matrix_from_json(*jr, gens, "base.class_group.relations");
    FpAbelianGroup cl(gens, std::move(relations));

    std::vector<GroupElement> picard;
    if (auto jp = optional_member(jbase, "picard")) {
        const Json& arr = jp->get();
        if (!arr.is_array()) fail("base.picard", "expected an array of coordinate vectors");
        for (const Json& e : arr) picard.push_back(element_from_json(e, gens, "base.picard"));
    }

    std::vector<NamedDivisor> divisors;
    if (auto jd = optional_member(jbase, "divisors")) {
        const Json& arr = jd->get();
        if (!arr.is_array()) fail("base.divisors", "expected an array");
        for (const Json& e : arr) {
            const Json& jname = member(e, "name", "base.divisors");
            if (!jname.is_string()) fail("base.divisors", "divisor name must be a string");
            divisors.push_back({jname.get<std::string>(),
                                element_from_json(member(e, "class", "base.divisors"), gens,
                                                  "base.divisors.class")});
        }
    }
    auto divisor_index = [&divisors](const std::string& name, const std::string& where) {
        for (std::size_t i = 0; i < divisors.size(); ++i)
            if (divisors[i].name == name) return i;
        fail(where, "unknown divisor '" + name + "'");
    };

    GroupElement canonical =
        element_from_json(member(jbase, "canonical_class", "base"), gens, "base.canonical_class");

    std::optional<GroupElement> ample;
    if (auto ja = optional_member(jbase, "ample_direction"))
        ample = element_from_json(*ja, gens, "base.ample_direction");

    std::vector<MarkedPoint> points;
    if (auto jm = optional_member(jbase, "marked_points")) {
        const Json& arr = jm->get();
        if (!arr.is_array()) fail("base.marked_points", "expected an array");
        for (const Json& e : arr) {
            MarkedPoint p{"", local_model::reduce_chart(local_model::CyclicChart(1, {Int(0)})), {}, {}};
            const Json& jname = member(e, "name", "base.marked_points");
            if (!jname.is_string()) fail("base.marked_points", "point name must be a string");
            p.name = jname.get<std::string>();
            const Json& jchart = member(e, "chart", "base.marked_points");
            Int order = int_from_json(member(jchart, "order", "chart"), "chart.order");
            std::vector<Int> weights =
                int_vector_from_json(member(jchart, "weights", "chart"), "chart.weights");
            try {
                p.chart = local_model::reduce_chart(local_model::CyclicChart(order, weights));
            } catch (const InvalidLocalData& e2) {
                fail("base.marked_points." + p.name, e2.what());
            }
            std::vector<Int> restriction = int_vector_from_json(
                member(e, "restriction", "base.marked_points"), "marked point restriction");
            if (restriction.size() != gens)
                fail("base.marked_points." + p.name,
                     "restriction needs one residue per class-group generator");
            p.restriction = std::move(restriction);
            if (auto ji = optional_member(e, "incident_divisors")) {
                const Json& inc = ji->get();
                if (!inc.is_object())
                    fail("base.marked_points." + p.name, "incident_divisors must be an object");
                for (auto it = inc.begin(); it != inc.end(); ++it) {
                    std::size_t div = divisor_index(it.key(), "base.marked_points." + p.name);
                    Int coord = int_from_json(it.value(), "incident_divisors");
                    if (coord < 0 || coord >= Int(static_cast<long>(p.chart.dim())))
                        fail("base.marked_points." + p.name, "chart coordinate index out of range");
                    p.incident_divisors[div] = static_cast<std::size_t>(coord.get_ui());
                }
            }
            points.push_back(std::move(p));
        }
    }

    std::set<std::pair<std::size_t, std::size_t>> intersections;
    if (auto ji = optional_member(jbase, "intersections")) {
        const Json& arr = ji->get();
        if (!arr.is_array()) fail("base.intersections", "expected an array of name pairs");
        for (const Json& pair : arr) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
                fail("base.intersections", "each entry must be a pair of divisor names");
            std::size_t a = divisor_index(pair[0].get<std::string>(), "base.intersections");
            std::size_t b = divisor_index(pair[1].get<std::string>(), "base.intersections");
            if (a > b) std::swap(a, b);
            intersections.insert({a, b});
        }
    }

    if (auto jp = optional_member(jbase, "intersection_profile")) {
        const Json& prof = jp->get();
        topology::IntersectionProfile profile;
        Int rank = int_from_json(member(prof, "h2_rank", "intersection_profile"), "h2_rank");
        if (rank < 0) fail("intersection_profile", "h2_rank must be >= 0");
        profile.h2_rank = static_cast<std::size_t>(rank.get_ui());
        profile.divisor_pairings = matrix_from_json(
            member(prof, "divisor_pairings", "intersection_profile"), profile.h2_rank,
            "intersection_profile.divisor_pairings");
        if (profile.divisor_pairings.rows() != divisors.size())
            fail("intersection_profile", "one pairing row per divisor required");
        profile.l_pairings = int_vector_from_json(
            member(prof, "L_pairings", "intersection_profile"), "intersection_profile.L_pairings");
        if (profile.l_pairings.size() != profile.h2_rank)
            fail("intersection_profile", "L_pairings length must equal h2_rank");
        doc.profile = std::move(profile);
    }

    std::shared_ptr<const BaseVariety> base;
    try {
        base = std::make_shared<BaseVariety>(std::move(cl), std::move(names), std::move(picard),
                                             std::move(divisors), std::move(canonical),
                                             std::move(ample), std::move(points),
                                             std::move(intersections));
    } catch (const StructuralFault& e) {
        fail("base", e.what());
    }
    doc.base = base;

    const Json& jseif = member(j, "seifert", "document");
    GroupElement l = element_from_json(member(jseif, "L", "seifert"), gens, "seifert.L");
    std::vector<BranchCoeff> coeffs(base->divisors().size());
    if (auto jc = optional_member(jseif, "coeffs")) {
        const Json& arr = jc->get();
        if (!arr.is_array()) fail("seifert.coeffs", "expected an array");
        for (const Json& e : arr) {
            const Json& jname = member(e, "divisor", "seifert.coeffs");
            if (!jname.is_string()) fail("seifert.coeffs", "divisor must be a name string");
            std::size_t idx = 0;
            try {
                idx = base->divisor_index(jname.get<std::string>());
            } catch (const StructuralFault& e2) {
                fail("seifert.coeffs", e2.what());
            }
            Int b = int_from_json(member(e, "b", "seifert.coeffs"), "seifert.coeffs.b");
            Int c = int_from_json(member(e, "c", "seifert.coeffs"), "seifert.coeffs.c");
            try {
                coeffs[idx] = BranchCoeff(std::move(b), std::move(c));
            } catch (const StructuralFault& e2) {
                fail("seifert.coeffs", e2.what());
            }
        }
    }
    doc.seifert = SeifertData(base, std::move(l), std::move(coeffs));
    return doc;
}

InputDocument load_document(const std::string& path_or_dash) {
    Json j;
    try {
        if (path_or_dash == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(path_or_dash);
            if (!in) throw ParseError("cannot open '" + path_or_dash + "'");
            j = Json::parse(in);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_document(j);
}

Json serialize_document(const InputDocument& doc) {
    const BaseVariety& base = *doc.base;
    Json out = Json::object();
    out["schema_version"] = doc.schema_version;

    Json jbase = Json::object();
    Json jcl = Json::object();
    Json jnames = Json::array();
    for (const std::string& n : base.generator_names()) jnames.push_back(n);
    jcl["generators"] = std::move(jnames);
    jcl["relations"] = matrix_to_json(base.cl().relations());
    jbase["class_group"] = std::move(jcl);

    Json jpic = Json::array();
    for (const GroupElement& p : base.picard()) jpic.push_back(int_vector_to_json(p.coords));
    jbase["picard"] = std::move(jpic);
    jbase["canonical_class"] = int_vector_to_json(base.canonical_class().coords);
    if (base.ample_direction())
        jbase["ample_direction"] = int_vector_to_json(base.ample_direction()->coords);

    Json jdiv = Json::array();
    for (const NamedDivisor& d : base.divisors()) {
        Json e = Json::object();
        e["name"] = d.name;
        e["class"] = int_vector_to_json(d.cls.coords);
        jdiv.push_back(std::move(e));
    }
    jbase["divisors"] = std::move(jdiv);

    if (!base.intersections().empty()) {
        Json ji = Json::array();
        for (const auto& [a, b] : base.intersections()) {
            Json pair = Json::array();
            pair.push_back(base.divisors()[a].name);
            pair.push_back(base.divisors()[b].name);
            ji.push_back(std::move(pair));
        }
        jbase["intersections"] = std::move(ji);
    }

    if (!base.marked_points().empty()) {
        Json jm = Json::array();
        for (const MarkedPoint& p : base.marked_points()) {
            Json e = Json::object();
            e["name"] = p.name;
            Json chart = Json::object();
            chart["order"] = int_to_json(p.chart.source.order);
            chart["weights"] = int_vector_to_json(p.chart.source.weights);
            e["chart"] = std::move(chart);
            e["restriction"] = int_vector_to_json(p.restriction);
            Json inc = Json::object();
            for (const auto& [div, coord] : p.incident_divisors)
                inc[base.divisors()[div].name] = static_cast<std::int64_t>(coord);
            e["incident_divisors"] = std::move(inc);
            jm.push_back(std::move(e));
        }
        jbase["marked_points"] = std::move(jm);
    }

    if (doc.profile) {
        Json prof = Json::object();
        prof["h2_rank"] = static_cast<std::int64_t>(doc.profile->h2_rank);
        prof["divisor_pairings"] = matrix_to_json(doc.profile->divisor_pairings);
        prof["L_pairings"] = int_vector_to_json(doc.profile->l_pairings);
        jbase["intersection_profile"] = std::move(prof);
    }
    out["base"] = std::move(jbase);

    Json jseif = Json::object();
    jseif["L"] = int_vector_to_json(doc.seifert->l_class().coords);
    Json jcoeffs = Json::array();
    for (std::size_t i = 0; i < doc.seifert->coeffs().size(); ++i) {
        const BranchCoeff& bc = doc.seifert->coeffs()[i];
        if (bc.is_trivial()) continue;
        Json e = Json::object();
        e["divisor"] = base.divisors()[i].name;
        e["b"] = int_to_json(bc.b);
        e["c"] = int_to_json(bc.c);
        jcoeffs.push_back(std::move(e));
    }
    jseif["coeffs"] = std::move(jcoeffs);
    out["seifert"] = std::move(jseif);
    return out;
}

InputDocument quotient_document(const InputDocument& doc, const Int& m) {
    InputDocument out = doc;
    out.seifert = quotient_by_mu(*doc.seifert, m);
    if (doc.profile) {
        topology::IntersectionProfile prof = *doc.profile;
        for (std::size_t k = 0; k < prof.h2_rank; ++k) {
            Int v = m * doc.profile->l_pairings[k];
            for (std::size_t i = 0; i < doc.seifert->coeffs().size(); ++i) {
                const BranchCoeff& bc = doc.seifert->coeffs()[i];
                v += exact::floor_div(m * bc.b, bc.c) * prof.divisor_pairings(i, k);
            }
            prof.l_pairings[k] = v;
        }
        out.profile = std::move(prof);
    }
    return out;
}

}  // namespace seifert::io
