#include "seifert/base_variety.hpp"

#include "seifert/errors.hpp"

namespace seifert {

BaseVariety::BaseVariety(FpAbelianGroup cl, std::vector<std::string> generator_names,
                         std::vector<GroupElement> picard, std::vector<NamedDivisor> divisors,
                         GroupElement canonical_class, std::optional<GroupElement> ample_direction,
                         std::vector<MarkedPoint> marked_points,
                         std::set<std::pair<std::size_t, std::size_t>> intersections)
    : cl_(std::move(cl)),
      generator_names_(std::move(generator_names)),
      picard_(std::move(picard)),
      divisors_(std::move(divisors)),
      canonical_class_(std::move(canonical_class)),
      ample_direction_(std::move(ample_direction)),
      marked_points_(std::move(marked_points)),
      intersections_(std::move(intersections)) {
    const std::size_t g = cl_.num_generators();
    if (generator_names_.size() != g)
        throw DimensionMismatch("BaseVariety: one name per class-group generator required");
    auto check = [g](const GroupElement& e, const char* what) {
        if (e.coords.size() != g) throw DimensionMismatch(what);
    };
    for (const GroupElement& p : picard_) check(p, "BaseVariety: Picard generator length mismatch");
    for (const NamedDivisor& d : divisors_) check(d.cls, "BaseVariety: divisor class length mismatch");
    check(canonical_class_, "BaseVariety: canonical class length mismatch");
    if (ample_direction_) {
        check(*ample_direction_, "BaseVariety: ample direction length mismatch");
        if (cl_.free_rank() != 1)
            throw StructuralFault("BaseVariety: ample direction requires Cl(X) of free rank 1");
        std::vector<Int> fc = cl_.free_coords(*ample_direction_);
        if (fc[0] != 1 && fc[0] != -1)
            throw StructuralFault("BaseVariety: ample direction must generate the free part");
    }
    for (const MarkedPoint& p : marked_points_) {
        if (p.restriction.size() != g)
            throw DimensionMismatch("BaseVariety: restriction map length mismatch");
        std::set<std::size_t> used_coords;
        for (const auto& [div, coord] : p.incident_divisors) {
            if (div >= divisors_.size())
                throw StructuralFault("BaseVariety: incident divisor index out of range");
            if (coord >= p.chart.dim())
                throw StructuralFault("BaseVariety: incident coordinate index out of range");
            if (!used_coords.insert(coord).second)
                throw StructuralFault("BaseVariety: two divisors mapped to one chart coordinate");
        }
    }
    for (const auto& [i, j] : intersections_) {
        if (i >= divisors_.size() || j >= divisors_.size())
            throw StructuralFault("BaseVariety: intersection flag index out of range");
    }
}

std::size_t BaseVariety::divisor_index(const std::string& name) const {
    for (std::size_t i = 0; i < divisors_.size(); ++i)
        if (divisors_[i].name == name) return i;
    throw StructuralFault("BaseVariety: unknown divisor name '" + name + "'");
}

Int BaseVariety::restrict_class(const MarkedPoint& p, const GroupElement& cls) const {
    if (cls.coords.size() != cl_.num_generators())
        throw DimensionMismatch("restrict_class: coordinate length mismatch");
    Int r = 0;
    for (std::size_t i = 0; i < cls.coords.size(); ++i) r += cls.coords[i] * p.restriction[i];
    return exact::mod_floor(r, p.chart.reduced_order);
}

}  // namespace seifert
