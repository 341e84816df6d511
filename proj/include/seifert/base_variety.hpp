#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seifert/exact/abelian.hpp"
#include "seifert/local_model.hpp"

namespace seifert {

using exact::FpAbelianGroup;
using exact::GroupElement;
using exact::Int;

struct NamedDivisor {
    std::string name;
    GroupElement cls;  // class in Cl(X)
};

// A point of X with declared local data: a reduced cyclic chart, the
// restriction homomorphism Cl(X) -> Z/Mred given on generators, and the
// identification of global divisors through the point with chart
// coordinate divisors. Mathematical consistency of the declaration is
// checked by validate(), not here.
struct MarkedPoint {
    std::string name;
    local_model::ReducedChart chart;
    std::vector<Int> restriction;  // one residue mod Mred per Cl(X) generator
    std::map<std::size_t, std::size_t> incident_divisors;  // divisor index -> coordinate index
};

// The declared base: Cl(X) as a finite presentation, the Picard subgroup
// by generators, divisor and canonical classes, an optional ample
// generator of the free part (rank-1 bases only), marked points, and
// optional divisor intersection flags. Immutable after construction.
class BaseVariety {
public:
    BaseVariety(FpAbelianGroup cl, std::vector<std::string> generator_names,
                std::vector<GroupElement> picard, std::vector<NamedDivisor> divisors,
                GroupElement canonical_class,
                std::optional<GroupElement> ample_direction = std::nullopt,
                std::vector<MarkedPoint> marked_points = {},
                std::set<std::pair<std::size_t, std::size_t>> intersections = {});

    const FpAbelianGroup& cl() const { return cl_; }
    const std::vector<std::string>& generator_names() const { return generator_names_; }
    const std::vector<GroupElement>& picard() const { return picard_; }
    const std::vector<NamedDivisor>& divisors() const { return divisors_; }
    const GroupElement& canonical_class() const { return canonical_class_; }
    const std::optional<GroupElement>& ample_direction() const { return ample_direction_; }
    const std::vector<MarkedPoint>& marked_points() const { return marked_points_; }
    const std::set<std::pair<std::size_t, std::size_t>>& intersections() const {
        return intersections_;
    }

    std::size_t divisor_index(const std::string& name) const;

    // value of the point's restriction homomorphism on a class
    Int restrict_class(const MarkedPoint& p, const GroupElement& cls) const;

private:
    FpAbelianGroup cl_;
    std::vector<std::string> generator_names_;
    std::vector<GroupElement> picard_;
    std::vector<NamedDivisor> divisors_;
    GroupElement canonical_class_;
    std::optional<GroupElement> ample_direction_;
    std::vector<MarkedPoint> marked_points_;
    std::set<std::pair<std::size_t, std::size_t>> intersections_;
};

}  // namespace seifert
