#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seifert/base_variety.hpp"

namespace seifert {

// One branch coefficient b/c with 0 <= b < c; (0, 1) marks a divisor
// outside the branch set. Normalised to lowest terms at construction so
// the denominators are exactly the orbifold multiplicities.
struct BranchCoeff {
    Int b;
    Int c;

    BranchCoeff() : b(0), c(1) {}
    BranchCoeff(Int b_, Int c_);
    bool is_trivial() const { return b == 0 && c == 1; }
    bool operator==(const BranchCoeff&) const = default;
};

// A rational divisor class: numerator / denominator in Cl(X) tensor Q.
// Equality (torsion dies under tensoring) is decided on the free part
// after cross-multiplication; the integral multiples that survive with
// torsion are exposed separately (the numerator itself is the s(U)-scaled
// class, edge_class gives the m(X)-scaled one).
struct QClass {
    GroupElement numerator;
    Int denominator;  // > 0
};

bool qclasses_equal(const FpAbelianGroup& cl, const QClass& a, const QClass& b);

// Global Seifert data Y(L, sum (b_i/c_i) D_i) over a declared base. One
// coefficient slot per base divisor, so indexing is stable across
// operations. Immutable.
class SeifertData {
public:
    SeifertData(std::shared_ptr<const BaseVariety> base, GroupElement l_class,
                std::vector<BranchCoeff> coeffs);

    const BaseVariety& base() const { return *base_; }
    const std::shared_ptr<const BaseVariety>& base_ptr() const { return base_; }
    const GroupElement& l_class() const { return l_class_; }
    const std::vector<BranchCoeff>& coeffs() const { return coeffs_; }

    Int coefficient_lcm() const;  // lcm of the c_i (1 when branch-free)

private:
    std::shared_ptr<const BaseVariety> base_;
    GroupElement l_class_;
    std::vector<BranchCoeff> coeffs_;
};

struct ValidationReport {
    // least M > 0 with M * b_i / c_i integral and the scaled class in the
    // Picard subgroup; nullopt when none exists up to the search bound
    std::optional<Int> least_trivializing_order;
    Int search_bound;
    // flagged intersecting divisor pairs whose multiplicities are not coprime
    std::vector<std::pair<std::size_t, std::size_t>> coprimality_failures;
    struct PointCheck {
        std::string name;
        bool restriction_kills_relations;
        bool incident_classes_match;
    };
    std::vector<PointCheck> point_checks;

    bool ok() const;
};

// Theorem-level validity plus declared-data consistency. A non-positive
// bound selects the default lcm(c_i) * exponent(Cl/<Pic>) search bound.
ValidationReport validate(const SeifertData& sd, const Int& search_bound = 0);

QClass chern_class(const SeifertData& sd);

// The quotient bundle Y / mu_M: L' = M[L] + sum floor(M b_i / c_i) [D_i]
// and coefficients the fractional parts of M b_i / c_i.
SeifertData quotient_by_mu(const SeifertData& sd, const Int& m);

// m(X) relative to the declared data: lcm of branch denominators, marked
// point multiplicities, and the least trivializing order.
Int global_order(const SeifertData& sd);

Int multiplicity_at(const SeifertData& sd, const MarkedPoint& p);

// Cl(Y) presented on the Cl(X) generators followed by one generator per
// branch divisor, with relations [D_i] = c_i DY_i and [L] + sum b_i DY_i = 0.
struct ClassGroupY {
    FpAbelianGroup group;
    std::vector<std::string> generator_names;
    std::vector<std::size_t> branch_divisors;  // base divisor index per DY generator
    std::vector<exact::NormalCoords> branch_normal_forms;

    // pull a class of Cl(X) back to the Cl(Y) presentation
    GroupElement lift(const GroupElement& cl_x_element) const;
};

ClassGroupY class_group_Y(const SeifertData& sd);

// K_Y = f*K_X + sum (c_i - 1) DY_i in the class_group_Y presentation.
GroupElement canonical_class_Y(const SeifertData& sd);

enum class ContractionType {
    ZeroSectionContractible,
    InfinitySectionContractible,
    Neither,
    Undecidable,
};

std::string to_string(ContractionType t);

ContractionType contraction_type(const SeifertData& sd);

enum class Tristate { False, True, Undecidable };

std::string to_string(Tristate t);

struct SingularityPredicates {
    Tristate q_cartier;
    Tristate log_terminal;
};

// Predicates for the cone obtained by contracting the infinity section;
// requires a positive Chern class when the base is rank 1 with a declared
// ample direction, and reports Undecidable otherwise.
SingularityPredicates singularity_predicates(const SeifertData& sd);

}  // namespace seifert
