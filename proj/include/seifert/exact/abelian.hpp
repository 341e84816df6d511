#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seifert/exact/smith.hpp"

namespace seifert::exact {

// Coordinates of an element with respect to the generators of a fixed
// FpAbelianGroup. Plain data; every operation takes the group explicitly
// and faults on length mismatch.
struct GroupElement {
    std::vector<Int> coords;

    GroupElement() = default;
    explicit GroupElement(std::vector<Int> c) : coords(std::move(c)) {}
    bool operator==(const GroupElement&) const = default;
};

// Canonical coordinates of an element: one entry per nontrivial torsion
// factor (reduced mod d) followed by the free coordinates.
struct NormalCoords {
    std::vector<Int> torsion;
    std::vector<Int> free_part;

    bool operator==(const NormalCoords&) const = default;
    bool is_zero() const;
};

// Abelian group presented as Z^g modulo the row space of a relation
// matrix. The Smith decomposition of the relations is computed once at
// construction; all queries reduce through it. Immutable and thread-safe.
class FpAbelianGroup {
public:
    // relations.cols() must equal num_generators
    FpAbelianGroup(std::size_t num_generators, IntMatrix relations);

    static FpAbelianGroup free_group(std::size_t n);
    static FpAbelianGroup cyclic(const Int& order);  // order 0 gives Z
    static FpAbelianGroup trivial();

    std::size_t num_generators() const { return num_generators_; }
    const IntMatrix& relations() const { return relations_; }
    const SmithDecomposition& smith() const { return snf_; }

    std::size_t free_rank() const { return free_rank_; }
    // invariant factors > 1 in divisibility order (units dropped)
    const std::vector<Int>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    std::optional<Int> order() const;      // nullopt when infinite
    Int torsion_exponent() const;          // 1 for torsion-free groups

    GroupElement zero() const;
    NormalCoords normal_coords(const GroupElement& g) const;
    // an element whose normal coordinates have the given free part and
    // zero torsion part
    GroupElement element_with_free_coords(const std::vector<Int>& free_coords) const;

    bool is_zero(const GroupElement& g) const;
    bool elements_equal(const GroupElement& a, const GroupElement& b) const;
    std::optional<Int> element_order(const GroupElement& g) const;
    std::vector<Int> free_coords(const GroupElement& g) const;

    // presentations with the same normal form compare equal
    bool same_normal_form(const FpAbelianGroup& other) const;

    // "0", "Z^r", "Z/d1 + Z/d2", "Z^r + Z/d" ... (ASCII form; reports may
    // render their own)
    std::string normal_form_string() const;

private:
    std::size_t num_generators_;
    IntMatrix relations_;
    SmithDecomposition snf_;
    std::vector<Int> torsion_;
    std::size_t free_rank_;

    void check_element(const GroupElement& g) const;
};

// Group presented by the given relation rows on relations.cols() generators.
FpAbelianGroup cokernel(const IntMatrix& relations);

// true iff the cyclic subgroup generated by g is all of G
bool element_generates(const GroupElement& g, const FpAbelianGroup& G);

// true iff g lies in the subgroup of G generated by the elements of H
bool subgroup_membership(const GroupElement& g, const std::vector<GroupElement>& H,
                         const FpAbelianGroup& G);

}  // namespace seifert::exact
