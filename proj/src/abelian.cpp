#include "seifert/exact/abelian.hpp"

#include <sstream>

#include "seifert/errors.hpp"

namespace seifert::exact {

bool NormalCoords::is_zero() const {
    for (const Int& x : torsion)
        if (x != 0) return false;
    for (const Int& x : free_part)
        if (x != 0) return false;
    return true;
}

FpAbelianGroup::FpAbelianGroup(std::size_t num_generators, IntMatrix relations)
    : num_generators_(num_generators),
      relations_(std::move(relations)),
      snf_(smith_normal_form(relations_)),
      free_rank_(0) {
    if (relations_.cols() != num_generators_)
        throw DimensionMismatch("FpAbelianGroup: relation width != generator count");
    for (const Int& d : snf_.diagonal)
        if (d > 1) torsion_.push_back(d);
    free_rank_ = num_generators_ - snf_.rank;
}

FpAbelianGroup FpAbelianGroup::free_group(std::size_t n) {
    return FpAbelianGroup(n, IntMatrix(0, n));
}

FpAbelianGroup FpAbelianGroup::cyclic(const Int& order) {
    IntMatrix rel(1, 1);
    rel(0, 0) = order;
    return FpAbelianGroup(1, std::move(rel));
}

FpAbelianGroup FpAbelianGroup::trivial() {
    return FpAbelianGroup(0, IntMatrix(0, 0));
}

std::optional<Int> FpAbelianGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    Int n = 1;
    for (const Int& d : torsion_) n *= d;
    return n;
}

Int FpAbelianGroup::torsion_exponent() const {
    return torsion_.empty() ? Int(1) : torsion_.back();
}

GroupElement FpAbelianGroup::zero() const {
    return GroupElement(std::vector<Int>(num_generators_));
}

void FpAbelianGroup::check_element(const GroupElement& g) const {
    if (g.coords.size() != num_generators_)
        throw DimensionMismatch("GroupElement: coordinate length does not match group");
}

NormalCoords FpAbelianGroup::normal_coords(const GroupElement& g) const {
    check_element(g);
    // y = V^T x diagonalises Z^g / rowspace: slot i carries Z/d_i for
    // i < rank, a free Z afterwards
    std::vector<Int> y = matrix_apply(snf_.V.transposed(), g.coords);
    NormalCoords out;
    for (std::size_t i = 0; i < snf_.diagonal.size() && i < snf_.rank; ++i) {
        if (snf_.diagonal[i] > 1) out.torsion.push_back(mod_floor(y[i], snf_.diagonal[i]));
    }
    for (std::size_t i = snf_.rank; i < num_generators_; ++i) out.free_part.push_back(y[i]);
    return out;
}

GroupElement FpAbelianGroup::element_with_free_coords(const std::vector<Int>& free_coords) const {
    if (free_coords.size() != free_rank_)
        throw DimensionMismatch("element_with_free_coords: wrong length");
    std::vector<Int> y(num_generators_);
    for (std::size_t i = 0; i < free_rank_; ++i) y[snf_.rank + i] = free_coords[i];
    // x = (V^T)^{-1} y = (V_inv)^T y
    return GroupElement(matrix_apply(snf_.V_inv.transposed(), y));
}

bool FpAbelianGroup::is_zero(const GroupElement& g) const {
    return normal_coords(g).is_zero();
}

bool FpAbelianGroup::elements_equal(const GroupElement& a, const GroupElement& b) const {
    return normal_coords(a) == normal_coords(b);
}

std::optional<Int> FpAbelianGroup::element_order(const GroupElement& g) const {
    NormalCoords nc = normal_coords(g);
    for (const Int& x : nc.free_part)
        if (x != 0) return std::nullopt;
    Int ord = 1;
    for (std::size_t i = 0; i < nc.torsion.size(); ++i)
        ord = lcm(ord, torsion_[i] / gcd(nc.torsion[i], torsion_[i]));
    return ord;
}

std::vector<Int> FpAbelianGroup::free_coords(const GroupElement& g) const {
    return normal_coords(g).free_part;
}

bool FpAbelianGroup::same_normal_form(const FpAbelianGroup& other) const {
    return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
}

std::string FpAbelianGroup::normal_form_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ == 1) {
        os << "Z";
        first = false;
    } else if (free_rank_ > 1) {
        os << "Z^" << free_rank_;
        first = false;
    }
    for (const Int& d : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FpAbelianGroup cokernel(const IntMatrix& relations) {
    return FpAbelianGroup(relations.cols(), relations);
}

bool element_generates(const GroupElement& g, const FpAbelianGroup& G) {
    if (g.coords.size() != G.num_generators())
        throw DimensionMismatch("element_generates: coordinate length does not match group");
    IntMatrix rel = G.relations();
    rel.append_row(g.coords);
    return FpAbelianGroup(G.num_generators(), std::move(rel)).is_trivial();
}

bool subgroup_membership(const GroupElement& g, const std::vector<GroupElement>& H,
                         const FpAbelianGroup& G) {
    if (g.coords.size() != G.num_generators())
        throw DimensionMismatch("subgroup_membership: coordinate length does not match group");
    // solve A x = g over Z, columns of A being the subgroup generators
    // together with the relation rows
    const std::size_t n = G.num_generators();
    IntMatrix A(n, H.size() + G.relations().rows());
    for (std::size_t j = 0; j < H.size(); ++j) {
        if (H[j].coords.size() != n)
            throw DimensionMismatch("subgroup_membership: generator length does not match group");
        for (std::size_t i = 0; i < n; ++i) A(i, j) = H[j].coords[i];
    }
    for (std::size_t j = 0; j < G.relations().rows(); ++j)
        for (std::size_t i = 0; i < n; ++i) A(i, H.size() + j) = G.relations()(j, i);

    SmithDecomposition snf = smith_normal_form(A);
    std::vector<Int> c = matrix_apply(snf.U, g.coords);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < snf.rank) {
            if (mod_floor(c[i], snf.diagonal[i]) != 0) return false;
        } else if (c[i] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace seifert::exact
