#include "seifert/topology.hpp"

#include "seifert/errors.hpp"

namespace seifert::topology {

using exact::lcm;
using exact::Rat;

FpAbelianGroup h1_orb(const IntersectionProfile& profile, const std::vector<Int>& c) {
    const std::size_t n = profile.num_divisors();
    if (c.size() != n) throw DimensionMismatch("h1_orb: one multiplicity per divisor required");
    if (profile.divisor_pairings.cols() != profile.h2_rank)
        throw DimensionMismatch("h1_orb: pairing matrix width != h2 rank");
    IntMatrix rel(0, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> row(n);
        row[i] = c[i];
        rel.append_row(row);
    }
    for (std::size_t k = 0; k < profile.h2_rank; ++k) {
        std::vector<Int> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = profile.divisor_pairings(i, k);
        rel.append_row(row);
    }
    return FpAbelianGroup(n, std::move(rel));
}

FpAbelianGroup h1_Y(const IntersectionProfile& profile, const std::vector<BranchCoeff>& coeffs) {
    const std::size_t n = profile.num_divisors();
    if (coeffs.size() != n) throw DimensionMismatch("h1_Y: one coefficient per divisor required");
    if (profile.divisor_pairings.cols() != profile.h2_rank)
        throw DimensionMismatch("h1_Y: pairing matrix width != h2 rank");
    if (profile.l_pairings.size() != profile.h2_rank)
        throw DimensionMismatch("h1_Y: L pairing length != h2 rank");
    // generator 0 is the fiber class k, then g_1 .. g_n
    IntMatrix rel(0, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> row(n + 1);
        row[0] = coeffs[i].b;
        row[1 + i] = coeffs[i].c;
        rel.append_row(row);
    }
    for (std::size_t k = 0; k < profile.h2_rank; ++k) {
        std::vector<Int> row(n + 1);
        row[0] = profile.l_pairings[k];
        for (std::size_t i = 0; i < n; ++i) row[1 + i] = -profile.divisor_pairings(i, k);
        rel.append_row(row);
    }
    return FpAbelianGroup(n + 1, std::move(rel));
}

Int section_lattice(const std::vector<Int>& multiplicities) {
    if (multiplicities.empty())
        throw StructuralFault("section_lattice: multiplicity list must be non-empty");
    Int m = 1;
    for (const Int& x : multiplicities) {
        if (x < 1) throw StructuralFault("section_lattice: multiplicities must be positive");
        m = lcm(m, x);
    }
    return m;
}

GroupElement edge_class(const SeifertData& sd) {
    return quotient_by_mu(sd, global_order(sd)).l_class();
}

BettiData::BettiData(std::vector<Int> betti_, std::vector<bool> c1_power_nonzero_)
    : betti(std::move(betti_)), c1_power_nonzero(std::move(c1_power_nonzero_)) {
    if (betti.empty() || betti.size() % 2 == 0)
        throw StructuralFault("BettiData: need b_0 .. b_{2n} for some n >= 0");
    if (betti[0] != 1) throw StructuralFault("BettiData: b_0 = 1 required (connected X)");
    if (c1_power_nonzero.size() != complex_dim())
        throw DimensionMismatch("BettiData: one power flag per k = 1 .. dim X required");
}

bool qhs_check(const BettiData& betti, bool c1_nonzero) {
    if (!c1_nonzero) return false;
    for (std::size_t k = 0; k < betti.betti.size(); ++k) {
        if (k % 2 == 0 && betti.betti[k] != 1) return false;
        if (k % 2 == 1 && betti.betti[k] != 0) return false;
    }
    for (bool flag : betti.c1_power_nonzero)
        if (!flag) return false;
    return true;
}

std::optional<SeifertData> reconstruct_from_chern(const std::shared_ptr<const BaseVariety>& base,
                                                  const IntersectionProfile& profile,
                                                  const std::vector<Int>& denominators,
                                                  const QClass& target) {
    const FpAbelianGroup& cl = base->cl();
    if (cl.free_rank() != 1 || !cl.torsion().empty())
        throw PreconditionFailed("reconstruct_from_chern: Cl(X) must be free of rank 1");
    if (denominators.size() != base->divisors().size())
        throw DimensionMismatch("reconstruct_from_chern: one denominator per divisor required");
    if (!h1_orb(profile, denominators).is_trivial())
        throw AmbiguityPossible("reconstruct_from_chern: orbifold H1 is nonzero");

    const Int target_den = target.denominator;
    const Int target_num = cl.free_coords(target.numerator)[0];
    std::vector<Int> divisor_deg(denominators.size());
    for (std::size_t i = 0; i < denominators.size(); ++i)
        divisor_deg[i] = cl.free_coords(base->divisors()[i].cls)[0];

    const std::size_t n = denominators.size();
    std::vector<Int> b(n);
    for (;;) {
        // L = target - sum (b_i / c_i) [D_i] must have an integral free
        // coordinate
        Rat l(target_num, target_den);
        for (std::size_t i = 0; i < n; ++i) l -= Rat(b[i] * divisor_deg[i], denominators[i]);
        l.canonicalize();
        if (l.get_den() == 1) {
            std::vector<BranchCoeff> coeffs;
            coeffs.reserve(n);
            for (std::size_t i = 0; i < n; ++i) coeffs.emplace_back(b[i], denominators[i]);
            return SeifertData(base, cl.element_with_free_coords({Int(l.get_num())}),
                               std::move(coeffs));
        }
        // next candidate tuple in the box prod [0, c_i)
        std::size_t i = 0;
        while (i < n && ++b[i] == denominators[i]) b[i++] = 0;
        if (i == n) break;
    }
    return std::nullopt;
}

}  // namespace seifert::topology
