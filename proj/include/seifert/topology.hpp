#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "seifert/seifert_data.hpp"

namespace seifert::topology {

using exact::FpAbelianGroup;
using exact::GroupElement;
using exact::Int;
using exact::IntMatrix;

// Pairing data of divisor classes and c1(L) against a Z-basis of
// H_2(X, Z) modulo torsion (pairings against torsion vanish rationally).
struct IntersectionProfile {
    std::size_t h2_rank = 0;
    IntMatrix divisor_pairings;   // one row per divisor, h2_rank columns
    std::vector<Int> l_pairings;  // c1(L) . eta_k

    std::size_t num_divisors() const { return divisor_pairings.rows(); }
};

// H1^orb(X, sum (1 - 1/c_i) D_i): generators g_i, relations c_i g_i = 0
// and sum ([D_i] . eta_k) g_i = 0 per basis class. The hypotheses (X
// smooth, H1(X, Z) = 0, smooth transverse divisors) are asserted by the
// caller; reports stamp that assertion.
FpAbelianGroup h1_orb(const IntersectionProfile& profile, const std::vector<Int>& c);

// H1(Y, Z): generators k, g_1, ..., g_n, relations c_i g_i + b_i k = 0
// and (c1(L) . eta_k) k - sum ([D_i] . eta_k) g_i = 0.
FpAbelianGroup h1_Y(const IntersectionProfile& profile, const std::vector<BranchCoeff>& coeffs);

// Generator m(U) of the lattice of global sections of R^1 f_* Z over a
// connected set with the given fiber multiplicities.
Int section_lattice(const std::vector<Int>& multiplicities);

// The integral class m(X) c1(Y/X) in Cl(X), computed as the bundle class
// of the quotient by mu_{m(X)}.
GroupElement edge_class(const SeifertData& sd);

// Rational Betti numbers b_0 .. b_{2n} of X together with caller-asserted
// nonvanishing of the powers c1^k in H^{2k}(X, Q) for k = 1 .. n.
struct BettiData {
    std::vector<Int> betti;
    std::vector<bool> c1_power_nonzero;

    BettiData(std::vector<Int> betti, std::vector<bool> c1_power_nonzero);
    std::size_t complex_dim() const { return (betti.size() - 1) / 2; }
};

// Y is a rational homology sphere iff H*(X, Q) is the truncated
// polynomial ring on c1: even Betti numbers 1, odd ones 0, and all powers
// of c1 up to dim X nonzero.
bool qhs_check(const BettiData& betti, bool c1_nonzero);

// Inverse of chern_class over a rank-1 torsion-free base: the unique
// ([L], b_i) with 0 <= b_i < c_i hitting the target class, found by
// enumeration over the prod c_i candidate tuples. Requires the orbifold
// H1 computed from the profile to vanish; throws AmbiguityPossible
// otherwise. nullopt when no candidate matches.
std::optional<SeifertData> reconstruct_from_chern(const std::shared_ptr<const BaseVariety>& base,
                                                  const IntersectionProfile& profile,
                                                  const std::vector<Int>& denominators,
                                                  const QClass& target);

}  // namespace seifert::topology
