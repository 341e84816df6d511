#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace seifert::exact {

using Int = mpz_class;
using Rat = mpq_class;

// floor division / non-negative remainder, exact for any signs
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);  // gcd(0,0) = 0, always >= 0
Int lcm(const Int& a, const Int& b);
Int gcd_list(const std::vector<Int>& xs);
Int lcm_list(const std::vector<Int>& xs);  // empty list -> 1

struct ExtGcd {
    Int g;  // gcd(|a|,|b|) >= 0
    Int x;
    Int y;  // a*x + b*y = g
};

ExtGcd ext_gcd(const Int& a, const Int& b);

// Inverse of a modulo m (m >= 1); requires gcd(a, m) = 1.
Int inv_mod(const Int& a, const Int& m);

struct Residue {
    Int value;    // 0 <= value < modulus
    Int modulus;  // >= 1
};

// Simultaneous congruences x = r_i (mod m_i). Returns the solution modulo
// lcm(m_i), or nullopt when the system is inconsistent. The empty system
// has solution 0 mod 1.
std::optional<Residue> crt_solve(const std::vector<Residue>& congruences);

}  // namespace seifert::exact
