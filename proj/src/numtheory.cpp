#include "seifert/exact/numtheory.hpp"

#include <stdexcept>

namespace seifert::exact {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int gcd_list(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, x);
    return g;
}

Int lcm_list(const std::vector<Int>& xs) {
    Int l = 1;
    for (const Int& x : xs) l = lcm(l, x);
    return l;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    if (m < 1) throw std::invalid_argument("inv_mod: modulus must be >= 1");
    if (m == 1) return 0;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: argument not invertible");
    return inv;
}

std::optional<Residue> crt_solve(const std::vector<Residue>& congruences) {
    Int value = 0;
    Int modulus = 1;
    for (const Residue& c : congruences) {
        if (c.modulus < 1)
            throw std::invalid_argument("crt_solve: modulus must be >= 1");
        // merge x = value (mod modulus) with x = c.value (mod c.modulus)
        ExtGcd e = ext_gcd(modulus, c.modulus);
        Int diff = c.value - value;
        if (mod_floor(diff, e.g) != 0) return std::nullopt;
        Int step = c.modulus / e.g;
        Int k = mod_floor((diff / e.g) * e.x, step);
        value += modulus * k;
        modulus = modulus * step;
        value = mod_floor(value, modulus);
    }
    return Residue{value, modulus};
}

}  // namespace seifert::exact
