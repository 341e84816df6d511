#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "seifert/errors.hpp"
#include "seifert/exact/abelian.hpp"

using namespace seifert::exact;
using oracles::det_cofactor;
using oracles::enumerate_cokernel_order;

TEST_CASE("ext_gcd basics") {
    auto r = ext_gcd(0, 0);
    CHECK(r.g == 0);
    CHECK(r.x == 0);
    CHECK(r.y == 0);

    r = ext_gcd(12, 8);
    CHECK(r.g == 4);
    CHECK(Int(12) * r.x + Int(8) * r.y == 4);

    SUBCASE("negative arguments keep g nonnegative") {
        for (long a = -10; a <= 10; ++a)
            for (long b = -10; b <= 10; ++b) {
                auto e = ext_gcd(a, b);
                CHECK(e.g >= 0);
                CHECK(Int(a) * e.x + Int(b) * e.y == e.g);
                CHECK(e.g == gcd(Int(a), Int(b)));
            }
    }
}

TEST_CASE("ext_gcd certifies the inverse of the curve example") {
    // b = 2, c = 5: e = 3 is the unique 0 < e < 5 with b*e = 1 mod 5
    long b = 2, c = 5;
    long expected = 0;
    for (long e = 1; e < c; ++e)
        if ((b * e) % c == 1) expected = e;
    CHECK(expected == 3);
    CHECK(ext_gcd(b * expected, c).g == 1);
    CHECK(inv_mod(Int(b), Int(c)) == expected);
}

TEST_CASE("crt_solve examples") {
    auto r = crt_solve({{1, 3}, {1, 4}});
    REQUIRE(r.has_value());
    CHECK(r->value == 1);
    CHECK(r->modulus == 12);

    CHECK_FALSE(crt_solve({{1, 2}, {0, 2}}).has_value());

    r = crt_solve({{2, 3}, {3, 5}});
    REQUIRE(r.has_value());
    CHECK(r->value == 8);  // frozen from the 0..14 scan
    CHECK(r->modulus == 15);

    r = crt_solve({});
    REQUIRE(r.has_value());
    CHECK(r->value == 0);
    CHECK(r->modulus == 1);
}

TEST_CASE("crt_solve agrees with exhaustive scan") {
    oracles::Rng rng(2024);
    std::uniform_int_distribution<long> mod_pick(1, 20);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Residue> sys;
        long prod = 1;
        std::size_t k = count(rng);
        for (std::size_t i = 0; i < k && prod <= 10000; ++i) {
            long m = mod_pick(rng);
            std::uniform_int_distribution<long> res(0, m - 1);
            sys.push_back({res(rng), m});
            prod *= m;
        }
        long l = 1;
        for (const auto& c : sys) l = std::lcm(l, static_cast<long>(c.modulus.get_si()));
        std::optional<long> scan;
        for (long x = 0; x < l; ++x) {
            bool ok = true;
            for (const auto& c : sys)
                if (x % c.modulus.get_si() != c.value.get_si()) ok = false;
            if (ok) {
                scan = x;
                break;
            }
        }
        auto got = crt_solve(sys);
        if (scan) {
            REQUIRE(got.has_value());
            CHECK(got->value == *scan);
            CHECK(got->modulus == l);
        } else {
            CHECK_FALSE(got.has_value());
        }
    }
}

TEST_CASE("smith normal form on frozen examples") {
    SUBCASE("identity") {
        auto snf = smith_normal_form(IntMatrix::identity(3));
        CHECK(snf.diagonal == std::vector<Int>{1, 1, 1});
        CHECK(snf.invariant_factors == std::vector<Int>{1, 1, 1});
        CHECK(snf.rank == 3);
    }
    SUBCASE("zero 2x3") {
        auto snf = smith_normal_form(IntMatrix(2, 3));
        CHECK(snf.rank == 0);
        CHECK(snf.S.is_zero());
        CHECK(cokernel(IntMatrix(2, 3)).free_rank() == 3);
    }
    SUBCASE("diag(2,3) has cyclic cokernel of order 6") {
        IntMatrix a{{2, 0}, {0, 3}};
        auto snf = smith_normal_form(a);
        CHECK(snf.invariant_factors == std::vector<Int>{1, 6});
        auto order = enumerate_cokernel_order(a, 1000);
        REQUIRE(order.has_value());
        CHECK(*order == 6);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    oracles::Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        IntMatrix a = oracles::random_matrix(rng, 6, 9);
        auto snf = smith_normal_form(a);
        CHECK(snf.U * a * snf.V == snf.S);
        CHECK(abs(det_cofactor(snf.U)) == 1);
        CHECK(abs(det_cofactor(snf.V)) == 1);
        CHECK(snf.U * snf.U_inv == IntMatrix::identity(a.rows()));
        CHECK(snf.V * snf.V_inv == IntMatrix::identity(a.cols()));
        for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
            if (snf.diagonal[i + 1] != 0) {
                REQUIRE(snf.diagonal[i] != 0);
                CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
            }
        }
        for (std::size_t i = 0; i < snf.S.rows(); ++i)
            for (std::size_t j = 0; j < snf.S.cols(); ++j)
                if (i != j) CHECK(snf.S(i, j) == 0);
    }
}

TEST_CASE("invariant factors match determinantal divisors") {
    oracles::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix a = oracles::random_matrix(rng, 4, 9);
        auto snf = smith_normal_form(a);
        Int prod = 1;
        for (std::size_t k = 1; k <= snf.diagonal.size(); ++k) {
            Int dk = oracles::determinantal_divisor(a, k);
            if (k <= snf.rank) {
                prod *= snf.diagonal[k - 1];
                CHECK(dk == prod);
            } else {
                CHECK(dk == 0);
            }
        }
    }
}

TEST_CASE("cokernel examples") {
    CHECK(cokernel(IntMatrix(0, 2)).same_normal_form(FpAbelianGroup::free_group(2)));
    CHECK(cokernel(IntMatrix{{5}}).same_normal_form(FpAbelianGroup::cyclic(5)));
    // det of the relation matrix is +-1 (cofactor oracle), so the group dies
    IntMatrix rel{{1, 2, 0}, {2, 0, 3}, {-1, -1, -1}};
    CHECK(abs(det_cofactor(rel)) == 1);
    CHECK(cokernel(rel).is_trivial());
}

TEST_CASE("cokernel is presentation independent") {
    oracles::Rng rng(23);
    std::uniform_int_distribution<long> small(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = oracles::random_matrix(rng, 5, 6);
        FpAbelianGroup g1 = cokernel(a);
        // append an integer combination of existing rows
        std::vector<Int> extra(a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            Int q = small(rng);
            for (std::size_t j = 0; j < a.cols(); ++j) extra[j] += q * a(r, j);
        }
        IntMatrix b = a;
        b.append_row(extra);
        CHECK(g1.same_normal_form(cokernel(b)));
    }
}

TEST_CASE("element_generates matches gcd on cyclic groups") {
    for (long m = 1; m <= 50; ++m) {
        FpAbelianGroup zm = FpAbelianGroup::cyclic(m);
        for (long g = 0; g < m; ++g) {
            bool expected = std::gcd(g, m) == 1;
            CHECK(element_generates(GroupElement{{Int(g)}}, zm) == expected);
        }
    }
    CHECK(element_generates(GroupElement{{1}}, FpAbelianGroup::cyclic(5)));
    CHECK_FALSE(element_generates(GroupElement{{2}}, FpAbelianGroup::cyclic(4)));
    CHECK_FALSE(element_generates(GroupElement{{3}}, FpAbelianGroup::cyclic(12)));
}

TEST_CASE("subgroup membership") {
    FpAbelianGroup z = FpAbelianGroup::free_group(1);
    CHECK(subgroup_membership(GroupElement{{0}}, {}, z));
    CHECK_FALSE(subgroup_membership(GroupElement{{3}}, {GroupElement{{2}}}, z));
    CHECK(subgroup_membership(GroupElement{{4}}, {GroupElement{{2}}}, z));

    FpAbelianGroup z6 = FpAbelianGroup::cyclic(6);
    // <2> = {0, 2, 4} in Z/6
    CHECK(subgroup_membership(GroupElement{{4}}, {GroupElement{{2}}}, z6));
    CHECK_FALSE(subgroup_membership(GroupElement{{3}}, {GroupElement{{2}}}, z6));

    SUBCASE("exhaustive against scan in Z/m") {
        for (long m = 2; m <= 24; ++m) {
            FpAbelianGroup zm = FpAbelianGroup::cyclic(m);
            for (long h = 0; h < m; ++h) {
                std::vector<bool> reachable(static_cast<std::size_t>(m), false);
                for (long k = 0; k < m; ++k) reachable[static_cast<std::size_t>((k * h) % m)] = true;
                for (long g = 0; g < m; ++g)
                    CHECK(subgroup_membership(GroupElement{{Int(g)}}, {GroupElement{{Int(h)}}},
                                              zm) == reachable[static_cast<std::size_t>(g)]);
            }
        }
    }

    SUBCASE("dimension mismatch faults") {
        CHECK_THROWS_AS(subgroup_membership(GroupElement{{1, 2}}, {}, z),
                        seifert::DimensionMismatch);
        CHECK_THROWS_AS(element_generates(GroupElement{{1, 2}}, z), seifert::DimensionMismatch);
    }
}

TEST_CASE("relation rows vanish in normal coordinates") {
    oracles::Rng rng(41);
    std::uniform_int_distribution<long> small(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = oracles::random_matrix(rng, 5, 7);
        FpAbelianGroup g = cokernel(a);
        std::vector<Int> combo(a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            CHECK(g.is_zero(GroupElement{a.row(r)}));
            Int q = small(rng);
            for (std::size_t j = 0; j < a.cols(); ++j) combo[j] += q * a(r, j);
        }
        CHECK(g.is_zero(GroupElement{combo}));
        // elements differing by a relation row compare equal
        if (a.rows() > 0) {
            std::vector<Int> x(a.cols()), y;
            for (std::size_t j = 0; j < a.cols(); ++j) x[j] = small(rng);
            y = x;
            for (std::size_t j = 0; j < a.cols(); ++j) y[j] += a(0, j);
            CHECK(g.elements_equal(GroupElement{x}, GroupElement{y}));
        }
    }
}

TEST_CASE("subgroup membership agrees with closure enumeration") {
    oracles::Rng rng(43);
    std::uniform_int_distribution<long> small(-2, 2);
    std::uniform_int_distribution<long> mod_pick(1, 6);
    std::uniform_int_distribution<std::size_t> hcount(0, 2);
    auto key = [](const NormalCoords& nc) {
        std::string s;
        for (const Int& x : nc.torsion) s += x.get_str() + ",";
        for (const Int& x : nc.free_part) s += x.get_str() + ";";
        return s;
    };
    for (int trial = 0; trial < 120; ++trial) {
        // random finite group Z/m1 + Z/m2
        IntMatrix rel(2, 2);
        rel(0, 0) = mod_pick(rng);
        rel(1, 1) = mod_pick(rng);
        FpAbelianGroup g(2, rel);
        std::vector<GroupElement> h;
        for (std::size_t i = 0, n = hcount(rng); i < n; ++i)
            h.push_back(GroupElement{{Int(small(rng)), Int(small(rng))}});

        // BFS closure of <H> with normal coordinates as canonical keys
        std::set<std::string> members;
        std::vector<GroupElement> frontier{g.zero()};
        members.insert(key(g.normal_coords(g.zero())));
        while (!frontier.empty()) {
            GroupElement cur = frontier.back();
            frontier.pop_back();
            for (const GroupElement& gen : h) {
                std::vector<Int> next = cur.coords;
                for (std::size_t j = 0; j < next.size(); ++j) next[j] += gen.coords[j];
                GroupElement ne{next};
                if (members.insert(key(g.normal_coords(ne))).second) frontier.push_back(ne);
            }
        }
        for (long x = 0; x < rel(0, 0); ++x)
            for (long y = 0; y < rel(1, 1); ++y) {
                GroupElement e{{Int(x), Int(y)}};
                bool expected = members.count(key(g.normal_coords(e))) > 0;
                CHECK(subgroup_membership(e, h, g) == expected);
            }
    }
}

TEST_CASE("normal coordinates and element orders") {
    // Z/2 + Z/6 presented on 3 generators with a redundant one
    IntMatrix rel{{2, 0, 0}, {0, 6, 0}, {0, 0, 1}};
    FpAbelianGroup g(3, rel);
    CHECK(g.free_rank() == 0);
    CHECK(g.torsion() == std::vector<Int>{2, 6});
    CHECK(g.order() == Int(12));
    CHECK(g.torsion_exponent() == 6);
    CHECK(g.normal_form_string() == "Z/2 + Z/6");

    GroupElement e{{1, 1, 1}};
    auto ord = g.element_order(e);
    REQUIRE(ord.has_value());
    Int o = *ord;
    // the smallest positive multiple killing the element
    std::vector<Int> accum(3);
    for (Int k = 1; k <= 12; ++k) {
        for (int i = 0; i < 3; ++i) accum[i] += e.coords[i];
        if (g.is_zero(GroupElement{accum})) {
            CHECK(k == o);
            break;
        }
    }

    SUBCASE("element_with_free_coords round trip") {
        IntMatrix rel2{{0, 4, 0}};
        FpAbelianGroup h(3, rel2);  // Z^2 + Z/4
        CHECK(h.free_rank() == 2);
        GroupElement lifted = h.element_with_free_coords({Int(3), Int(-2)});
        CHECK(h.free_coords(lifted) == std::vector<Int>{3, -2});
        CHECK(h.normal_coords(lifted).torsion == std::vector<Int>{0});
    }
}

TEST_CASE("rationals stay canonical") {
    Rat a(6, 8);
    a.canonicalize();
    CHECK(a.get_num() == 3);
    CHECK(a.get_den() == 4);
    Rat b = a + Rat(1, 4);
    CHECK(b == 1);
    Rat c = Rat(1, 3) - Rat(5, 6);  // arithmetic keeps lowest terms, den > 0
    CHECK(c.get_num() == -1);
    CHECK(c.get_den() == 2);
}
