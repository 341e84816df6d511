#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "seifert/errors.hpp"
#include "seifert/io/document.hpp"

using namespace seifert;
using io::Json;

namespace {

Json p1_document() {
    return Json::parse(R"({
      "schema_version": "1",
      "base": {
        "class_group": {"generators": ["H"], "relations": []},
        "picard": [[1]],
        "canonical_class": [-2],
        "ample_direction": [1],
        "divisors": [{"name": "D1", "class": [1]}, {"name": "D2", "class": [1]}],
        "intersection_profile": {
          "h2_rank": 1,
          "divisor_pairings": [[1], [1]],
          "L_pairings": [-1]
        }
      },
      "seifert": {
        "L": [-1],
        "coeffs": [{"divisor": "D1", "b": 1, "c": 2}, {"divisor": "D2", "b": 2, "c": 3}]
      }
    })");
}

}  // namespace

TEST_CASE("integer JSON policy switches to strings at 2^53") {
    Int small = (Int(1) << 53) - 1;
    Int big = Int(1) << 53;
    CHECK(io::int_to_json(small).is_number_integer());
    CHECK(io::int_to_json(-small).is_number_integer());
    CHECK(io::int_to_json(big).is_string());
    CHECK(io::int_to_json(-big).is_string());
    Int huge("123456789012345678901234567890");
    Json j = io::int_to_json(huge);
    REQUIRE(j.is_string());
    CHECK(io::int_from_json(j, "t") == huge);
    CHECK(io::int_from_json(io::int_to_json(small), "t") == small);
    CHECK_THROWS_AS(io::int_from_json(Json("12x"), "t"), ParseError);
    CHECK_THROWS_AS(io::int_from_json(Json(1.5), "t"), ParseError);
}

TEST_CASE("rational strings are lowest-terms p/q") {
    CHECK(io::rational_string(1, 6) == "1/6");
    CHECK(io::rational_string(4, 6) == "2/3");
    CHECK(io::rational_string(-5, 10) == "-1/2");
    CHECK(io::rational_string(6, 3) == "2");
    CHECK(io::rational_string(0, 7) == "0");
}

TEST_CASE("documents survive a parse/serialize/parse cycle") {
    io::InputDocument doc = io::parse_document(p1_document());
    Json emitted = io::serialize_document(doc);
    io::InputDocument again = io::parse_document(emitted);
    CHECK(io::serialize_document(again) == emitted);
    CHECK(again.base->divisors().size() == 2);
    CHECK(again.seifert->l_class().coords == std::vector<Int>{-1});
    REQUIRE(again.profile.has_value());
    CHECK(again.profile->l_pairings == std::vector<Int>{-1});
}

TEST_CASE("quotient documents rescale the profile pairings") {
    io::InputDocument doc = io::parse_document(p1_document());
    io::InputDocument q = io::quotient_document(doc, 6);
    // L' = 6(-1) + 3 + 4 = 1, and the pairing follows: 6(-1) + 3*1 + 4*1 = 1
    CHECK(q.seifert->l_class().coords == std::vector<Int>{1});
    CHECK(q.profile->l_pairings == std::vector<Int>{1});
    for (const BranchCoeff& bc : q.seifert->coeffs()) CHECK(bc.is_trivial());
    io::InputDocument reparsed = io::parse_document(io::serialize_document(q));
    CHECK(validate(*reparsed.seifert).ok());
}

TEST_CASE("parse failures carry the faulting location") {
    Json j = p1_document();
    j["seifert"]["coeffs"][0]["divisor"] = "nope";
    CHECK_THROWS_WITH_AS(io::parse_document(j), doctest::Contains("nope"), ParseError);

    Json bad_version = p1_document();
    bad_version["schema_version"] = "99";
    CHECK_THROWS_AS(io::parse_document(bad_version), ParseError);

    Json bad_coeff = p1_document();
    bad_coeff["seifert"]["coeffs"][0]["b"] = 5;  // b >= c
    CHECK_THROWS_AS(io::parse_document(bad_coeff), ParseError);
}

TEST_CASE("shared immutable data is safe to read concurrently") {
    io::InputDocument doc = io::parse_document(p1_document());
    const SeifertData& sd = *doc.seifert;
    const QClass reference = chern_class(sd);
    const Int order = global_order(sd);
    std::vector<std::thread> workers;
    std::vector<bool> ok(8, false);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            bool good = true;
            for (int i = 0; i < 50; ++i) {
                QClass c1 = chern_class(sd);
                good = good && qclasses_equal(sd.base().cl(), c1, reference);
                good = good && global_order(sd) == order;
                good = good && class_group_Y(sd).group.is_trivial();
            }
            ok[static_cast<std::size_t>(t)] = good;
        });
    }
    for (auto& w : workers) w.join();
    for (bool g : ok) CHECK(g);
}
