#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "seifert/seifert_data.hpp"
#include "seifert/topology.hpp"

namespace seifert::io {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers only when |value| < 2^53, decimal strings
// otherwise; the same policy is applied on output.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const std::string& where);

Json int_vector_to_json(const std::vector<Int>& v);
std::vector<Int> int_vector_from_json(const Json& j, const std::string& where);

// "p/q" in lowest terms ("p" when the denominator is 1)
std::string rational_string(const Int& num, const Int& den);

Json normal_form_to_json(const exact::FpAbelianGroup& g);
// "Z^r (+) Z/d1 (+) ...", rendered with the UTF-8 Z symbol
std::string normal_form_pretty(const exact::FpAbelianGroup& g);

// A parsed input document: the base, the Seifert data over it, and the
// optional intersection profile for the topology commands.
struct InputDocument {
    std::string schema_version;
    std::shared_ptr<const BaseVariety> base;
    std::optional<SeifertData> seifert;
    std::optional<topology::IntersectionProfile> profile;
};

InputDocument parse_document(const Json& j);
InputDocument load_document(const std::string& path_or_dash);  // "-" reads stdin

Json serialize_document(const InputDocument& doc);

// Document for the quotient bundle: same base, quotiented Seifert data,
// and the profile's L pairings rescaled to match the new bundle class.
InputDocument quotient_document(const InputDocument& doc, const Int& m);

}  // namespace seifert::io
