#pragma once

#include <json.hpp>
#include <string>

#include "bcw/endomotive.hpp"

namespace bcw {

// insertion-ordered JSON: payload key order is fixed by construction order,
// so identical inputs serialize to identical bytes
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// all numbers travel as decimal strings; rationals as "p" or "p/q"
Json json_int(const Int& n);
Json json_rat(const Rat& q);
Rat parse_rat(const std::string& s);

Json json_matrix(const IntMatrix& m);
Json json_ideal(const NumberField& k, const FractionalIdeal& a);
Json json_element(const FieldElement& x);

// evaluate a polynomial expression in t at the root of the field polynomial
FieldElement element_from_expr(const NumberField& k, const std::string& expr);
// comma-separated generator expressions -> ideal
FractionalIdeal ideal_from_exprs(const NumberField& k, const std::string& s);

// wraps the body with version and command and dumps with a trailing newline
std::string finish_payload(const std::string& command, const Json& body);

}  // namespace bcw
