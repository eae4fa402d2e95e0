#pragma once

// JSON encodings for weights, profiles, weight systems, Laurent polynomials and
// decomposition files.
//
//   weight         [1, 0, 0] or ["1/2", "1/2"]; non-integral entries are emitted as "p/2"
//   profile        {"-2": 1, "0": 22, "2": 1}
//   weight system  [{"mu": [1, 0], "mult": 1}, ...]
//   laurent poly   {"exponent": coefficient, ...}
//   decomposition  {"n": 1, "b2": 22, "terms": [{"mu": [1], "mult": 1}]}
//
// Decomposition weights may omit trailing zeros; they are padded to the rank.
// Integers too large for int64 are written as decimal strings.

#include "llv/exact.hpp"
#include "llv/llvcalc.hpp"
#include "llv/qchar.hpp"
#include "llv/repcalc.hpp"
#include "llv/rootsystem.hpp"

#include <json.hpp>

#include <string>

namespace llv {

using Json = nlohmann::ordered_json;

/// Parses text, rethrowing syntax errors as InvalidInput with line and column.
Json parse_json_text(const std::string& text, const std::string& source = "input");

Json rational_to_json(const Rational& q);
Json bigint_to_json(const BigInt& z);
BigInt bigint_from_json(const Json& j);

Json weight_to_json(const Weight& w);
/// Reads a weight; when rank is nonzero the weight is padded with zeros to it.
Weight weight_from_json(const Json& j, std::size_t rank = 0);
/// Parses "1,0,0" or "1/2,1/2" as used by the --mu flag.
Weight weight_from_list(const std::string& text, std::size_t rank = 0);

Json profile_to_json(const GradedProfile& p);
GradedProfile profile_from_json(const Json& j);

Json weight_system_to_json(const WeightSystem& ws);
Json laurent_to_json(const LaurentPoly& f);

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

}  // namespace llv
