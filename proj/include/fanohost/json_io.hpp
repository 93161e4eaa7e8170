#pragma once

// JSON encodings shared by the catalog and the CLI. Integers that do not fit
// in 53 bits are written as decimal strings; rationals as {"num","den"}.

#include <json.hpp>

#include "fanohost/cayley.hpp"
#include "fanohost/criterion.hpp"
#include "fanohost/hodge.hpp"
#include "fanohost/models.hpp"
#include "fanohost/worbifold.hpp"

namespace fano {

using Json = nlohmann::json;

Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);
Json to_json(const Rational& q);

Json to_json(const AmbientModel& a);
AmbientModel ambient_from_json(const Json& j);

/// {"ambient": {...}, "degrees": [...], "general": bool}. Also accepts any
/// object carrying such a model under "model" or "visitor".
Json to_json(const CIModel& ci);
CIModel ci_from_json(const Json& j);

Json to_json(const WeightedCIModel& w);
WeightedCIModel wci_from_json(const Json& j);

/// {"n": n, "h": [[h00, h01, ...], ...]}. Also accepts an object carrying a
/// diamond under "diamond".
Json to_json(const HodgeDiamond& d);
HodgeDiamond diamond_from_json(const Json& j);

Json to_json(const FanoEvidence& e);
Json to_json(const FanoTestResult& r);
Json to_json(const SodShape& s);
Json to_json(const HostDescriptor& hd);
Json to_json(const OrbifoldHostDescriptor& od);
Json to_json(const RuledTestResult& r);
Json to_json(const ObstructionResult& r);
Json to_json(const Bound& b);
Json to_json(const VisitorReport& r);

/// Parses text, turning syntax errors into InvalidInput with the byte offset.
Json parse_json_text(const std::string& text, const std::string& source);
Json load_json_file(const std::string& path);

}  // namespace fano
