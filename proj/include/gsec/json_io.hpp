#pragma once

#include <string>

#include <json.hpp>

#include "gsec/certificate.hpp"
#include "gsec/family.hpp"
#include "gsec/representability.hpp"
#include "gsec/routing.hpp"
#include "gsec/set_function.hpp"

namespace gsec {

using Json = nlohmann::ordered_json;

/// Accepts "p/q" strings and JSON integers. Throws ParseError.
Rational rational_from_json(const Json& j, const std::string& field);
Json to_json(const Rational& r);

/// {"n": int, "edges": [[u, v], ...]} or {"n": int, "complete": true}.
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

Forest forest_from_json(const Graph& g, const Json& j);
Json to_json(const Graph& g, const Forest& f);
Json path_to_json(const PathSeq& p);

SetFunction set_function_from_json(const Json& j, int n);
Json to_json(const SetFunction& g);

RhsTable rhs_from_json(const Json& j, int n);
Json to_json(const RhsTable& f);
Json table_to_json(std::span<const int> values);

PathFamily path_family_from_json(const Json& j);
Json to_json(const PathFamily& r);

/// Family JSON with a "graph" field; `host` is used when the field is absent.
ForestFamily family_from_json(const Json& j, const Graph* host = nullptr);
Json to_json(const ForestFamily& fam);

Json to_json(const Graph& g, const Certificate& c);
Json to_json(const Graph& g, const ReprReport& r);

VrpInstance vrp_from_json(const Json& j);
RcmstInstance rcmst_from_json(const Json& j);
Json to_json(const VrpSolution& s);
Json to_json(const RcmstInstance& inst, const RcmstSolution& s);

/// Parses text, mapping syntax errors to ParseError with the byte offset.
Json parse_json_text(const std::string& text);

}  // namespace gsec
