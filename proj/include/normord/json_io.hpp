#pragma once

#include "normord/contractions.hpp"
#include "normord/normal_form.hpp"
#include "normord/representation.hpp"
#include "normord/stirling.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace normord {

using json = nlohmann::ordered_json;

/// {"modes": n, "terms": [{"coeff": "...", "creators": [...], "annihilators": [...]}]}
/// in print order; annihilators are listed by mode (j_1..j_n).
json to_json(const NormalForm& nf);
/// Inverse of to_json(NormalForm). Throws std::invalid_argument on schema errors.
NormalForm normal_form_from_json(const json& j);

/// {"pairs": [[p, q], ...]} with one-based positions.
json to_json(const Matching& m);
Matching matching_from_json(const json& j);

/// {"kind": "first"|"second", "params": [...], "entries": [{"index": [...], "value": "..."}]}
json to_json(const StirlingTable& t);
json to_json(const CnrTable& t);
/// Header `i,j,k,l,value` for two modes, `i1..in,jn..j1,value` otherwise.
std::string to_csv(const StirlingTable& t);
std::string to_csv(const CnrTable& t);

json to_json(const RecursionCheck& c);
json to_json(const RecursionReport& r);

/// {"config": {...}, "relations": [{"pair", "expected", "observed", "pass"}]}
json to_json(const RelationReport& r);

}  // namespace normord
