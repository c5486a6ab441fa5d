#pragma once

#include <string>

#include <json.hpp>

#include "gwzeta/zeta.hpp"

namespace gwzeta {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers below 2^53 and as decimal strings
// above, so consumers never see a rounded value.
Json encode_integer(const Integer& x);
Integer decode_integer(const Json& j);

Json gw_to_json(const GwFq& x);

Json report_to_json(const std::string& variety, const FqTag& f, int order, const ZetaReport& report,
                    const std::vector<std::pair<std::string, bool>>& checks);

Json factors_to_json(const FactorList<GwFq>& factors);

// Count-table or Weil-data document:
//   {"q": 7, "counts": [6, 60, ...]}            (optional "proper", "label")
//   {"q": 7, "weil": [[1,-1],[1,-2,7],[1,-7]]}
// Numbers may be decimal strings for exactness.
Variety variety_from_json(const Json& doc, const std::string& label);
Variety load_variety_file(const std::string& path, long expected_q);

}  // namespace gwzeta
