#pragma once

#include <json.hpp>

#include "z4kit/codes_db.hpp"
#include "z4kit/designs.hpp"
#include "z4kit/extremal.hpp"
#include "z4kit/filter.hpp"

namespace z4kit {

using Json = nlohmann::ordered_json;

Json to_json(const WeightDistribution& w);  // {"<i>": "<count>"} for nonzero counts
Json to_json(const ExtremalityReport& r);
Json to_json(const Verdict& v);
Json to_json(const SearchResult& r);
Json to_json(const AlgBCounts& c);
Json to_json(const Design& d);
Json to_json(const LatticeStats& s);
Json code_summary(const Z4Code& c);

}  // namespace z4kit
