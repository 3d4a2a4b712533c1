#pragma once

#include <json.hpp>

#include "qsieve/pipeline.hpp"

namespace qsieve {

// JSON views of the module results. Integers are decimal strings, reals are doubles,
// key order is fixed by insertion.
using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// {"schema_version": 1, "kind": kind, "result": body}
Json envelope(const std::string& kind, Json body);
std::string dump(const Json& j);  // 2-space indent, trailing newline

Json to_json(const QuadField& f);
Json to_json(const FundamentalUnit& u);
Json to_json(const UnitGenusReport& g);
Json to_json(const NebentypusSpec& e);
Json to_json(const ChiLocalData& c);
Json to_json(const CompatibilityReport& c);
Json to_json(const TraceResult& t);
Json to_json(const LevelRecipe& l);
Json to_json(const IrredBound& b);
Json to_json(const SieveVerdict& v);
Json to_json(const BoundBreakdown& b);
Json to_json(const ThresholdResult& t);
Json to_json(const SolutionRecord& s);
Json to_json(const PipelineReport& r);

}  // namespace qsieve
