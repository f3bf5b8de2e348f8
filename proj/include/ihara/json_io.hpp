#pragma once

#include <json.hpp>

#include "ihara/entropy.hpp"
#include "ihara/graph.hpp"
#include "ihara/params.hpp"
#include "ihara/shift.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "ihara-lab/1";

// Deterministic serialization: keys in insertion order, floats with 17
// significant digits, exact integers/rationals as decimal strings.
std::string dump_json(const ordered_json& j, int indent = 2);

// %.17g, the round-trip-safe float format used across json/table/csv output.
std::string format_double(double v);

ordered_json to_json(const ValidationReport& r);
ordered_json to_json(const DegreeStats& s);
ordered_json to_json(const Graph& g);
ordered_json to_json(const OrientedEdgeAlphabet& a);
ordered_json to_json(const HashimotoMatrix& t);
ordered_json to_json(const TruncatedSeries& s);
ordered_json to_json(const IntPoly& p);
ordered_json to_json(const SpectralData& s);
ordered_json to_json(const ParamWindow& w);
ordered_json to_json(const AuditReport& r);
ordered_json to_json(const std::vector<PrimeCycle>& primes);

}  // namespace ihara
