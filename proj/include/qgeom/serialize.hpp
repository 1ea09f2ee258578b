#pragma once

// JSON/CSV renderings of the result types. Field order is fixed by
// construction and every float is printed with 17 significant digits, so
// identical inputs give byte-identical output.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "qgeom/evolution.hpp"
#include "qgeom/optimize.hpp"
#include "qgeom/projective.hpp"
#include "qgeom/uncertainty.hpp"

namespace qgeom {

using Json = nlohmann::ordered_json;

std::string format_double(double v);

/// Compact dump; numbers via format_double, non-finite as null.
std::string dump_json(const Json& j);

Json to_json(const UncertaintyReport& r);
Json to_json(const TriangleReport& r);
Json to_json(const MinimalConditionResult& m);
Json to_json(const OptimizeResult& r);
Json state_to_json(const State& s);  // [[re, im], ...]

/// Header row of field names, then one row of values.
void write_report_csv(const UncertaintyReport& r, std::ostream& os);

/// Columns t, re0, im0, …, fs_speed, std_dev.
void write_flow_csv(const FlowTrace& trace, std::ostream& os);

}  // namespace qgeom
