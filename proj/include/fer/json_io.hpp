#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fer/linsys.hpp"
#include "fer/seshadri.hpp"

namespace fer {

using json = nlohmann::ordered_json;

// Divisor classes: {"a": int, "b": int, "m": [int...], "mx": int|null}.
json divclass_to_json(const DivClass& d);
DivClass divclass_from_json(const json& j);

// Surfaces: {"e", "r", "with_x", "config"}; config is "very_general" or
// {"on_ce": [bool...], "fiber": [int...]}.
json surface_to_json(const SurfaceModel& S);
SurfaceModel surface_from_json(const json& j);

json negclass_to_json(const NegCurveClass& nc);
json seshadri_to_json(const SeshadriResult& r);
json linsys_report_to_json(const LinSysReport& r);
json scan_report_to_json(const ScanReport& r);
std::string scan_report_to_csv(const ScanReport& r);
std::string families_to_csv(const std::vector<ClassFamily>& fams);

// Comma-separated coefficients "a,b,m1,...,mr[,mx]".
DivClass parse_class_string(const std::string& text, const SurfaceModel& S);

ScanGrid scan_grid_from_json(const json& j);

} // namespace fer
