#pragma once

#include "homothety/classifier.hpp"
#include "homothety/simulate.hpp"

#include <string>

namespace homothety {

// Group-spec file format:
// {
//   "dimension": n,
//   "field": {"radicands": [d1, ...]},          // optional; default rational
//   "generators": [
//     {"name": "f", "ratio": literal, "translation": [literal x n]},
//     {"name": "g", "ratio": literal, "center": [literal x n]}   // ratio != 1
//   ]
// }
// Scalar literals follow the parse_scalar grammar and stay strings to keep
// the data exact.
GroupSpec parse_spec_json(const std::string& text);
GroupSpec load_spec_file(const std::string& path);
std::string render_spec_json(const GroupSpec& spec);

Vec parse_point(const std::string& csv, const FieldContextPtr& ctx, int dimension);

std::string report_to_json(const ClassificationReport& report);
std::string closure_to_json(const OrbitClosureDescription& desc);
std::string enumeration_to_json(const GroupSpec& spec, const WordEnumeration& words);
std::string density_to_json(const DensityReport& report);

}  // namespace homothety
