#pragma once

#include "curvesim/driver.hpp"

#include <string>

namespace curvesim {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Curve files: {"vars":"t","components":[{"num":[..],"den":[..]},x3]},
// coefficients as decimal-free strings "p/q", ascending by degree.
RationalCurve3 parse_curve_string(const std::string& text);
RationalCurve3 parse_curve_file(const std::string& path);
std::string curve_to_string(const RationalCurve3& c, const std::string& name = "");
void write_curve_file(const std::string& path, const RationalCurve3& c,
                      const std::string& name = "");

// Polygon files: {"points":[["x","y","z"], ...]}.
ControlPolygon parse_polygon_string(const std::string& text);
ControlPolygon parse_polygon_file(const std::string& path);

std::string report_to_json_string(const SimilarityReport& rep);
std::string report_to_text(const SimilarityReport& rep);

} // namespace curvesim
