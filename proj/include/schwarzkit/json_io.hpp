#pragma once

#include <json.hpp>

#include "schwarzkit/ball.hpp"
#include "schwarzkit/herglotz.hpp"
#include "schwarzkit/holomap.hpp"
#include "schwarzkit/series.hpp"

// JSON wire formats. Complex numbers are [re, im] pairs throughout; measure
// masses are absolute (not divided by 2*pi).
//
//   FunctionSpec: tagged union on "kind":
//     {"kind":"blaschke", "rotation":t, "zeros":[[re,im],...]}
//     {"kind":"herglotz", "measure":{"atoms":[[theta,mass],...], "constant_im":c}}
//     {"kind":"polynomial", "coefficients":[[re,im],...]}
//     {"kind":"moebius", "rotation":t, "center":[re,im]}
//     {"kind":"composition", "outer":{...}, "inner":{...}}
//   PowerSeries:
//     {"vars":n, "max_degree":d, "terms":[{"exponents":[i,j], "coeff":[[re,im],...]}]}
//   BallMap: tagged union on "kind": identity | line_automorphism {"a":[[re,im],[re,im]]}
//     | unitary {"matrix":[...4 complex...]} | product {"z1_map":spec, "z2_scale":s}
//     | composition {"outer":..., "inner":...}

namespace schwarz {

nlohmann::json measure_to_json(const HerglotzData& h);
HerglotzData measure_from_json(const nlohmann::json& j);

nlohmann::json function_spec_to_json(const FunctionSpec& f);
// Parses and certifies composition inners (they must be disc-to-disc).
FunctionSpec function_spec_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

BallMap ball_map_from_json(const nlohmann::json& j);

// Human-readable summary of a FunctionSpec or measure document: variant,
// parameters, certification status, f(0), f'(0), radial limits at the
// built-in probe points 1, i, -1, -i.
std::string describe_document(const nlohmann::json& j);

} // namespace schwarz
