#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "qs/orbit.hpp"
#include "qs/regularize.hpp"
#include "qs/repn.hpp"

namespace qs::io {

using json = nlohmann::json;

json to_json(const GaussQ& x);
GaussQ gauss_from_json(const json& j);
json to_json(const TruncScalar& x);
TruncScalar trunc_from_json(const json& j);
json to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);
json to_json(const ZMatrix& m);
json to_json(const RMap& m);
RMap rmap_from_json(const json& j);
REnd rend_from_json(const json& j);

json to_json(const QuiverMult& q);
QuiverMult quiver_from_json(const json& j);

json to_json(const Representation& rep);
Representation rep_from_json(QuiverPtr q, const json& j);

json params_to_json(const QuiverMult& q, const ParamVector& lambda);
// missing vertices default to zero
ParamVector params_from_json(const QuiverMult& q, const json& j);
json dims_to_json(const QuiverMult& q, const DimVector& v);
DimVector dims_from_json(const QuiverMult& q, const json& j);
// "1,0,2" in vertex order, or "a=1,b=0,c=2"
DimVector parse_dims(const QuiverMult& q, std::string_view text);

json to_json(const OrbitSpec& spec);
OrbitSpec orbit_spec_from_json(const json& j);
json to_json(const LegPoint& pt);

json to_json(const QuiverMult& q, const LegDescriptor& leg);
json to_json(const Report& report);

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace qs::io
