#include "qs_cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qs/error.hpp"

namespace qs::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidValue, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw Error(ErrorCode::InvalidValue, std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

int as_order(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    throw Error(ErrorCode::InvalidValue, std::string(what) + " must be a positive integer");
  }
  return j.get<int>();
}

ModShape shape_from_json(const json& j) { return {as_size(field(j, "rank"), "rank"), as_order(field(j, "order"), "order")}; }

json shape_to_json(const ModShape& s) { return {{"rank", s.rank}, {"order", s.order}}; }

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::InvalidValue, "expected an integer, got '" + s + "'");
  return value;
}

}  // namespace

json to_json(const GaussQ& x) { return x.str(); }

GaussQ gauss_from_json(const json& j) {
  if (j.is_number_integer()) return GaussQ(j.get<std::int64_t>());
  if (j.is_string()) return GaussQ::parse(j.get<std::string>());
  throw Error(ErrorCode::InvalidValue, "expected a number string such as \"1/2+3i\"");
}

json to_json(const TruncScalar& x) {
  json out = json::array();
  for (const auto& c : x.coeffs()) out.push_back(to_json(c));
  return out;
}

TruncScalar trunc_from_json(const json& j) {
  if (j.is_string()) return TruncScalar::parse(j.get<std::string>());
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidValue, "expected a non-empty coefficient array");
  std::vector<GaussQ> coeffs;
  for (const auto& c : j) coeffs.push_back(gauss_from_json(c));
  return TruncScalar(std::move(coeffs));
}

json to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

QMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidValue, "expected a matrix as an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  QMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = gauss_from_json(j[r][c]);
  }
  return out;
}

json to_json(const ZMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const RMap& m) {
  return {{"src", shape_to_json(m.src())}, {"dst", shape_to_json(m.dst())}, {"base", m.base()}, {"flat", to_json(m.flat())}};
}

RMap rmap_from_json(const json& j) {
  ModShape src = shape_from_json(field(j, "src"));
  ModShape dst = shape_from_json(field(j, "dst"));
  QMatrix flat = matrix_from_json(field(j, "flat"));
  if (flat.rows() == 0 && dst.dim() == 0) flat = QMatrix(0, src.dim());
  return RMap(src, dst, as_order(field(j, "base"), "base"), std::move(flat));
}

REnd rend_from_json(const json& j) { return REnd(rmap_from_json(j)); }

json to_json(const QuiverMult& q) {
  json vertices = json::array();
  for (const auto& v : q.vertices()) vertices.push_back({{"name", v.name}, {"mult", v.mult}});
  json arrows = json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"name", a.name}, {"source", q.vertices()[a.source].name}, {"target", q.vertices()[a.target].name}});
  }
  return {{"vertices", vertices}, {"arrows", arrows}};
}

QuiverMult quiver_from_json(const json& j) {
  std::vector<Vertex> vertices;
  for (const auto& v : field(j, "vertices")) {
    vertices.push_back({field(v, "name").get<std::string>(), as_order(field(v, "mult"), "mult")});
  }
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].name == name) return i;
    }
    throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
  };
  std::vector<Arrow> arrows;
  for (const auto& a : field(j, "arrows")) {
    arrows.push_back({field(a, "name").get<std::string>(), index(field(a, "source").get<std::string>()),
                      index(field(a, "target").get<std::string>())});
  }
  return QuiverMult(std::move(vertices), std::move(arrows));
}

json to_json(const Representation& rep) {
  const QuiverMult& q = rep.quiver();
  DoubleQuiver dq(q);
  json maps = json::object();
  for (std::size_t h = 0; h < dq.size(); ++h) {
    std::string name = q.arrows()[dq[h].original].name + (dq[h].sign > 0 ? "" : "~");
    maps[name] = to_json(rep.map(h));
  }
  return {{"v", dims_to_json(q, rep.dims())}, {"maps", maps}};
}

Representation rep_from_json(QuiverPtr q, const json& j) {
  DimVector v = dims_from_json(*q, field(j, "v"));
  DoubleQuiver dq(*q);
  const json& maps = field(j, "maps");
  std::vector<RMap> out;
  for (std::size_t h = 0; h < dq.size(); ++h) {
    std::string name = q->arrows()[dq[h].original].name + (dq[h].sign > 0 ? "" : "~");
    if (!maps.contains(name)) throw Error(ErrorCode::InvalidValue, "missing map for arrow '" + name + "'");
    out.push_back(rmap_from_json(maps.at(name)));
  }
  return Representation(std::move(q), std::move(v), std::move(out));
}

json params_to_json(const QuiverMult& q, const ParamVector& lambda) {
  json out = json::object();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) out[q.vertices()[i].name] = to_json(lambda[i]);
  return out;
}

ParamVector params_from_json(const QuiverMult& q, const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidValue, "parameters must be an object keyed by vertex");
  for (const auto& [name, value] : j.items()) q.vertex_index(name);
  ParamVector out = zero_params(q);
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const std::string& name = q.vertices()[i].name;
    if (!j.contains(name)) continue;
    const json& value = j.at(name);
    const bool bare = value.is_number() || (value.is_string() && value.get<std::string>().find('[') == std::string::npos);
    out[i] = bare ? TruncScalar::constant(q.mult(i), gauss_from_json(value)) : trunc_from_json(value);
  }
  check_params(q, out);
  return out;
}

json dims_to_json(const QuiverMult& q, const DimVector& v) {
  json out = json::object();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) out[q.vertices()[i].name] = v[i];
  return out;
}

DimVector dims_from_json(const QuiverMult& q, const json& j) {
  if (j.is_array()) {
    if (j.size() != q.vertex_count()) throw Error(ErrorCode::LengthMismatch, "dimension vector length");
    return j.get<DimVector>();
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidValue, "dimension vector must be an object or array");
  for (const auto& [name, value] : j.items()) q.vertex_index(name);
  DimVector out(q.vertex_count(), 0);
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const std::string& name = q.vertices()[i].name;
    if (j.contains(name)) out[i] = j.at(name).get<std::int64_t>();
  }
  return out;
}

DimVector parse_dims(const QuiverMult& q, std::string_view text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      items.push_back(trim(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  items.push_back(trim(current));
  bool named = text.find('=') != std::string_view::npos;
  if (!named) {
    if (items.size() != q.vertex_count()) throw Error(ErrorCode::LengthMismatch, "dimension vector length");
    DimVector out;
    for (const auto& s : items) out.push_back(parse_int(s));
    return out;
  }
  DimVector out(q.vertex_count(), 0);
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidValue, "expected name=value, got '" + s + "'");
    out[q.vertex_index(trim(s.substr(0, eq)))] = parse_int(trim(s.substr(eq + 1)));
  }
  return out;
}

json to_json(const OrbitSpec& spec) {
  json blocks = json::array();
  for (const auto& b : spec.blocks()) blocks.push_back({{"dim", b.dim}, {"theta", to_json(b.theta)}});
  return {{"d", spec.order()}, {"blocks", blocks}};
}

OrbitSpec orbit_spec_from_json(const json& j) {
  std::vector<OrbitBlock> blocks;
  for (const auto& b : field(j, "blocks")) blocks.push_back({as_size(field(b, "dim"), "dim"), trunc_from_json(field(b, "theta"))});
  return OrbitSpec(as_order(field(j, "d"), "d"), std::move(blocks));
}

json to_json(const LegPoint& pt) {
  json down = json::array();
  json up = json::array();
  for (const auto& m : pt.down) down.push_back(to_json(m));
  for (const auto& m : pt.up) up.push_back(to_json(m));
  return {{"a", to_json(pt.a)}, {"b", to_json(pt.b)}, {"down", down}, {"up", up}};
}

json to_json(const QuiverMult& q, const LegDescriptor& leg) {
  json names = json::array();
  for (auto v : leg.vertices) names.push_back(q.vertices()[v].name);
  return {{"vertices", names}, {"d", leg.d}, {"length", leg.length()}};
}

json to_json(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return {{"ok", report.ok()}, {"failures", report.failures()}, {"checks", checks}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidValue, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidValue, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace qs::io
