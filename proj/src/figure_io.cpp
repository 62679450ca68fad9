#include "figcmp/figure_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace figcmp {

namespace {

using json = nlohmann::ordered_json;

std::string json_type_name(const json& j) { return j.type_name(); }

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
  throw parse_error("at " + (path.empty() ? "(root)" : path) + ": " + what);
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail_at(path, "expected a number, got " + json_type_name(j));
  return j.get<double>();
}

bool get_bool(const json& j, const char* key, const std::string& path,
              bool fallback, bool required = false) {
  if (!j.contains(key)) {
    if (required) fail_at(path, std::string("missing field '") + key + "'");
    return fallback;
  }
  if (!j[key].is_boolean()) fail_at(path + "." + key, "expected a boolean");
  return j[key].get<bool>();
}

Vec2 get_vec2(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) fail_at(path, std::string("missing field '") + key + "'");
  const json& v = j[key];
  if (!v.is_array() || v.size() != 2) {
    fail_at(path + "." + key, "expected [x, y]");
  }
  return {get_number(v[0], path), get_number(v[1], path)};
}

Geometry parse_geometry(const std::string& tag, const std::string& path) {
  if (tag == "euclidean") return Geometry::Euclidean;
  if (tag == "hyperbolic_disc") return Geometry::HyperbolicDisc;
  if (tag == "hyperbolic_half_plane") return Geometry::HyperbolicHalfPlane;
  if (tag == "elliptic") return Geometry::Elliptic;
  fail_at(path, "unknown geometry tag '" + tag + "'");
}

Point parse_point_coords(const json& v, Geometry g, const std::string& path) {
  if (!v.is_array()) fail_at(path, "expected a coordinate array");
  try {
    if (g == Geometry::Elliptic) {
      if (v.size() != 3) fail_at(path, "elliptic points need [x, y, z]");
      return Point::elliptic(get_number(v[0], path), get_number(v[1], path),
                             get_number(v[2], path));
    }
    if (v.size() != 2) fail_at(path, "expected [x, y]");
    double x = get_number(v[0], path), y = get_number(v[1], path);
    switch (g) {
      case Geometry::Euclidean: return Point::euclidean(x, y);
      case Geometry::HyperbolicDisc: return Point::disc(x, y);
      case Geometry::HyperbolicHalfPlane: return Point::half_plane(x, y);
      default: break;
    }
  } catch (const degenerate_input_error& e) {
    fail_at(path, e.what());
  }
  fail_at(path, "bad point");
}

json point_coords(const Point& p) {
  if (p.geometry == Geometry::Elliptic) return json::array({p.x, p.y, p.z});
  return json::array({p.x, p.y});
}

SymbolicFigure parse_node(const json& j, Geometry g, const std::string& path);

SymbolicFigure parse_orbit(const json& j, Geometry g, const std::string& path) {
  OrbitFigure o;
  o.geometry = g;
  if (!j.contains("omega")) fail_at(path, "orbit needs 'omega'");
  const json& om = j["omega"];
  if (om.is_string()) {
    std::string tok = om.get<std::string>();
    if (tok != "pi*sqrt2") {
      fail_at(path + ".omega", "unknown omega token '" + tok + "' (use \"pi*sqrt2\" or a number)");
    }
    o.omega = OmegaSpec::pi_sqrt2();
  } else if (om.is_number()) {
    o.omega = OmegaSpec::numeric(om.get<double>());
  } else {
    fail_at(path + ".omega", "expected \"pi*sqrt2\" or a number");
  }
  o.index_from = j.value("index_from", 0L);
  if (j.contains("exclude")) {
    if (!j["exclude"].is_array()) fail_at(path + ".exclude", "expected an array");
    for (const json& e : j["exclude"]) o.exclude.push_back(e.get<long>());
  }
  o.radius_param = j.value("radius_param", g == Geometry::Euclidean ? 1.0 : 0.5);
  if (j.contains("truncation")) o.truncation = j["truncation"].get<long>();
  try {
    return SymbolicFigure::orbit(std::move(o));
  } catch (const geom_error& e) {
    fail_at(path, e.what());
  }
}

SymbolicFigure parse_node(const json& j, Geometry g, const std::string& path) {
  if (!j.is_object()) fail_at(path, "expected a figure object");
  if (!j.contains("type")) fail_at(path, "missing 'type' tag");
  std::string type = j["type"].get<std::string>();
  try {
    if (type == "points") {
      if (!j.contains("points") || !j["points"].is_array()) {
        fail_at(path, "'points' needs a point array");
      }
      std::vector<Point> pts;
      std::size_t i = 0;
      for (const json& v : j["points"]) {
        pts.push_back(parse_point_coords(v, g, path + ".points[" + std::to_string(i++) + "]"));
      }
      return SymbolicFigure::finite(FiniteFigure(g, std::move(pts)));
    }
    if (type == "half_plane") {
      return SymbolicFigure::half_plane(g, get_vec2(j, "normal", path),
                                        j.value("offset", 0.0),
                                        get_bool(j, "closed", path, true));
    }
    if (type == "half_line") {
      return SymbolicFigure::half_line(get_vec2(j, "origin", path),
                                       get_vec2(j, "direction", path),
                                       get_bool(j, "include_origin", path, true));
    }
    if (type == "segment") {
      return SymbolicFigure::segment(get_vec2(j, "p1", path), get_vec2(j, "p2", path),
                                     get_bool(j, "include_p1", path, true),
                                     get_bool(j, "include_p2", path, true));
    }
    if (type == "disc") {
      return SymbolicFigure::disc(get_vec2(j, "center", path), j.value("radius", 1.0),
                                  get_bool(j, "closed", path, true));
    }
    if (type == "angle_wedge") {
      return SymbolicFigure::wedge(get_vec2(j, "vertex", path),
                                   get_vec2(j, "dir1", path),
                                   get_vec2(j, "dir2", path),
                                   get_bool(j, "closed", path, true));
    }
    if (type == "single_point") {
      if (!j.contains("point")) fail_at(path, "'single_point' needs 'point'");
      return SymbolicFigure::single_point(parse_point_coords(j["point"], g, path + ".point"));
    }
    if (type == "line") {
      return SymbolicFigure::line(get_vec2(j, "through", path),
                                  get_vec2(j, "direction", path));
    }
    if (type == "arc") {
      if (!j.contains("theta1") || !j.contains("theta2")) {
        fail_at(path, "'arc' needs theta1 and theta2");
      }
      return SymbolicFigure::arc(g, get_vec2(j, "center", path),
                                 j.value("radius", 1.0), j["theta1"].get<double>(),
                                 j["theta2"].get<double>(),
                                 get_bool(j, "include_ends", path, true));
    }
    if (type == "orbit") return parse_orbit(j, g, path);
    if (type == "union") {
      if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty()) {
        fail_at(path, "'union' needs a nonempty 'parts' array");
      }
      std::vector<SymbolicFigure> parts;
      std::size_t i = 0;
      for (const json& part : j["parts"]) {
        parts.push_back(parse_node(part, g, path + ".parts[" + std::to_string(i++) + "]"));
      }
      return union_of(std::move(parts));
    }
    if (type == "difference") {
      if (!j.contains("a") || !j.contains("b")) fail_at(path, "'difference' needs 'a' and 'b'");
      return difference(parse_node(j["a"], g, path + ".a"),
                        parse_node(j["b"], g, path + ".b"));
    }
    if (type == "complement") {
      if (!j.contains("a")) fail_at(path, "'complement' needs 'a'");
      return complement(parse_node(j["a"], g, path + ".a"));
    }
  } catch (const parse_error&) {
    throw;
  } catch (const geom_error& e) {
    fail_at(path, e.what());
  }
  fail_at(path, "unknown figure type '" + type + "'");
}

json serialize_node(const FigureNode& node, Geometry g);

json serialize_parts(const std::vector<FigureNodePtr>& parts, Geometry g) {
  json arr = json::array();
  for (const auto& p : parts) arr.push_back(serialize_node(*p, g));
  return arr;
}

json serialize_node(const FigureNode& node, Geometry g) {
  return std::visit(
      [&](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        json j;
        if constexpr (std::is_same_v<T, HalfPlanePrim>) {
          j["type"] = "half_plane";
          j["normal"] = {n.normal.x, n.normal.y};
          j["offset"] = n.offset;
          j["closed"] = n.closed;
        } else if constexpr (std::is_same_v<T, HalfLinePrim>) {
          j["type"] = "half_line";
          j["origin"] = {n.origin.x, n.origin.y};
          j["direction"] = {n.direction.x, n.direction.y};
          j["include_origin"] = n.include_origin;
        } else if constexpr (std::is_same_v<T, SegmentPrim>) {
          j["type"] = "segment";
          j["p1"] = {n.a.x, n.a.y};
          j["p2"] = {n.b.x, n.b.y};
          j["include_p1"] = n.include_a;
          j["include_p2"] = n.include_b;
        } else if constexpr (std::is_same_v<T, DiscPrim>) {
          j["type"] = "disc";
          j["center"] = {n.center.x, n.center.y};
          j["radius"] = n.radius;
          j["closed"] = n.closed;
        } else if constexpr (std::is_same_v<T, WedgePrim>) {
          j["type"] = "angle_wedge";
          j["vertex"] = {n.vertex.x, n.vertex.y};
          j["dir1"] = {n.dir1.x, n.dir1.y};
          j["dir2"] = {n.dir2.x, n.dir2.y};
          j["closed"] = n.closed;
        } else if constexpr (std::is_same_v<T, SinglePointPrim>) {
          j["type"] = "single_point";
          j["point"] = point_coords(n.p);
        } else if constexpr (std::is_same_v<T, LinePrim>) {
          j["type"] = "line";
          j["through"] = {n.through.x, n.through.y};
          j["direction"] = {n.direction.x, n.direction.y};
        } else if constexpr (std::is_same_v<T, ArcPrim>) {
          j["type"] = "arc";
          j["center"] = {n.center.x, n.center.y};
          j["radius"] = n.radius;
          j["theta1"] = n.theta1;
          j["theta2"] = n.theta2;
          j["include_ends"] = n.include_ends;
        } else if constexpr (std::is_same_v<T, FiniteLeaf>) {
          j["type"] = "points";
          json pts = json::array();
          for (const Point& p : n.fig.points) pts.push_back(point_coords(p));
          j["points"] = std::move(pts);
        } else if constexpr (std::is_same_v<T, OrbitLeaf>) {
          j["type"] = "orbit";
          if (n.orbit.omega.kind == OmegaSpec::Kind::pi_sqrt2) {
            j["omega"] = "pi*sqrt2";
          } else {
            j["omega"] = n.orbit.omega.numeric_value;
          }
          j["index_from"] = n.orbit.index_from;
          if (!n.orbit.exclude.empty()) j["exclude"] = n.orbit.exclude;
          j["radius_param"] = n.orbit.radius_param;
          if (n.orbit.truncation) j["truncation"] = *n.orbit.truncation;
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          j["type"] = "union";
          j["parts"] = serialize_parts(n.parts, g);
        } else if constexpr (std::is_same_v<T, DifferenceNode>) {
          j["type"] = "difference";
          j["a"] = serialize_node(*n.a, g);
          j["b"] = serialize_node(*n.b, g);
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          j["type"] = "complement";
          j["a"] = serialize_node(*n.a, g);
        }
        return j;
      },
      node.v);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Convert the byte offset into line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error("line " + std::to_string(line) + ", column " +
                      std::to_string(col) + ": " + e.what());
  }
}

}  // namespace

std::string serialize_figure(const SymbolicFigure& f) {
  json j;
  j["geometry"] = to_string(f.geometry());
  j["figure"] = serialize_node(f.root(), f.geometry());
  return j.dump(2) + "\n";
}

SymbolicFigure parse_figure(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail_at("", "expected a figure document object");
  if (!j.contains("geometry")) fail_at("", "missing 'geometry'");
  Geometry g = parse_geometry(j["geometry"].get<std::string>(), "geometry");
  if (!j.contains("figure")) fail_at("", "missing 'figure'");
  return parse_node(j["figure"], g, "figure");
}

std::string serialize_witness(const Isometry& f) {
  json j;
  j["geometry"] = to_string(f.geometry());
  if (f.is<EuclideanIsometry>()) {
    const auto& e = f.as<EuclideanIsometry>();
    j["kind"] = "euclidean";
    j["angle"] = e.angle;
    j["reflect"] = e.reflect;
    j["translation"] = {e.translation.x, e.translation.y};
  } else if (f.is<MobiusIsometry>()) {
    const auto& m = f.as<MobiusIsometry>();
    j["kind"] = "mobius";
    j["a"] = {m.a.real(), m.a.imag()};
    j["b"] = {m.b.real(), m.b.imag()};
    j["conjugate"] = m.conjugate;
  } else if (f.is<HalfPlaneIsometry>()) {
    const auto& h = f.as<HalfPlaneIsometry>();
    j["kind"] = "mobius";
    j["matrix"] = {h.a, h.b, h.c, h.d};
    j["reflect"] = h.reflect;
  } else {
    const auto& m = f.as<EllipticIsometry>().m;
    j["kind"] = "elliptic";
    j["matrix"] = {json::array({m[0], m[1], m[2]}), json::array({m[3], m[4], m[5]}),
                   json::array({m[6], m[7], m[8]})};
  }
  return j.dump(2) + "\n";
}

Isometry parse_witness(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail_at("", "expected a witness document object");
  if (!j.contains("geometry")) fail_at("", "missing 'geometry'");
  Geometry g = parse_geometry(j["geometry"].get<std::string>(), "geometry");
  std::string kind = j.value("kind", "");
  try {
    if (g == Geometry::Euclidean) {
      if (kind != "euclidean") fail_at("kind", "euclidean geometry needs kind 'euclidean'");
      EuclideanIsometry e;
      e.angle = j.value("angle", 0.0);
      e.reflect = j.value("reflect", false);
      Vec2 t = get_vec2(j, "translation", "");
      e.translation = t;
      return Isometry(e);
    }
    if (g == Geometry::HyperbolicDisc) {
      if (kind != "mobius") fail_at("kind", "disc geometry needs kind 'mobius'");
      Vec2 a = get_vec2(j, "a", ""), b = get_vec2(j, "b", "");
      return Isometry(MobiusIsometry{{a.x, a.y}, {b.x, b.y}, j.value("conjugate", false)});
    }
    if (g == Geometry::HyperbolicHalfPlane) {
      if (kind != "mobius") fail_at("kind", "half-plane geometry needs kind 'mobius'");
      if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 4) {
        fail_at("matrix", "expected [a, b, c, d]");
      }
      const json& m = j["matrix"];
      return Isometry(HalfPlaneIsometry{m[0].get<double>(), m[1].get<double>(),
                                        m[2].get<double>(), m[3].get<double>(),
                                        j.value("reflect", false)});
    }
    if (kind != "elliptic") fail_at("kind", "elliptic geometry needs kind 'elliptic'");
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 3) {
      fail_at("matrix", "expected a 3x3 matrix");
    }
    EllipticIsometry e;
    for (int r = 0; r < 3; ++r) {
      const json& row = j["matrix"][r];
      if (!row.is_array() || row.size() != 3) fail_at("matrix", "expected a 3x3 matrix");
      for (int c = 0; c < 3; ++c) e.m[3 * r + c] = row[c].get<double>();
    }
    return Isometry(e);
  } catch (const parse_error&) {
    throw;
  } catch (const geom_error& e) {
    fail_at("", e.what());
  }
}

std::string report_to_json(const ExampleReport& r) {
  json j;
  j["entry"] = r.entry;
  json clauses = json::array();
  for (const Clause& c : r.clauses) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["evidence"] = c.evidence;
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  j["assumptions"] = r.assumptions;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

std::string report_to_text(const ExampleReport& r) {
  std::ostringstream os;
  os << r.entry << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const Clause& c : r.clauses) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": "
       << c.evidence << "\n";
  }
  if (!r.assumptions.empty()) {
    os << "  assumptions:\n";
    for (const std::string& a : r.assumptions) os << "    - " << a << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw geom_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw geom_error("cannot write file: " + path);
  out << content;
}

}  // namespace figcmp
