#include "sdg/scene.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sdg/contact.hpp"
#include "sdg/errors.hpp"
#include "sdg/synthetic.hpp"

namespace sdg::scene {

namespace {

// RFC 6901 escaping of one reference token.
std::string token(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + token(key); }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where, what); }

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

std::string string_field(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) fail(at(where, key), "expected a string");
  return v.get<std::string>();
}

std::vector<NilElement> scalar_list(const Scene& s, const Json& j, const std::string& where, std::size_t min) {
  if (!j.is_array() || j.size() < min) fail(where, "expected an array of at least " + std::to_string(min) + " scalars");
  std::vector<NilElement> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_scalar(s, j[i], at(where, i)));
  return out;
}

NilElement generator_ref(const Scene& s, const Json& g, const std::string& where) {
  std::string name;
  long index = 0;
  if (g.is_string()) {
    name = g.get<std::string>();
  } else if (g.is_array() && g.size() == 2 && g[0].is_string() && g[1].is_number_integer()) {
    name = g[0].get<std::string>();
    index = g[1].get<long>();
  } else {
    fail(where, "generator reference must be \"name\" or [\"name\", index]");
  }
  auto id = s.table.find(name);
  if (!id) fail(where, "unknown batch \"" + name + "\"");
  if (index < 0 || index >= static_cast<long>(s.table.batch(*id).size)) {
    fail(where, "generator index out of range for batch \"" + name + "\"");
  }
  return s.table.generator(*id, static_cast<std::uint32_t>(index));
}

}  // namespace

const Point* Scene::find_point(const std::string& n) const {
  for (const auto& [k, p] : points) {
    if (k == n) return &p;
  }
  return nullptr;
}

const Figure* Scene::find_figure(const std::string& n) const {
  for (const auto& f : figures) {
    if (f.name == n) return &f.figure;
  }
  return nullptr;
}

NilElement parse_scalar(const Scene& s, const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return NilElement(Scalar(j.get<long>()));
    if (j.is_string()) return NilElement(Scalar::parse(j.get<std::string>()));
    if (j.is_number()) fail(where, "floating-point literals are not exact; use \"p/q\"");
    if (!j.is_object() || j.size() != 1) fail(where, "expected a scalar");
    const auto& [op, arg] = *j.items().begin();
    const std::string w = at(where, op);
    if (op == "gen") return generator_ref(s, arg, w);
    if (op == "sqrt") return sqrt(parse_scalar(s, arg, w));
    if (op == "neg") return -parse_scalar(s, arg, w);
    if (op == "add" || op == "mul") {
      auto xs = scalar_list(s, arg, w, 1);
      NilElement acc = xs[0];
      for (std::size_t i = 1; i < xs.size(); ++i) acc = op == "add" ? acc + xs[i] : acc * xs[i];
      return acc;
    }
    if (op == "sub" || op == "div") {
      auto xs = scalar_list(s, arg, w, 2);
      if (xs.size() != 2) fail(w, "expected exactly two operands");
      return op == "sub" ? xs[0] - xs[1] : xs[0] / xs[1];
    }
    fail(where, "unknown scalar operator \"" + op + "\"");
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Point parse_point(const Scene& s, const Json& j, const std::string& where) {
  if (j.is_string()) {
    const Point* p = s.find_point(j.get<std::string>());
    if (p == nullptr) fail(where, "unknown point \"" + j.get<std::string>() + "\"");
    return *p;
  }
  auto xs = scalar_list(s, j, where, 1);
  if (xs.size() != s.dim) fail(where, "expected " + std::to_string(s.dim) + " coordinates");
  return Point(std::move(xs));
}

Scene load(const Json& doc) {
  Scene s;
  if (!doc.is_object()) fail("", "scene must be an object");
  s.name = doc.value("name", std::string());
  const Json& dim = field(doc, "dim", "");
  if (!dim.is_number_integer() || dim.get<long>() < 1 || dim.get<long>() > 6) fail("/dim", "dim must be 1..6");
  s.dim = dim.get<std::size_t>();
  if (auto it = doc.find("batches"); it != doc.end()) {
    if (!it->is_array()) fail("/batches", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& b = (*it)[i];
      std::string w = at("/batches", i);
      std::string name = string_field(b, "name", w);
      long size = b.value("size", 1L);
      if (size < 1) fail(at(w, "size"), "batch size must be positive");
      if (s.table.find(name)) fail(at(w, "name"), "duplicate batch \"" + name + "\"");
      s.table.fresh_batch(static_cast<std::size_t>(size), name);
    }
  }
  if (auto it = doc.find("points"); it != doc.end()) {
    if (!it->is_object()) fail("/points", "expected an object");
    for (const auto& [k, v] : it->items()) s.points.emplace_back(k, parse_point(s, v, at("/points", k)));
  }
  auto figures = [&](const char* key, auto make) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    std::string w0 = std::string("/") + key;
    if (!it->is_object()) fail(w0, "expected an object");
    for (const auto& [k, v] : it->items()) {
      if (s.find_figure(k)) fail(at(w0, k), "duplicate figure \"" + k + "\"");
      std::string w = at(w0, k);
      try {
        s.figures.push_back({k, make(v, w)});
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        fail(w, e.what());
      }
    }
  };
  figures("spheres", [&](const Json& v, const std::string& w) -> Figure {
    return Sphere(parse_point(s, field(v, "center", w), at(w, "center")),
                  parse_scalar(s, field(v, "radius", w), at(w, "radius")));
  });
  figures("hyperplanes", [&](const Json& v, const std::string& w) -> Figure {
    std::string key = v.is_object() && v.contains("basepoint") ? "basepoint" : "point";
    return Hyperplane(parse_point(s, field(v, key, w), at(w, key)),
                      parse_point(s, field(v, "normal", w), at(w, "normal")));
  });
  if (auto it = doc.find("claims"); it != doc.end()) {
    if (!it->is_array()) fail("/claims", "expected an array");
    s.claims = *it;
  }
  if (auto it = doc.find("overlays"); it != doc.end()) {
    if (!it->is_array()) fail("/overlays", "expected an array");
    s.overlays = *it;
  }
  return s;
}

Scene load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open scene file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + " (byte " + std::to_string(e.byte) + ")", "malformed JSON");
  }
  return load(doc);
}

const std::vector<std::string>& claim_types() {
  static const std::vector<std::string> types = {
      "apart",    "neighbour",     "dist",     "triangle-equality", "collinear",         "aligned",
      "condition", "on",           "touches",  "focused",           "external-touching", "internal-touching",
      "foot",     "extrapolate",   "interpolate", "huygens"};
  return types;
}

namespace {

struct Ctx {
  Scene& s;
  const Json& c;
  std::string where;
  Json& witness;

  Point point(const std::string& key) { return parse_point(s, field(c, key, where), at(where, key)); }
  NilElement scalar(const std::string& key) { return parse_scalar(s, field(c, key, where), at(where, key)); }
  std::vector<Point> points(std::size_t n) {
    const Json& ps = field(c, "points", where);
    std::string w = at(where, "points");
    if (!ps.is_array() || ps.size() != n) fail(w, "expected " + std::to_string(n) + " points");
    std::vector<Point> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(parse_point(s, ps[i], at(w, i)));
      if (ps[i].is_string()) witness[ps[i].get<std::string>()] = out.back().str(&s.table);
    }
    return out;
  }
  const Figure& figure(const Json& name, const std::string& w) {
    if (!name.is_string()) fail(w, "expected a figure name");
    const Figure* f = s.find_figure(name.get<std::string>());
    if (f == nullptr) fail(w, "unknown figure \"" + name.get<std::string>() + "\"");
    return *f;
  }
  const Figure& figure(const std::string& key) { return figure(field(c, key, where), at(where, key)); }
  std::pair<const Figure*, const Figure*> figure_pair() {
    const Json& fs = field(c, "figures", where);
    std::string w = at(where, "figures");
    if (!fs.is_array() || fs.size() != 2) fail(w, "expected two figure names");
    return {&figure(fs[0], at(w, 0)), &figure(fs[1], at(w, 1))};
  }
  const Sphere& sphere(const Figure* f, const std::string& w) {
    if (!std::holds_alternative<Sphere>(*f)) fail(w, "expected a sphere");
    return std::get<Sphere>(*f);
  }
};

bool evaluate_one(Ctx& x, const std::string& type) {
  BatchTable& tab = x.s.table;
  if (type == "apart" || type == "neighbour") {
    auto p = x.points(2);
    return type == "apart" ? apart(p[0], p[1]) : neighbour(p[0], p[1]);
  }
  if (type == "dist") {
    auto p = x.points(2);
    NilElement d = dist(p[0], p[1]);
    x.witness["dist"] = d.str(&tab);
    return d == x.scalar("value");
  }
  if (type == "triangle-equality" || type == "collinear" || type == "aligned") {
    auto p = x.points(3);
    if (type == "triangle-equality") return triangle_equality(p[0], p[1], p[2]);
    if (type == "collinear") return collinear(tab, p[0], p[1], p[2]);
    return aligned(tab, p[0], p[1], p[2]);
  }
  if (type == "condition") {
    auto p = x.points(3);
    std::string name = string_field(x.c, "condition", x.where);
    auto w = parse_condition(name);
    if (!w) fail(at(x.where, "condition"), "unknown condition \"" + name + "\" (a1..c2)");
    return collinear_condition(tab, p[0], p[1], p[2], *w);
  }
  if (type == "on") return on_figure(x.figure("figure"), x.point("point"));
  if (type == "focused") return is_focused(tab, x.figure("figure"), x.point("point"));
  if (type == "touches") {
    auto [a, b] = x.figure_pair();
    Point z = x.point("point");
    return on_figure(*a, z) && on_figure(*b, z) && touches(tab, *a, *b, z);
  }
  if (type == "external-touching" || type == "internal-touching") {
    auto [a, b] = x.figure_pair();
    std::string w = at(x.where, "figures");
    const Sphere& A = x.sphere(a, at(w, 0));
    const Sphere& B = x.sphere(b, at(w, 1));
    Point z;
    try {
      z = type == "external-touching" ? touching_point_external(A, B) : touching_point_internal(A, B);
    } catch (const NotTouchingError& e) {
      x.witness["reason"] = e.what();
      return false;
    }
    x.witness["touching_point"] = z.str(&tab);
    bool ok = touches(tab, A, B, z) && is_focused(tab, A, z);
    if (x.c.contains("point")) ok = ok && z == x.point("point");
    return ok;
  }
  if (type == "foot") {
    const Figure& f = x.figure("figure");
    if (!std::holds_alternative<Hyperplane>(f)) fail(at(x.where, "figure"), "expected a hyperplane");
    Point b = foot(x.point("point"), std::get<Hyperplane>(f));
    x.witness["foot"] = b.str(&tab);
    return b == x.point("foot");
  }
  if (type == "extrapolate" || type == "interpolate") {
    auto p = x.points(2);
    Point r = type == "extrapolate" ? extrapolate(p[0], p[1], x.scalar("s")) : interpolate(p[0], p[1], x.scalar("s"));
    x.witness["result"] = r.str(&tab);
    return r == x.point("equals");
  }
  if (type == "huygens") {
    Point a = x.point("center");
    NilElement r = x.scalar("r"), s = x.scalar("s");
    long m = x.c.value("m", 12L);
    std::string samples = x.c.value("samples", std::string("clock"));
    std::vector<Point> inner, outer;
    if (samples == "clock") {
      inner = clock_samples(a, r, static_cast<std::size_t>(m));
      outer = clock_samples(a, r + s, static_cast<std::size_t>(m));
    } else if (samples == "rational") {
      inner = sphere_samples(a, r, static_cast<std::size_t>(m));
      outer = sphere_samples(a, r + s, static_cast<std::size_t>(m), 1);
    } else {
      fail(at(x.where, "samples"), "samples must be \"clock\" or \"rational\"");
    }
    auto rec = huygens_sphere_envelope(tab, a, r, s, inner, outer);
    x.witness["checks"] = rec.checks();
    return rec.all_pass();
  }
  fail(at(x.where, "check"), "unknown claim type \"" + type + "\"");
}

}  // namespace

std::vector<ClaimResult> evaluate(Scene& s, const std::vector<std::string>& only) {
  for (const auto& o : only) {
    if (std::find(claim_types().begin(), claim_types().end(), o) == claim_types().end()) {
      throw UsageError("unknown claim type: " + o);
    }
  }
  std::vector<ClaimResult> out;
  for (std::size_t i = 0; i < s.claims.size(); ++i) {
    const Json& c = s.claims[i];
    std::string where = at("/claims", i);
    std::string type = string_field(c, "check", where);
    if (!only.empty() && std::find(only.begin(), only.end(), type) == only.end()) continue;
    ClaimResult r;
    r.index = i;
    r.check = type;
    if (c.contains("expect")) {
      if (!c["expect"].is_boolean()) fail(at(where, "expect"), "expected a boolean");
      r.expect = c["expect"].get<bool>();
    }
    Ctx ctx{s, c, where, r.witness};
    try {
      r.actual = evaluate_one(ctx, type);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      // A rejected precondition is a failed claim, reported with its reason.
      r.actual = false;
      r.witness["error"] = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const ClaimResult& r) {
  Json j;
  j["check"] = r.check;
  j["claim"] = r.index;
  j["status"] = r.passed() ? "pass" : "fail";
  j["expect"] = r.expect;
  j["actual"] = r.actual;
  j["witness"] = r.witness;
  return j;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"basic", "external", "internal", "huygens"};
  return names;
}

namespace {

// k * 30 degrees on a circle of radius r about the origin, as scalar JSON.
Json clock_point(int k, int r) {
  static const Json half = "1/2";
  static const Json root3 = Json{{"div", Json::array({Json{{"sqrt", 3}}, 2})}};
  Json c, s;
  switch (k % 3) {
    case 0: c = 1; s = 0; break;
    case 1: c = root3; s = half; break;
    default: c = half; s = root3; break;
  }
  for (int q = 0; q < k / 3; ++q) {
    Json t = c;
    c = Json{{"neg", s}};
    s = t;
  }
  return Json::array({Json{{"mul", Json::array({r, c})}}, Json{{"mul", Json::array({r, s})}}});
}

}  // namespace

Json builtin(const std::string& name) {
  if (name == "basic") {
    return Json::parse(R"({
      "name": "basic picture", "dim": 2,
      "batches": [{"name": "eps", "size": 1}],
      "points": {"a": [-3, 0], "b": [0, 0], "b'": [0, {"gen": "eps"}], "c": [4, 0]},
      "claims": [
        {"check": "dist", "points": ["a", "b'"], "value": 3},
        {"check": "dist", "points": ["b'", "c"], "value": 4},
        {"check": "triangle-equality", "points": ["a", "b'", "c"]},
        {"check": "collinear", "points": ["a", "b'", "c"], "expect": false},
        {"check": "collinear", "points": ["a", "b", "c"]}
      ],
      "overlays": [
        {"segment": ["a", "b'"]}, {"segment": ["b'", "c"]}, {"segment": ["a", "c"], "style": "dashed"},
        {"label": "b'", "text": "eps"}
      ]
    })");
  }
  if (name == "external") {
    return Json::parse(R"({
      "name": "external touching", "dim": 2,
      "points": {"a": [0, 0], "c": [5, 0], "b": [3, 0]},
      "spheres": {"A": {"center": "a", "radius": 3}, "C": {"center": "c", "radius": 2}},
      "claims": [
        {"check": "external-touching", "figures": ["A", "C"], "point": "b"},
        {"check": "interpolate", "points": ["a", "c"], "s": 2, "equals": "b"},
        {"check": "collinear", "points": ["a", "b", "c"]}
      ],
      "overlays": [{"label": "b", "text": "b = a <|_s c"}]
    })");
  }
  if (name == "internal") {
    return Json::parse(R"({
      "name": "internal touching", "dim": 2,
      "points": {"a": [0, 0], "b": [1, 0], "c": [3, 0]},
      "spheres": {"A": {"center": "a", "radius": 3}, "B": {"center": "b", "radius": 2}},
      "claims": [
        {"check": "internal-touching", "figures": ["A", "B"], "point": "c"},
        {"check": "extrapolate", "points": ["a", "b"], "s": 2, "equals": "c"},
        {"check": "collinear", "points": ["a", "b", "c"]}
      ],
      "overlays": [{"label": "c", "text": "c = a |>_s b"}]
    })");
  }
  if (name == "huygens") {
    Json doc;
    doc["name"] = "huygens wavefronts";
    doc["dim"] = 2;
    doc["points"] = Json::object();
    doc["points"]["a"] = Json::array({0, 0});
    doc["spheres"] = Json::object();
    doc["spheres"]["A"] = Json{{"center", "a"}, {"radius", 2}};
    for (int s : {1, 2}) doc["spheres"]["E" + std::to_string(s)] = Json{{"center", "a"}, {"radius", 2 + s}};
    for (int k = 0; k < 12; ++k) {
      std::string b = "b" + std::to_string(k);
      doc["points"][b] = clock_point(k, 2);
      for (int s : {1, 2}) {
        doc["spheres"]["S" + std::to_string(k) + "_" + std::to_string(s)] = Json{{"center", b}, {"radius", s}};
      }
    }
    doc["claims"] = Json::array();
    for (int s : {1, 2}) {
      doc["claims"].push_back(Json{{"check", "huygens"}, {"center", "a"}, {"r", 2}, {"s", s}, {"m", 12}});
    }
    doc["overlays"] = Json::array();
    return doc;
  }
  throw UsageError("unknown built-in scene: " + name + " (basic, external, internal, huygens)");
}

}  // namespace sdg::scene
