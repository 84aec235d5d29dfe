#pragma once

// JSON scenes: named points and figures over a declared set of generator
// batches, plus claims to verify and overlays to draw.
//
// Scalars are JSON integers, rational strings ("5/2"), or objects
// {"sqrt": x}, {"add": [x, ...]}, {"sub": [x, y]}, {"mul": [x, ...]},
// {"div": [x, y]}, {"neg": x}, {"gen": "eps"} or {"gen": ["d", 1]}.
// Points are arrays of scalars or names of declared points.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdg/geometry.hpp"

namespace sdg::scene {

using Json = nlohmann::ordered_json;

struct NamedFigure {
  std::string name;
  Figure figure;
};

struct Scene {
  std::string name;
  std::size_t dim = 2;
  BatchTable table;
  std::vector<std::pair<std::string, Point>> points;  // declaration order
  std::vector<NamedFigure> figures;
  Json claims = Json::array();
  Json overlays = Json::array();

  const Point* find_point(const std::string& name) const;
  const Figure* find_figure(const std::string& name) const;
};

/// Throws ParseError carrying a JSON pointer to the offending value.
Scene load(const Json& doc);
Scene load_file(const std::string& path);

/// Scalar and point syntax, resolved against the scene's batches and points.
NilElement parse_scalar(const Scene& s, const Json& j, const std::string& where);
Point parse_point(const Scene& s, const Json& j, const std::string& where);

/// Claim types understood by evaluate().
const std::vector<std::string>& claim_types();

struct ClaimResult {
  std::size_t index = 0;
  std::string check;
  bool expect = true;
  bool actual = false;
  bool passed() const { return actual == expect; }
  Json witness = Json::object();
};

/// Evaluates the claims whose type is in `only` (all when empty).  Unknown
/// claim types and malformed claims throw ParseError.
std::vector<ClaimResult> evaluate(Scene& s, const std::vector<std::string>& only = {});
Json to_json(const ClaimResult& r);

/// Built-in planar scenes: "basic", "external", "internal", "huygens".
Json builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

}  // namespace sdg::scene
