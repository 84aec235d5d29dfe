#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdg/errors.hpp"
#include "sdg/render.hpp"

using namespace sdg;

namespace {

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("output is byte-identical across runs") {
  for (const auto& name : scene::builtin_names()) {
    auto a = render::svg(scene::load(scene::builtin(name)));
    auto b = render::svg(scene::load(scene::builtin(name)));
    CHECK(a == b);
    CHECK(a.rfind("<svg ", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
  }
}

TEST_CASE("basic picture draws the triangle with its label") {
  auto s = scene::load(scene::builtin("basic"));
  auto svg = render::svg(s);
  CHECK(count(svg, "<line") == 3);
  CHECK(svg.find(">eps</text>") != std::string::npos);
  CHECK(svg.find(">b'</text>") != std::string::npos);
  // The generator display value moves b' off the line through a and c.
  render::Options flat;
  flat.nil_display = 0;
  CHECK(render::svg(s, flat) != svg);
}

TEST_CASE("figures, clipping and selection") {
  auto s = scene::load(scene::Json::parse(R"({
    "dim": 2, "points": {"a": [0, 0]},
    "spheres": {"A": {"center": "a", "radius": 2}},
    "hyperplanes": {"H": {"point": [0, 2], "normal": [0, 1]}}})"));
  auto svg = render::svg(s);
  CHECK(count(svg, "<circle id=\"A\"") == 1);
  CHECK(count(svg, "<line id=\"H\"") == 1);
  // Horizontal tangent line, clipped to the padded box [-2.4, 2.4]^2.
  CHECK(svg.find("x1=\"480.000000\" y1=\"40.000000\" x2=\"0.000000\" y2=\"40.000000\"") != std::string::npos);
  render::Options only;
  only.figures = {"H"};
  CHECK(count(render::svg(s, only), "<circle id=\"A\"") == 0);
  only.figures = {"missing"};
  CHECK_THROWS_AS(render::svg(s, only), UsageError);
}

TEST_CASE("huygens family draws every wavefront circle") {
  auto svg = render::svg(scene::load(scene::builtin("huygens")));
  CHECK(count(svg, "<circle id=") == 3 + 24);
}

TEST_CASE("non-planar scenes are rejected") {
  auto s = scene::load(scene::Json::parse(R"({"dim": 3, "points": {"a": [0, 0, 0]}})"));
  CHECK_THROWS_AS(render::svg(s), UsageError);
}

TEST_CASE("display values substitute every generator") {
  BatchTable t;
  auto d = t.fresh_batch(1).generators[0];
  auto e = t.fresh_batch(1).generators[0];
  NilElement x = NilElement(3) + NilElement(2) * d + d * e;
  CHECK(render::display_value(x, 0.5) == doctest::Approx(3 + 1 + 0.25));
  CHECK(render::display_value(x, 0) == 3);
}
