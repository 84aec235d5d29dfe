#pragma once

// SVG drawings of planar scenes.  Infinitesimal coordinates are drawn by
// substituting a fixed display value for every generator.

#include <string>
#include <vector>

#include "sdg/scene.hpp"

namespace sdg::render {

struct Options {
  /// Value substituted for each generator.
  double nil_display = 0.5;
  /// Figures to draw; all when empty.
  std::vector<std::string> figures;
  double width = 480;
};

/// Numeric value of x with every generator replaced by v.
double display_value(const NilElement& x, double v);

/// Deterministic SVG text.  Throws UsageError unless the scene is planar, and
/// ParseError for overlays that reference unknown points.
std::string svg(const scene::Scene& s, const Options& opts = {});

}  // namespace sdg::render
