#pragma once

// Helpers shared by the check files.

#include <functional>

#include "sdg/errors.hpp"
#include "sdg/suite.hpp"

namespace sdg::suite::util {

/// touches() without the precondition: false when z is off either figure.
inline bool touches_at(BatchTable& t, const Figure& a, const Figure& b, const Point& z) {
  return on_figure(a, z) && on_figure(b, z) && touches(t, a, b, z);
}

/// Every element of the slice passes `member`, decided at a generic element.
inline bool slice_in(BatchTable& t, const Slice& s, const std::function<bool(const Point&)>& member) {
  return member(generic_point(t, s).point);
}

/// A rational unit vector that is not parallel to u.
inline Point transversal_unit(Trial& t, const Point& u) {
  for (int i = 0; i < 64; ++i) {
    Point w = t.unit_direction();
    NilElement c = dot(w, u);
    if ((c * c - NilElement(1)).is_invertible()) return w;
  }
  throw Regenerate{"no transversal direction"};
}

/// A generic first-order infinitesimal scaled by a random nonzero rational.
inline NilElement small(Trial& t, std::string name = "eps") {
  NilElement k = t.rational(9);
  t.require(k.is_invertible(), "zero coefficient");
  return k * t.table().fresh_batch(1, std::move(name)).generators[0];
}

}  // namespace sdg::suite::util
