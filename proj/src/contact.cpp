#include "sdg/contact.hpp"

#include "sdg/errors.hpp"
#include "sdg/synthetic.hpp"

namespace sdg {

ContactElement::ContactElement(Point b, Point n, int sigma)
    : base(std::move(b)), normal(std::move(n)), orientation(sigma) {
  if (base.dim() != normal.dim()) throw UsageError("contact element normal has the wrong dimension");
  if (!is_proper(normal)) throw DomainError("contact element normal must be proper: " + normal.str());
  if (sigma != 1 && sigma != -1) throw DomainError("orientation must be +1 or -1");
}

ContactElement contact_from_sphere(const Sphere& a, const Point& b, Side side) {
  if (!on_sphere(a, b)) throw UsageError("point " + b.str() + " is not on the sphere");
  return ContactElement(b, b - a.center, side == Side::inside ? 1 : -1);
}

bool same_set(const ContactElement& p, const ContactElement& q) {
  return p.base == q.base && invertible_ratio(p.normal.coords(), q.normal.coords()).has_value();
}

bool same_oriented(const ContactElement& p, const ContactElement& q) {
  if (!(p.base == q.base)) return false;
  auto lambda = invertible_ratio(p.normal.coords(), q.normal.coords());
  return lambda && lambda->pure_sign() * p.orientation * q.orientation > 0;
}

bool contains(const ContactElement& p, const Point& x) {
  return neighbour(p.base, x) && dot(x - p.base, p.normal).is_zero();
}

Slice slice_of(const ContactElement& p) { return orthogonal_slice(p.base, p.normal); }

Point unit_normal(const ContactElement& p) {
  return NilElement(p.orientation) / sqrt(norm2(p.normal)) * p.normal;
}

Sphere inside_sphere(const ContactElement& p, const NilElement& t) {
  return Sphere(p.base - t * unit_normal(p), t);
}

bool orthogonal(BatchTable& table, const Point& c, const ContactElement& p) {
  if (!apart(c, p.base)) throw UsageError("orthogonality needs c apart from the base point");
  return equidistant_on_slice(table, c, slice_of(p));
}

Point front_step(const ContactElement& p, const NilElement& s) {
  if (s.pure_sign() <= 0) throw DomainError("front step needs s > 0");
  return p.base + s * unit_normal(p);
}

ContactElement flow_step(const ContactElement& p, const NilElement& s) {
  return ContactElement(front_step(p, s), p.normal, p.orientation);
}

Sphere inflate(const Sphere& a, const NilElement& t) {
  if (t.pure_sign() <= 0) throw DomainError("inflation needs t > 0");
  return Sphere(a.center, a.radius + t);
}

std::vector<std::size_t> feet_on_surface(BatchTable& table, const Point& x, const Hypersurface& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.samples.size(); ++i) {
    if (orthogonal(table, x, b.samples[i])) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> foot_violations(BatchTable& table, const Hypersurface& b, const NilElement& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.samples.size(); ++i) {
    Point x = front_step(b.samples[i], s);
    for (std::size_t j = 0; j < b.samples.size(); ++j) {
      if (j == i) continue;
      const ContactElement& q = b.samples[j];
      bool close = !apart(x, q.base) || (dist2(x, q.base) - s * s).pure_sign() <= 0;
      if (close && (!apart(x, q.base) || orthogonal(table, x, q))) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

bool envelope_touch(BatchTable& table, const ContactElement& p, const NilElement& s) {
  ContactElement flowed = flow_step(p, s);
  const Point& c = flowed.base;
  Sphere wave(p.base, s);
  if (!on_sphere(wave, c)) return false;
  Hyperplane tangent(c, flowed.normal);
  Sphere outer = inside_sphere(flowed, s + NilElement(1));
  return touches(table, wave, tangent, c) && touches(table, wave, outer, c);
}

Hypersurface parallel_surface(BatchTable& table, const Hypersurface& b, const NilElement& s) {
  auto bad = foot_violations(table, b, s);
  if (!bad.empty()) {
    std::string list;
    for (auto i : bad) list += (list.empty() ? "" : ",") + std::to_string(i);
    throw AssumptionError("parallel surface at distance " + s.str() + ": second foot near samples " + list);
  }
  Hypersurface out;
  for (const auto& p : b.samples) out.samples.push_back(flow_step(p, s));
  return out;
}

bool same_surface(const Hypersurface& x, const Hypersurface& y) {
  if (x.samples.size() != y.samples.size()) return false;
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    if (!same_oriented(x.samples[i], y.samples[i])) return false;
  }
  return true;
}

std::vector<Point> sphere_samples(const Point& a, const NilElement& radius, std::size_t m, int offset) {
  const long mm = static_cast<long>(m);
  std::vector<Point> out;
  for (long k = 0; k < mm; ++k) {
    NilElement u = Scalar(2 * k + 1 - mm + 2 * offset * mm, mm);
    if (a.dim() == 2) {
      NilElement q = NilElement(1) + u * u;
      out.push_back(a + radius * Point{(NilElement(1) - u * u) / q, NilElement(2) * u / q});
    } else if (a.dim() >= 3) {
      // Inverse stereographic image of w = (u, v_1, ..., v_(n-2)).
      std::vector<NilElement> w{u};
      for (std::size_t j = 1; j + 1 < a.dim(); ++j) {
        w.push_back(NilElement(Scalar((k + static_cast<long>(j) - 1) % 3 - 1, 2)));
      }
      NilElement w2 = 0;
      for (const auto& x : w) w2 += x * x;
      NilElement q = NilElement(1) + w2;
      Point p = Point::zero(a.dim());
      for (std::size_t j = 0; j < w.size(); ++j) p[j] = NilElement(2) * w[j] / q;
      p[a.dim() - 1] = (w2 - NilElement(1)) / q;
      out.push_back(a + radius * p);
    } else {
      throw UsageError("sphere samples need n >= 2");
    }
  }
  return out;
}

std::vector<Point> clock_samples(const Point& a, const NilElement& radius, std::size_t m) {
  if (a.dim() != 2) throw UsageError("clock samples are planar");
  if (m == 0 || 360 % m != 0 || ((360 / m) % 30 != 0 && (360 / m) % 45 != 0)) {
    throw UsageError("clock samples need the angle step to be a multiple of 30 or 45 degrees");
  }
  const Scalar half(1, 2);
  const Scalar r2 = sqrt(Scalar(2)) * half;
  const Scalar r3 = sqrt(Scalar(3)) * half;
  std::vector<Point> out;
  for (std::size_t k = 0; k < m; ++k) {
    long deg = static_cast<long>(k * (360 / m));
    Scalar c, s;
    switch (deg % 90) {
      case 0: c = 1; s = 0; break;
      case 30: c = r3; s = half; break;
      case 45: c = r2; s = r2; break;
      case 60: c = half; s = r3; break;
      default: throw UsageError("unsupported clock angle");
    }
    for (long q = 0; q < deg / 90; ++q) {
      Scalar t = c;
      c = -s;
      s = t;
    }
    out.push_back(a + radius * Point{NilElement(c), NilElement(s)});
  }
  return out;
}

Hypersurface sampled_sphere(const Sphere& a, const std::vector<Point>& points, Side side) {
  Hypersurface out;
  for (const auto& p : points) out.samples.push_back(contact_from_sphere(a, p, side));
  return out;
}

Hypersurface sampled_hyperplane(const Hyperplane& h, const std::vector<Point>& points) {
  Hypersurface out;
  for (const auto& p : points) {
    if (!on_hyperplane(h, p)) throw UsageError("sample " + p.str() + " is not on the hyperplane");
    out.samples.emplace_back(p, h.normal, 1);
  }
  return out;
}

bool HuygensRecord::all_pass() const {
  for (const auto* list : {&samples, &converse_samples}) {
    for (const auto& s : *list) {
      if (!s.forward || !s.converse || !s.unique) return false;
    }
  }
  return true;
}

HuygensRecord huygens_sphere_envelope(BatchTable& table, const Point& a, const NilElement& r,
                                      const NilElement& s, const std::vector<Point>& inner,
                                      const std::vector<Point>& outer) {
  const Sphere base(a, r);
  const Sphere front(a, r + s);
  auto touching = [&](const Point& b, const Point& c) {
    Sphere wave(b, s);
    return on_sphere(wave, c) && on_sphere(front, c) && touches(table, wave, front, c);
  };
  HuygensRecord rec;
  for (const auto& b : inner) {
    if (!on_sphere(base, b)) throw UsageError("inner sample " + b.str() + " is not on S(a, r)");
    HuygensSample h{b, extrapolate(a, b, s)};
    h.forward = touching(b, h.c);
    h.converse = interpolate(a, h.c, s) == b;
    h.unique = extrapolation_pinned(table, a, b, h.c, s);
    rec.samples.push_back(std::move(h));
  }
  for (const auto& c : outer) {
    if (!on_sphere(front, c)) throw UsageError("outer sample " + c.str() + " is not on S(a, r + s)");
    HuygensSample h{interpolate(a, c, s), c};
    h.forward = touching(h.b, c);
    h.converse = extrapolate(a, h.b, s) == c;
    h.unique = interpolation_pinned(table, a, h.b, c, s);
    rec.converse_samples.push_back(std::move(h));
  }
  return rec;
}

bool united_position(const ContactElement& p, const ContactElement& q) {
  return contains(p, q.base) && contains(q, p.base) && neighbour(p.base, q.base);
}

}  // namespace sdg
