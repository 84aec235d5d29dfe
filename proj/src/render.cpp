#include "sdg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "sdg/errors.hpp"

namespace sdg::render {

namespace {

struct Vec {
  double x = 0, y = 0;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  void add(Vec p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
};

// Portion of the line p + t d inside the box, if any.
bool clip(Vec p, Vec d, const Box& b, Vec& from, Vec& to) {
  double lo = -std::numeric_limits<double>::infinity(), hi = -lo;
  auto axis = [&](double p0, double dd, double a0, double a1) {
    if (dd == 0) return p0 >= a0 && p0 <= a1;
    double t0 = (a0 - p0) / dd, t1 = (a1 - p0) / dd;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    return lo <= hi;
  };
  if (!axis(p.x, d.x, b.x0, b.x1) || !axis(p.y, d.y, b.y0, b.y1)) return false;
  from = {p.x + lo * d.x, p.y + lo * d.y};
  to = {p.x + hi * d.x, p.y + hi * d.y};
  return true;
}

}  // namespace

double display_value(const NilElement& x, double v) {
  double out = 0;
  for (const auto& [m, c] : x.terms()) out += c.approx() * std::pow(v, static_cast<double>(m.size()));
  return out;
}

std::string svg(const scene::Scene& s, const Options& opts) {
  if (s.dim != 2) throw UsageError("plotting needs a planar scene (dim 2), got dim " + std::to_string(s.dim));
  auto vec = [&](const Point& p) { return Vec{display_value(p[0], opts.nil_display), display_value(p[1], opts.nil_display)}; };
  auto wanted = [&](const std::string& name) {
    return opts.figures.empty() || std::find(opts.figures.begin(), opts.figures.end(), name) != opts.figures.end();
  };
  for (const auto& f : opts.figures) {
    if (s.find_figure(f) == nullptr) throw UsageError("unknown figure: " + f);
  }
  auto overlay_point = [&](const scene::Json& j, const std::string& where) {
    return vec(scene::parse_point(s, j, where));
  };

  Box box;
  for (const auto& [name, p] : s.points) box.add(vec(p));
  for (const auto& nf : s.figures) {
    if (!wanted(nf.name)) continue;
    if (const auto* sp = std::get_if<Sphere>(&nf.figure)) {
      Vec c = vec(sp->center);
      double r = std::abs(display_value(sp->radius, opts.nil_display));
      box.add({c.x - r, c.y - r});
      box.add({c.x + r, c.y + r});
    } else {
      box.add(vec(std::get<Hyperplane>(nf.figure).basepoint));
    }
  }
  if (!std::isfinite(box.x0)) box = Box{-1, -1, 1, 1};
  double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  double pad = 0.1 * span;
  box.x0 -= pad;
  box.y0 -= pad;
  box.x1 += pad;
  box.y1 += pad;
  double scale = opts.width / (box.x1 - box.x0);
  double height = (box.y1 - box.y0) * scale;
  // Screen coordinates with the y-axis pointing up.
  auto sx = [&](double x) { return fmt((x - box.x0) * scale); };
  auto sy = [&](double y) { return fmt((box.y1 - y) * scale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opts.width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(opts.width) << ' ' << fmt(height) << "\">\n";
  if (!s.name.empty()) os << "  <title>" << escape(s.name) << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& nf : s.figures) {
    if (!wanted(nf.name)) continue;
    if (const auto* sp = std::get_if<Sphere>(&nf.figure)) {
      Vec c = vec(sp->center);
      double r = std::abs(display_value(sp->radius, opts.nil_display));
      os << "  <circle id=\"" << escape(nf.name) << "\" cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\""
         << fmt(r * scale) << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    } else {
      const auto& h = std::get<Hyperplane>(nf.figure);
      Vec p = vec(h.basepoint), n = vec(h.normal), from, to;
      if (!clip(p, {-n.y, n.x}, box, from, to)) continue;
      os << "  <line id=\"" << escape(nf.name) << "\" x1=\"" << sx(from.x) << "\" y1=\"" << sy(from.y) << "\" x2=\""
         << sx(to.x) << "\" y2=\"" << sy(to.y) << "\" stroke=\"darkorange\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (std::size_t i = 0; i < s.overlays.size(); ++i) {
    const auto& o = s.overlays[i];
    std::string where = "/overlays/" + std::to_string(i);
    if (o.contains("segment")) {
      const auto& seg = o["segment"];
      if (!seg.is_array() || seg.size() != 2) throw ParseError(where + "/segment", "expected two points");
      Vec a = overlay_point(seg[0], where + "/segment/0"), b = overlay_point(seg[1], where + "/segment/1");
      bool dashed = o.value("style", std::string()) == "dashed";
      os << "  <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y)
         << "\" stroke=\"gray\" stroke-width=\"1\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
    } else if (o.contains("label")) {
      Vec a = overlay_point(o["label"], where + "/label");
      std::string text = o.value("text", o["label"].is_string() ? o["label"].get<std::string>() : std::string());
      os << "  <text x=\"" << sx(a.x) << "\" y=\"" << sy(a.y) << "\" dx=\"6\" dy=\"-14\" font-size=\"12\">"
         << escape(text) << "</text>\n";
    } else {
      throw ParseError(where, "overlay must have \"segment\" or \"label\"");
    }
  }
  for (const auto& [name, p] : s.points) {
    Vec v = vec(p);
    os << "  <circle cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\"3\" fill=\"black\"/>\n";
    os << "  <text x=\"" << sx(v.x) << "\" y=\"" << sy(v.y) << "\" dx=\"5\" dy=\"-4\" font-size=\"12\">"
       << escape(name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sdg::render
