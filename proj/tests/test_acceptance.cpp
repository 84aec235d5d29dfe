// Acceptance run: one PASS/FAIL line per criterion, decided by exact
// equality.  Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sdg/contact.hpp"
#include "sdg/geometry.hpp"
#include "sdg/suite.hpp"
#include "sdg/synthetic.hpp"

using namespace sdg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool holds, const std::string& what) {
    if (!holds) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// Runs the given checks and requires every record, controls included, to
// behave as expected.
void suite_part(Outcome& out, const std::vector<std::string>& checks, std::vector<std::size_t> dims, long trials) {
  suite::Options o;
  o.checks = checks;
  o.dims = std::move(dims);
  o.trials = trials;
  auto records = suite::run_suite(o);
  std::size_t pass = 0, controls = 0;
  for (const auto& r : records) {
    if (!r.as_expected()) out.require(false, r.check + " dim " + std::to_string(r.dim) + " " + suite::to_json(r, false).dump());
    if (r.trial == suite::kControlTrial) {
      controls += r.status == suite::Status::fail ? 1 : 0;
    } else {
      pass += r.status == suite::Status::pass ? 1 : 0;
    }
  }
  out.detail << " " << pass << " exact passes, " << controls << " control" << (controls == 1 ? "" : "s") << " failing as designed;";
}

Outcome basic_picture() {
  Outcome out;
  auto t0 = Clock::now();
  BatchTable tab;
  NilElement eps = tab.fresh_batch(1, "eps").generators[0];
  Point a{-3, 0}, bp{0, eps}, b{0, 0}, c{4, 0};
  out.require(dist(a, bp) == NilElement(3), "dist(a,b') = 3");
  out.require(dist(bp, c) == NilElement(4), "dist(b',c) = 4");
  out.require(triangle_equality(a, bp, c), "(ab'c)");
  out.require(!collinear(tab, a, bp, c), "not [ab'c]");
  out.require(collinear(tab, a, b, c), "[abc]");
  double secs = seconds_since(t0);
  out.require(secs < 1.0, "under 1 s");
  out.detail << " dist(a,b')=3, dist(b',c)=4, (ab'c), not [ab'c], [abc] in " << secs << " s";
  return out;
}

Outcome touching_axioms() {
  Outcome out;
  auto t0 = Clock::now();
  suite_part(out, {"sphere-monad-dimension", "sphere-touching-focused", "external-touching", "internal-touching"},
             {2, 3}, 25);
  double secs = seconds_since(t0);
  out.require(secs < 60.0, "under 60 s");
  out.detail << " " << secs << " s";
  return out;
}

Outcome wavefronts() {
  Outcome out;
  BatchTable tab;
  Point a{0, 0};
  NilElement r(2), s(1);
  auto rec = huygens_sphere_envelope(tab, a, r, s, clock_samples(a, r, 12), clock_samples(a, r + s, 12));
  out.require(rec.samples.size() == 12 && rec.converse_samples.size() == 12, "12 samples each way");
  out.require(rec.all_pass(), "touching and uniqueness at every sample");
  out.detail << " envelope " << rec.checks() << " samples;";
  NilElement u(Scalar(1, 2)), v(Scalar(3, 2));
  Sphere circle(a, r);
  Hypersurface ring = sampled_sphere(circle, clock_samples(a, r, 12));
  bool ok_ring = same_surface(parallel_surface(tab, ring, u + v), parallel_surface(tab, parallel_surface(tab, ring, u), v));
  for (const auto& p : parallel_surface(tab, ring, u + v).samples) ok_ring = ok_ring && on_sphere(inflate(circle, u + v), p.base);
  out.require(ok_ring, "circle: B |- (s+t) = (B |- s) |- t");
  Hyperplane line(Point{0, 0}, Point{0, 1});
  std::vector<Point> pts;
  for (long k = -3; k <= 3; ++k) pts.push_back(Point{NilElement(Scalar(k, 2)), 0});
  Hypersurface flat = sampled_hyperplane(line, pts);
  out.require(same_surface(parallel_surface(tab, flat, u + v), parallel_surface(tab, parallel_surface(tab, flat, u), v)),
              "line: B |- (s+t) = (B |- s) |- t");
  out.detail << " semigroup on " << ring.samples.size() << " circle and " << flat.samples.size() << " line samples";
  return out;
}

Outcome red_herring() {
  Outcome out;
  BatchTable tab;
  NilElement e1 = tab.fresh_batch(1, "eps1").generators[0], e2 = tab.fresh_batch(1, "eps2").generators[0];
  Sphere A(Point{0, 0, 1}, 1);
  Hyperplane H(Point{0, 0, 0}, Point{0, 0, 1});
  Point z{0, 0, 0}, p{e1, e2, 0};
  out.require(on_sphere(A, p) && on_hyperplane(H, p), "p in A cap H");
  out.require(!neighbour(z, p), "p not a neighbour of 0");
  out.require(touches(tab, A, H, z), "A touches H at 0");
  // In the touching set every element is a neighbour of 0; p is not, so the
  // touching set misses a point of A cap H.
  out.require(!(e1 * e2).is_zero(), "eps1 eps2 != 0");
  suite_part(out, {"red-herring"}, {3}, 5);
  out.detail << " (eps1, eps2, 0) on A cap H, not a neighbour of 0";
  return out;
}

NilElement random_element(std::mt19937_64& rng, const std::vector<NilElement>& gens) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto coeff = [&] {
    Scalar c(pick(-20, 20), pick(1, 9));
    if (pick(0, 3) == 0) c += Scalar(pick(-5, 5), pick(1, 5)) * sqrt(Scalar(pick(0, 1) == 0 ? 2 : 3));
    return NilElement(c);
  };
  NilElement x = coeff();
  if (x.is_zero()) x = NilElement(1);
  for (const auto& g : gens) {
    if (pick(0, 1) == 1) x += coeff() * g;
  }
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    if (pick(0, 2) == 0) x += coeff() * gens[i] * gens[i + 1];
  }
  return x;
}

Outcome algebra_oracle() {
  Outcome out;
  std::size_t layouts = 0, products = 0;
  for (const auto& l : suite::batch_layouts(4)) {
    auto rep = suite::exhaustive_product_oracle(l, 4);
    ++layouts;
    products += rep.products;
    out.require(rep.mismatches == 0, rep.first_mismatch);
  }
  out.detail << " " << products << " products over " << layouts << " layouts;";
  std::mt19937_64 rng(2024);
  BatchTable tab;
  std::vector<NilElement> gens;
  for (std::size_t size : {2, 1, 1}) {
    for (const auto& g : tab.fresh_batch(size).generators) gens.push_back(g);
  }
  std::size_t inverses = 0, roots = 0;
  for (int k = 0; k < 200; ++k) {
    NilElement x = random_element(rng, gens);
    out.require(x * inverse(x) == NilElement(1) && inverse(inverse(x)) == x, "inverse round trip " + x.str());
    ++inverses;
    if (x.pure_sign() > 0) {
      NilElement y = sqrt(x);
      out.require(y * y == x && sqrt(y * y) == y, "sqrt round trip " + x.str());
      ++roots;
    }
    NilElement sq = x * x;
    NilElement abs_x = x.pure_sign() > 0 ? x : -x;
    out.require(sqrt(sq) == abs_x, "sqrt(x^2) = |x| " + x.str());
    ++roots;
  }
  out.detail << " " << inverses << " inverse and " << roots << " sqrt round trips";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"basic-picture", basic_picture},
      {"touching-axioms", touching_axioms},
      {"collinearity-conditions",
       [] {
         Outcome o;
         suite_part(o, {"collinearity-conditions"}, {2, 3}, 50);
         return o;
       }},
      {"extrapolation-and-collinearity",
       [] {
         Outcome o;
         suite_part(o,
                    {"extrapolation-characterization", "collinearity-associativity",
                     "extrapolation-source-invariance", "touching-centers-aligned"},
                    {2, 3}, 25);
         return o;
       }},
      {"rays",
       [] {
         Outcome o;
         suite_part(o, {"ray-semigroup", "ray-isometry", "non-ray-isometry"}, {2, 3}, 25);
         return o;
       }},
      {"wavefronts", wavefronts},
      {"coordinate-model",
       [] {
         Outcome o;
         suite_part(o,
                    {"sphere-monad-hyperplane", "hyperplane-monad-containment", "monad-focused",
                     "foot-characterization", "chord-orthogonality", "focused-touching"},
                    {2, 3}, 10);
         return o;
       }},
      {"red-herring", red_herring},
      {"algebra-oracle", algebra_oracle},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::printf("%s %s:%s\n", o.ok ? "PASS" : "FAIL", c.id, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
