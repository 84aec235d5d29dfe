#include "sdg/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "sdg/errors.hpp"

namespace sdg::suite {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped_degenerate:
      return "skipped-degenerate";
  }
  return "fail";
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::string_view check, std::size_t dim, long trial, int attempt) {
  std::uint64_t h = fnv1a(check);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(attempt)};
  return std::mt19937_64(seq);
}

}  // namespace

Trial::Trial(std::size_t dim, std::uint64_t seed, std::string_view check, long index, int attempt)
    : dim_(dim), index_(index), rng_(make_rng(seed, check, dim, index, attempt)) {}

void Trial::expect(bool holds, std::string_view what) {
  if (holds) return;
  passed_ = false;
  witness_["failed"].push_back(std::string(what));
}

void Trial::require(bool ok, std::string_view why) {
  if (!ok) throw Regenerate{std::string(why)};
}

long Trial::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

NilElement Trial::rational(long bound) { return NilElement(Scalar(integer(-bound, bound), integer(1, bound))); }

NilElement Trial::positive(long bound) { return NilElement(Scalar(integer(1, bound), integer(1, bound))); }

Point Trial::point(long bound) {
  Point p = Point::zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i) p[i] = rational(bound);
  return p;
}

Point Trial::unit_direction(long bound) {
  // Inverse stereographic projection of a random rational point of R^(n-1)
  // from the pole e_(n-1): (2w, |w|^2 - 1) / (|w|^2 + 1).
  std::vector<NilElement> w(dim_ - 1);
  NilElement w2 = 0;
  for (auto& x : w) {
    x = NilElement(Scalar(integer(-bound, bound), integer(1, bound)));
    w2 += x * x;
  }
  NilElement den = inverse(w2 + NilElement(1));
  Point u = Point::zero(dim_);
  for (std::size_t i = 0; i + 1 < dim_; ++i) u[i] = NilElement(2) * w[i] * den;
  u[dim_ - 1] = (w2 - NilElement(1)) * den;
  return u;
}

Point Trial::orthogonal_direction(const Point& v) {
  // Random combination of the Gram-free basis v_i e_j - v_j e_i at an
  // invertible index i, rejected until proper.
  std::size_t i = 0;
  while (i < dim_ && !v[i].is_invertible()) ++i;
  if (i == dim_) throw UsageError("orthogonal_direction: vector is not proper");
  for (int tries = 0; tries < 64; ++tries) {
    Point w = Point::zero(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j == i) continue;
      NilElement k(Scalar(integer(-5, 5)));
      w[j] += k * v[i];
      w[i] -= k * v[j];
    }
    if (is_proper(w)) return w;
  }
  throw Regenerate{"no proper orthogonal direction"};
}

void Trial::note(std::string_view key, const Point& p) { witness_[std::string(key)] = p.str(&table_); }
void Trial::note(std::string_view key, const NilElement& x) { witness_[std::string(key)] = x.str(&table_); }
void Trial::note(std::string_view key, std::string_view text) { witness_[std::string(key)] = std::string(text); }

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    register_geometry_checks(out);
    register_synthetic_checks(out);
    register_contact_checks(out);
    register_model_checks(out);
    register_algebra_checks(out);
    return out;
  }();
  return checks;
}

const Check* find_check(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

struct Task {
  const Check* check;
  std::size_t dim;
  long trial;
  std::uint64_t seed;
};

Record run_task(const Task& task) {
  Record rec;
  rec.check = task.check->id;
  rec.dim = task.dim;
  rec.trial = task.trial;
  rec.expect_pass = task.trial != kControlTrial;
  const auto& body = rec.expect_pass ? task.check->run : task.check->control;
  auto start = std::chrono::steady_clock::now();
  std::string last_reason;
  bool done = false;
  for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
    Trial t(task.dim, task.seed, task.check->id, task.trial, attempt);
    try {
      body(t);
      rec.status = t.passed() ? Status::pass : Status::fail;
    } catch (const Regenerate& r) {
      last_reason = r.reason;
      continue;
    } catch (const DegenerateError& e) {
      last_reason = e.what();
      continue;
    } catch (const std::exception& e) {
      // The verification procedure itself rejected the configuration.
      rec.status = Status::fail;
      t.witness()["error"] = e.what();
    }
    Json w = Json::object();
    w["seed"] = task.seed;
    w["attempt"] = attempt;
    for (auto& [k, v] : t.witness().items()) w[k] = v;
    rec.witness = std::move(w);
    done = true;
  }
  if (!done) {
    rec.status = Status::skipped_degenerate;
    rec.witness = Json{{"seed", task.seed}, {"attempts", kMaxAttempts}, {"error", "regeneration exhausted"},
                       {"last_reason", last_reason}};
  }
  rec.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

std::vector<Record> run_suite(const Options& opts) {
  for (const auto& id : opts.checks) {
    if (find_check(id) == nullptr) throw UsageError("unknown check: " + id);
  }
  // Registry order, whatever order the ids were given in.
  std::vector<const Check*> selected;
  for (const auto& c : registry()) {
    if (opts.checks.empty() || std::find(opts.checks.begin(), opts.checks.end(), c.id) != opts.checks.end()) {
      selected.push_back(&c);
    }
  }
  for (std::size_t d : opts.dims) {
    if (d < 2 || d > 6) throw UsageError("unsupported dimension " + std::to_string(d) + " (2..6)");
  }
  if (opts.trials < 0) throw UsageError("trial count must be non-negative");

  std::vector<Task> tasks;
  if (opts.trials > 0) {
    std::set<std::size_t> dims(opts.dims.begin(), opts.dims.end());
    std::set<std::pair<const Check*, std::size_t>> seen;
    for (std::size_t d : dims) {
      for (const Check* c : selected) {
        // Checks with a dimension floor run once per effective dimension.
        std::size_t eff = std::max(d, c->min_dim);
        if (!seen.insert({c, eff}).second) continue;
        for (long i = 0; i < opts.trials; ++i) tasks.push_back({c, eff, i, opts.seed});
        if (c->control) tasks.push_back({c, eff, kControlTrial, opts.seed});
      }
    }
  }

  std::vector<Record> out(tasks.size());
  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = run_task(tasks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < std::min<std::size_t>(jobs, tasks.size()); ++j) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = run_task(tasks[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

Json to_json(const Record& r, bool timing) {
  Json j;
  j["check"] = r.check;
  j["dim"] = r.dim;
  if (r.trial == kControlTrial) {
    j["trial"] = "control";
  } else {
    j["trial"] = r.trial;
  }
  j["status"] = std::string(to_string(r.status));
  j["expect"] = r.expect_pass ? "pass" : "fail";
  j["witness"] = r.witness;
  if (timing) j["time_ms"] = r.time_ms;
  return j;
}

Json summary(const std::vector<Record>& records) {
  std::size_t pass = 0, fail = 0, skipped = 0, unexpected = 0;
  for (const auto& r : records) {
    pass += r.status == Status::pass;
    fail += r.status == Status::fail;
    skipped += r.status == Status::skipped_degenerate;
    unexpected += !r.as_expected();
  }
  Json j;
  j["summary"] = true;
  j["records"] = records.size();
  j["pass"] = pass;
  j["fail"] = fail;
  j["skipped_degenerate"] = skipped;
  j["unexpected"] = unexpected;
  j["ok"] = unexpected == 0;
  return j;
}

bool all_as_expected(const std::vector<Record>& records) {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.as_expected(); });
}

namespace detail {

TouchingPair touching_pair(Trial& t, bool external) {
  // Centers a and c = a + D u with u a rational unit vector, so ac = D is
  // rational and can be split exactly.
  Point a = t.point();
  Point u = t.unit_direction();
  NilElement r = t.positive(20), s = t.positive(20);
  if (external) {
    Point c = a + (r + s) * u;
    return {Sphere(a, r), Sphere(c, s), a + r * u, true};
  }
  // A = S(a, r + s), B = S(b, s) with ab = r; they touch at a + (r + s) u.
  Point b = a + r * u;
  return {Sphere(a, r + s), Sphere(b, s), a + (r + s) * u, false};
}

}  // namespace detail

}  // namespace sdg::suite
