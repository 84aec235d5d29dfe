#pragma once

// Registry and runner for the verification checks.
//
// Every check runs on randomly generated configurations (one algebra context
// per trial) and ships one deliberately violated configuration, the control,
// which must fail.  Records are ordered by (dimension, registry order, trial)
// regardless of how many worker threads ran them.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sdg/geometry.hpp"

namespace sdg::suite {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, skipped_degenerate };
std::string_view to_string(Status s);

/// Thrown by a check to ask for a fresh configuration.
struct Regenerate {
  std::string reason;
};

inline constexpr int kMaxAttempts = 1000;
inline constexpr long kControlTrial = -1;

/// Per-trial state: dimension, deterministic random stream, algebra context,
/// and the witness collected so far.
class Trial {
 public:
  Trial(std::size_t dim, std::uint64_t seed, std::string_view check, long index, int attempt);

  std::size_t dim() const { return dim_; }
  long index() const { return index_; }
  BatchTable& table() { return table_; }
  std::mt19937_64& rng() { return rng_; }
  Json& witness() { return witness_; }

  /// Records a named sub-claim; the trial passes iff every sub-claim held.
  void expect(bool holds, std::string_view what);
  bool passed() const { return passed_; }

  /// Throws Regenerate when `ok` is false.
  void require(bool ok, std::string_view why);

  long integer(long lo, long hi);
  /// p/q with |p| <= bound, 1 <= q <= bound.
  NilElement rational(long bound = 100);
  /// p/q with 1 <= p, q <= bound.
  NilElement positive(long bound = 100);
  Point point(long bound = 100);
  /// Rational unit vector (inverse stereographic image of a random point).
  Point unit_direction(long bound = 12);
  /// Rational vector orthogonal to v and proper; v must be proper.
  Point orthogonal_direction(const Point& v);

  void note(std::string_view key, const Point& p);
  void note(std::string_view key, const NilElement& x);
  void note(std::string_view key, std::string_view text);

 private:
  std::size_t dim_;
  long index_;
  BatchTable table_;
  std::mt19937_64 rng_;
  Json witness_ = Json::object();
  bool passed_ = true;
};

struct Check {
  std::string id;
  std::string claim;
  std::function<void(Trial&)> run;
  /// Violates a hypothesis of the claim; expected to fail.
  std::function<void(Trial&)> control;
  /// Checks that need more room run in max(dim, min_dim).
  std::size_t min_dim = 2;
};

const std::vector<Check>& registry();
const Check* find_check(std::string_view id);

struct Record {
  std::string check;
  std::size_t dim = 2;
  long trial = 0;
  Status status = Status::pass;
  bool expect_pass = true;
  Json witness;
  double time_ms = 0;
  bool as_expected() const { return (status == Status::pass) == expect_pass && status != Status::skipped_degenerate; }
};

struct Options {
  std::vector<std::size_t> dims{2};
  long trials = 25;
  std::uint64_t seed = 7;
  /// Empty means all registered checks.
  std::vector<std::string> checks;
  unsigned jobs = 1;
};

/// Throws UsageError for unknown check ids or unsupported dimensions.
std::vector<Record> run_suite(const Options& opts);

/// Stable field order: check, dim, trial, status, expect, witness[, time_ms].
Json to_json(const Record& r, bool timing = true);
Json summary(const std::vector<Record>& records);
bool all_as_expected(const std::vector<Record>& records);

/// Checks registered by each topic; called once by registry().
void register_geometry_checks(std::vector<Check>& out);
void register_synthetic_checks(std::vector<Check>& out);
void register_contact_checks(std::vector<Check>& out);
void register_model_checks(std::vector<Check>& out);
void register_algebra_checks(std::vector<Check>& out);

/// Exhaustive comparison of the nilpotent product with the brute-force
/// reference: every pair of elements whose support has at most `max_terms`
/// monomials (fixed nonzero coefficients per support) over the generators
/// of `layout` (batch sizes).
struct OracleReport {
  std::vector<int> layout;
  std::size_t elements = 0;
  std::size_t products = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
};
OracleReport exhaustive_product_oracle(const std::vector<int>& layout, std::size_t max_terms = 4);
/// Every batch layout (multiset of batch sizes) with 1..generators generators.
std::vector<std::vector<int>> batch_layouts(int generators);

namespace detail {
/// Canonical externally or internally touching sphere pair through a common
/// point, built from a rational unit direction.
struct TouchingPair {
  Sphere first;
  Sphere second;
  Point point;
  bool external;
};
TouchingPair touching_pair(Trial& t, bool external);
}  // namespace detail

}  // namespace sdg::suite
