#pragma once

// The number line extended by first-order infinitesimals.
//
// Generators come in batches; products of two generators from the same batch
// (including squares) vanish, products across batches survive.  A batch of
// size n is a generic element of D(n), a batch of size 1 a generic d with
// d^2 = 0.  Quantifiers "for all d" are decided by evaluating at a fresh
// batch and reading off coefficients with kl_cancel.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdg/scalar.hpp"

namespace sdg {

using BatchId = std::uint32_t;

struct Generator {
  BatchId batch = 0;
  std::uint32_t index = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Sorted generator list, at most one generator per batch.
using NilMonomial = std::vector<Generator>;

class BatchTable;

class NilElement {
 public:
  using Term = std::pair<NilMonomial, Scalar>;

  NilElement() = default;
  NilElement(const Scalar& pure);  // NOLINT(google-explicit-constructor)
  NilElement(long value) : NilElement(Scalar(value)) {}  // NOLINT
  NilElement(int value) : NilElement(Scalar(value)) {}   // NOLINT

  static NilElement generator(std::uint64_t context, Generator g);

  /// Owning context id; 0 for elements that mention no generator.
  std::uint64_t context() const { return context_; }
  const std::vector<Term>& terms() const { return terms_; }

  Scalar pure_part() const;
  NilElement nilpotent_part() const;
  int pure_sign() const { return pure_part().sign(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_pure() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
  bool is_invertible() const { return pure_sign() != 0; }
  bool mentions(BatchId batch) const;

  NilElement operator-() const;
  NilElement& operator+=(const NilElement& rhs);
  NilElement& operator-=(const NilElement& rhs);
  NilElement& operator*=(const NilElement& rhs);
  NilElement& operator/=(const NilElement& rhs);

  friend NilElement operator+(NilElement a, const NilElement& b) { return a += b; }
  friend NilElement operator-(NilElement a, const NilElement& b) { return a -= b; }
  friend NilElement operator*(NilElement a, const NilElement& b) { return a *= b; }
  friend NilElement operator/(NilElement a, const NilElement& b) { return a /= b; }

  /// Canonical-form equality (exact).
  friend bool operator==(const NilElement& a, const NilElement& b) { return (a - b).is_zero(); }

  /// Renders with batch names from `names` when given.
  std::string str(const BatchTable* names = nullptr) const;

 private:
  NilElement(std::uint64_t context, std::vector<Term> terms);
  static std::uint64_t join(std::uint64_t a, std::uint64_t b);

  std::uint64_t context_ = 0;
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

/// x^-1 = p^-1 * sum_k (-n/p)^k; throws NotInvertibleError if pure part is 0.
NilElement inverse(const NilElement& x);

/// Truncated binomial series; throws DomainError unless pure part > 0.
NilElement sqrt(const NilElement& x);

/// Pure-part order: x < y iff pure(y - x) > 0.
bool pure_less(const NilElement& x, const NilElement& y);

struct FreshBatch {
  BatchId id = 0;
  std::vector<NilElement> generators;
};

/// Generator batches of one verification scenario.  Single owner; elements
/// built from it are immutable and may be shared freely.
class BatchTable {
 public:
  struct Batch {
    std::string name;
    std::uint32_t size = 0;
  };

  BatchTable();

  std::uint64_t id() const { return id_; }

  /// Appends a batch of `size` new generators with no relations to earlier
  /// generators.  An empty name gets an automatic one.
  FreshBatch fresh_batch(std::size_t size, std::string name = {});

  NilElement generator(BatchId batch, std::uint32_t index) const;
  std::optional<BatchId> find(std::string_view name) const;
  std::size_t batch_count() const { return batches_.size(); }
  const Batch& batch(BatchId id) const;
  std::string generator_name(Generator g) const;

 private:
  std::uint64_t id_;
  std::vector<Batch> batches_;
};

/// x = constant + sum_i coefficients[i] * d_i for the generators d_i of
/// `batch`; neither constant nor coefficients mention the batch.
struct KlDecomposition {
  NilElement constant;
  std::vector<NilElement> coefficients;
  bool vanishes() const;  // x = 0 for generic d
};

KlDecomposition kl_cancel(const BatchTable& table, const NilElement& x, BatchId batch);

}  // namespace sdg
