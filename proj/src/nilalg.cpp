#include "sdg/nilalg.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "sdg/errors.hpp"

namespace sdg {

namespace {

std::atomic<std::uint64_t> g_next_context{1};

// Product of two monomials, or nullopt when a batch relation kills it.
std::optional<NilMonomial> mono_mul(const NilMonomial& a, const NilMonomial& b) {
  NilMonomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].batch < b[j].batch)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].batch < a[i].batch) {
      out.push_back(b[j++]);
    } else {
      return std::nullopt;  // g_i * g_j = 0 within a batch
    }
  }
  return out;
}

std::vector<NilElement::Term> from_map(std::map<NilMonomial, Scalar>& acc) {
  std::vector<NilElement::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c.sign() != 0) out.emplace_back(m, c);
  }
  return out;
}

}  // namespace

NilElement::NilElement(const Scalar& pure) {
  if (pure.sign() != 0) terms_.emplace_back(NilMonomial{}, pure);
}

NilElement::NilElement(std::uint64_t context, std::vector<Term> terms)
    : context_(context), terms_(std::move(terms)) {
  bool generic = std::any_of(terms_.begin(), terms_.end(),
                             [](const Term& t) { return !t.first.empty(); });
  if (!generic) context_ = 0;
}

NilElement NilElement::generator(std::uint64_t context, Generator g) {
  return NilElement(context, {Term{NilMonomial{g}, Scalar(1)}});
}

std::uint64_t NilElement::join(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b != 0 && a != b) {
    throw UsageError("elements from different algebra contexts cannot be combined");
  }
  return a != 0 ? a : b;
}

Scalar NilElement::pure_part() const {
  if (!terms_.empty() && terms_[0].first.empty()) return terms_[0].second;
  return Scalar();
}

NilElement NilElement::nilpotent_part() const {
  std::vector<Term> t;
  for (const auto& term : terms_) {
    if (!term.first.empty()) t.push_back(term);
  }
  return NilElement(context_, std::move(t));
}

bool NilElement::mentions(BatchId batch) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& g : m) {
      if (g.batch == batch) return true;
    }
  }
  return false;
}

NilElement NilElement::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& [m, c] : t) c = -c;
  return NilElement(context_, std::move(t));
}

NilElement& NilElement::operator+=(const NilElement& rhs) {
  std::uint64_t ctx = join(context_, rhs.context_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = rhs.terms_;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar c = a[i].second + b[j].second;
      if (c.sign() != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  *this = NilElement(ctx, std::move(out));
  return *this;
}

NilElement& NilElement::operator-=(const NilElement& rhs) { return *this += -rhs; }

NilElement& NilElement::operator*=(const NilElement& rhs) {
  std::uint64_t ctx = join(context_, rhs.context_);
  if (is_pure() && rhs.is_pure()) {
    *this = NilElement(pure_part() * rhs.pure_part());
    return *this;
  }
  std::map<NilMonomial, Scalar> acc;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      auto m = mono_mul(ma, mb);
      if (!m) continue;
      auto [it, fresh] = acc.try_emplace(std::move(*m), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  *this = NilElement(ctx, from_map(acc));
  return *this;
}

NilElement& NilElement::operator/=(const NilElement& rhs) { return *this *= inverse(rhs); }

std::string NilElement::str(const BatchTable* names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [m, c] = terms_[k];
    std::string mono;
    for (const auto& g : m) {
      if (!mono.empty()) mono += "*";
      mono += names ? names->generator_name(g)
                    : "g" + std::to_string(g.batch) + "_" + std::to_string(g.index);
    }
    std::string coef = c.str();
    bool compound = coef.find(' ') != std::string::npos;
    std::string term;
    if (mono.empty()) {
      term = compound ? "(" + coef + ")" : coef;
    } else if (coef == "1") {
      term = mono;
    } else if (coef == "-1") {
      term = "-" + mono;
    } else {
      term = (compound ? "(" + coef + ")" : coef) + "*" + mono;
    }
    if (k == 0) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

NilElement inverse(const NilElement& x) {
  Scalar p = x.pure_part();
  if (p.sign() == 0) throw NotInvertibleError("element with zero pure part is not invertible: " + x.str());
  Scalar inv_p = Scalar(1) / p;
  if (x.is_pure()) return NilElement(inv_p);
  NilElement u = -(x.nilpotent_part() * NilElement(inv_p));
  NilElement sum(1);
  NilElement power(1);
  while (true) {
    power *= u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * NilElement(inv_p);
}

NilElement sqrt(const NilElement& x) {
  Scalar p = x.pure_part();
  if (p.sign() <= 0) throw DomainError("square root needs a positive pure part: " + x.str());
  Scalar root = sqrt(p);
  if (x.is_pure()) return NilElement(root);
  NilElement u = x.nilpotent_part() * NilElement(Scalar(1) / p);
  // sqrt(1 + u) = sum_k binom(1/2, k) u^k, finite since u is nilpotent.
  NilElement sum(1);
  NilElement power(1);
  Scalar binom(1);
  for (long k = 1;; ++k) {
    power *= u;
    if (power.is_zero()) break;
    binom = binom * (Scalar(1, 2) - Scalar(k - 1)) / Scalar(k);
    sum += power * NilElement(binom);
  }
  return sum * NilElement(root);
}

bool pure_less(const NilElement& x, const NilElement& y) { return (y - x).pure_sign() > 0; }

BatchTable::BatchTable() : id_(g_next_context.fetch_add(1)) {}

FreshBatch BatchTable::fresh_batch(std::size_t size, std::string name) {
  FreshBatch out;
  out.id = static_cast<BatchId>(batches_.size());
  if (name.empty()) name = "g" + std::to_string(out.id);
  batches_.push_back(Batch{std::move(name), static_cast<std::uint32_t>(size)});
  out.generators.reserve(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    out.generators.push_back(NilElement::generator(id_, Generator{out.id, i}));
  }
  return out;
}

NilElement BatchTable::generator(BatchId batch, std::uint32_t index) const {
  if (batch >= batches_.size() || index >= batches_[batch].size) {
    throw UsageError("unknown generator " + std::to_string(batch) + ":" + std::to_string(index));
  }
  return NilElement::generator(id_, Generator{batch, index});
}

std::optional<BatchId> BatchTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < batches_.size(); ++i) {
    if (batches_[i].name == name) return static_cast<BatchId>(i);
  }
  return std::nullopt;
}

const BatchTable::Batch& BatchTable::batch(BatchId id) const {
  if (id >= batches_.size()) throw UsageError("unknown batch " + std::to_string(id));
  return batches_[id];
}

std::string BatchTable::generator_name(Generator g) const {
  if (g.batch >= batches_.size()) return "g" + std::to_string(g.batch) + "_" + std::to_string(g.index);
  const Batch& b = batches_[g.batch];
  if (b.size == 1) return b.name;
  return b.name + std::to_string(g.index);
}

bool KlDecomposition::vanishes() const {
  return constant.is_zero() &&
         std::all_of(coefficients.begin(), coefficients.end(),
                     [](const NilElement& c) { return c.is_zero(); });
}

KlDecomposition kl_cancel(const BatchTable& table, const NilElement& x, BatchId batch) {
  const auto& info = table.batch(batch);
  if (x.context() != 0 && x.context() != table.id()) {
    throw UsageError("kl_cancel: element belongs to another context");
  }
  KlDecomposition out;
  out.coefficients.resize(info.size);
  for (const auto& [m, c] : x.terms()) {
    auto it = std::find_if(m.begin(), m.end(), [&](const Generator& g) { return g.batch == batch; });
    NilElement coef(c);
    for (const auto& g : m) {
      if (g.batch != batch) coef *= NilElement::generator(table.id(), g);
    }
    if (it == m.end()) {
      out.constant += coef;
    } else {
      out.coefficients[it->index] += coef;
    }
  }
  return out;
}

}  // namespace sdg
