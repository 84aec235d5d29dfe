#include "sdg/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sdg/errors.hpp"

namespace sdg {
namespace detail {

struct Radical;
using Mono = std::vector<const Radical*>;  // sorted by Radical::id

struct Term {
  Mono mono;
  mpq_class coef;
};
using Terms = std::vector<Term>;

struct Interval {
  double lo;
  double hi;
};

struct Radical {
  std::uint64_t id = 0;
  int depth = 1;
  Terms radicand;
  Interval iv{0.0, 0.0};
  double approx = 0.0;
  std::string label;
};

struct Poly {
  explicit Poly(Terms t) : terms(std::move(t)) {}
  Terms terms;
  mutable std::atomic<int> sign_cache{2};  // 2 = not yet computed
};

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

bool mono_less(const Mono& a, const Mono& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Radical* x, const Radical* y) { return x->id < y->id; });
}

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return mono_less(a, b); }
};

using Accum = std::map<Mono, mpq_class, MonoLess>;

Terms from_accum(Accum& acc) {
  Terms out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.push_back(Term{m, c});
  }
  return out;
}

Terms rational_terms(const mpq_class& q) {
  if (sgn(q) == 0) return {};
  return Terms{Term{{}, q}};
}

bool is_rational_terms(const Terms& x) {
  return x.empty() || (x.size() == 1 && x[0].mono.empty());
}

mpq_class rational_value(const Terms& x) { return x.empty() ? mpq_class(0) : x[0].coef; }

Terms add(const Terms& a, const Terms& b) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && mono_less(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || mono_less(b[j].mono, a[i].mono)) {
      out.push_back(b[j++]);
    } else {
      mpq_class c = a[i].coef + b[j].coef;
      if (sgn(c) != 0) out.push_back(Term{a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms scale(const Terms& a, const mpq_class& k) {
  if (sgn(k) == 0) return {};
  Terms out = a;
  for (auto& t : out) t.coef *= k;
  return out;
}

Terms neg(const Terms& a) { return scale(a, mpq_class(-1)); }

Terms sub(const Terms& a, const Terms& b) { return add(a, neg(b)); }

Terms mul(const Terms& a, const Terms& b);

// Adds c * m1 * m2 into acc, reducing r^2 = radicand(r) for shared radicals.
void mul_mono_into(const Mono& m1, const Mono& m2, const mpq_class& c, Accum& acc) {
  Mono rest;
  Mono common;
  std::size_t i = 0, j = 0;
  while (i < m1.size() || j < m2.size()) {
    if (j == m2.size() || (i < m1.size() && m1[i]->id < m2[j]->id)) {
      rest.push_back(m1[i++]);
    } else if (i == m1.size() || m2[j]->id < m1[i]->id) {
      rest.push_back(m2[j++]);
    } else {
      common.push_back(m1[i]);
      ++i;
      ++j;
    }
  }
  if (common.empty()) {
    acc[rest] += c;
    return;
  }
  Terms cur{Term{rest, c}};
  for (const Radical* r : common) {
    if (is_rational_terms(r->radicand)) {
      cur = scale(cur, rational_value(r->radicand));
    } else {
      cur = mul(cur, r->radicand);
    }
  }
  for (auto& t : cur) acc[t.mono] += t.coef;
}

Terms mul(const Terms& a, const Terms& b) {
  if (a.empty() || b.empty()) return {};
  if (is_rational_terms(a)) return scale(b, a[0].coef);
  if (is_rational_terms(b)) return scale(a, b[0].coef);
  Accum acc;
  for (const auto& x : a) {
    for (const auto& y : b) mul_mono_into(x.mono, y.mono, x.coef * y.coef, acc);
  }
  return from_accum(acc);
}

Interval iv_point(const mpq_class& q) {
  double d = q.get_d();  // truncates toward zero
  return {down(d), up(d)};
}

Interval iv_add(Interval a, Interval b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval iv_mul(Interval a, Interval b) {
  double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  double lo = kInf, hi = -kInf;
  for (double v : p) {
    if (std::isnan(v)) return {-kInf, kInf};
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {down(lo), up(hi)};
}

Interval iv_sqrt(Interval a) {
  double lo = a.lo > 0 ? std::max(0.0, down(std::sqrt(a.lo))) : 0.0;
  double hi = a.hi > 0 ? up(std::sqrt(a.hi)) : 0.0;
  return {lo, hi};
}

Interval interval_of(const Terms& x) {
  Interval sum{0.0, 0.0};
  for (const auto& t : x) {
    Interval term = iv_point(t.coef);
    for (const Radical* r : t.mono) term = iv_mul(term, r->iv);
    sum = iv_add(sum, term);
  }
  return sum;
}

double approx_of(const Terms& x) {
  double sum = 0.0;
  for (const auto& t : x) {
    double term = t.coef.get_d();
    for (const Radical* r : t.mono) term *= r->approx;
    sum += term;
  }
  return sum;
}

const Radical* top_radical(const Terms& x) {
  const Radical* top = nullptr;
  for (const auto& t : x) {
    if (!t.mono.empty() && (top == nullptr || t.mono.back()->id > top->id)) top = t.mono.back();
  }
  return top;
}

// x = p + q * top, with p and q free of `top`.
void split_top(const Terms& x, const Radical* top, Terms& p, Terms& q) {
  Accum pa, qa;
  for (const auto& t : x) {
    if (!t.mono.empty() && t.mono.back() == top) {
      Mono m(t.mono.begin(), t.mono.end() - 1);
      qa[m] += t.coef;
    } else {
      pa[t.mono] += t.coef;
    }
  }
  p = from_accum(pa);
  q = from_accum(qa);
}

int sign_of(const Terms& x) {
  if (x.empty()) return 0;
  if (x.size() == 1) return sgn(x[0].coef);  // radicals are positive
  Interval iv = interval_of(x);
  if (iv.lo > 0) return 1;
  if (iv.hi < 0) return -1;
  const Radical* top = top_radical(x);
  if (top == nullptr) return sgn(rational_value(x));
  Terms p, q;
  split_top(x, top, p, q);
  int sq = sign_of(q);
  int sp = sign_of(p);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 with q^2 * top^2.
  Terms d = sub(mul(p, p), mul(mul(q, q), top->radicand));
  int sd = sign_of(d);
  if (sd > 0) return sp;
  if (sd < 0) return sq;
  return 0;
}

Terms single_radical(const Radical* r) { return Terms{Term{Mono{r}, mpq_class(1)}}; }

Terms inv(const Terms& x) {
  if (x.empty()) throw DomainError("division by zero");
  if (is_rational_terms(x)) return rational_terms(mpq_class(1) / x[0].coef);
  if (x.size() == 1) {
    // 1/(c m) = m / (c * prod radicand)
    Terms prod = rational_terms(mpq_class(1));
    for (const Radical* r : x[0].mono) prod = mul(prod, r->radicand);
    return mul(Terms{Term{x[0].mono, mpq_class(1) / x[0].coef}}, inv(prod));
  }
  const Radical* top = top_radical(x);
  Terms p, q;
  split_top(x, top, p, q);
  if (q.empty()) return inv(p);
  Terms d = sub(mul(p, p), mul(mul(q, q), top->radicand));
  if (sign_of(d) != 0) return mul(sub(p, mul(q, single_radical(top))), inv(d));
  // The radicand of `top` is a square in the lower field; x = 2p or x = 0.
  int sp = sign_of(p);
  int sq = sign_of(q);
  if (sp != 0 && sp == sq) return inv(scale(p, mpq_class(2)));
  throw DomainError("division by zero");
}

std::optional<mpz_class> exact_isqrt(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<mpq_class> exact_qsqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  auto n = exact_isqrt(q.get_num());
  if (!n) return std::nullopt;
  auto d = exact_isqrt(q.get_den());
  if (!d) return std::nullopt;
  mpq_class out(*n, *d);
  out.canonicalize();
  return out;
}

std::string terms_str(const Terms& x);

struct Registry {
  std::mutex mu;
  std::map<std::string, std::unique_ptr<Radical>> by_key;
  std::uint64_t next_id = 1;
};

Registry& registry() {
  static Registry reg;
  return reg;
}

std::atomic<int>& depth_cap_ref() {
  static std::atomic<int> cap = [] {
    if (const char* env = std::getenv("SDG_SQRT_DEPTH_CAP")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) return static_cast<int>(v);
    }
    return 8;
  }();
  return cap;
}

std::string key_of(const Terms& x) {
  std::ostringstream os;
  for (const auto& t : x) {
    os << t.coef.get_str() << '[';
    for (const Radical* r : t.mono) os << r->id << ',';
    os << ']';
  }
  return os.str();
}

int depth_of(const Terms& x) {
  int d = 0;
  for (const auto& t : x) {
    for (const Radical* r : t.mono) d = std::max(d, r->depth);
  }
  return d;
}

// Interns sqrt(radicand), radicand > 0 and not a rational square.
const Radical* intern(const Terms& radicand) {
  const bool integral = is_rational_terms(radicand);
  std::string key = (integral ? "i:" : "n:") + key_of(radicand);
  int depth = integral ? 1 : depth_of(radicand) + 1;
  if (depth > sqrt_depth_cap()) {
    throw ResourceError("nested square-root depth " + std::to_string(depth) +
                        " exceeds cap " + std::to_string(sqrt_depth_cap()));
  }
  Registry& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.by_key.find(key);
  if (it != reg.by_key.end()) return it->second.get();
  auto r = std::make_unique<Radical>();
  r->id = reg.next_id++;
  r->depth = depth;
  r->radicand = radicand;
  r->iv = iv_sqrt(interval_of(radicand));
  r->approx = std::sqrt(approx_of(radicand));
  r->label = "sqrt(" + terms_str(radicand) + ")";
  const Radical* out = r.get();
  reg.by_key.emplace(std::move(key), std::move(r));
  return out;
}

// sqrt(m) for a positive integer m, written as k * prod sqrt(p_i).
Terms sqrt_integer(const mpz_class& m_in) {
  mpz_class m = m_in;
  mpz_class k = 1;
  std::vector<mpz_class> odd;
  for (unsigned long p = 2; p <= 100000; p += (p == 2 ? 1 : 2)) {
    mpz_class pp = p;
    if (pp * pp > m) break;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= pp;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= pp;
    if (e % 2 == 1) odd.push_back(pp);
  }
  if (m > 1) {
    if (auto r = exact_isqrt(m)) {
      k *= *r;
    } else {
      odd.push_back(m);
    }
  }
  Mono mono;
  for (const auto& f : odd) mono.push_back(intern(rational_terms(mpq_class(f))));
  std::sort(mono.begin(), mono.end(),
            [](const Radical* a, const Radical* b) { return a->id < b->id; });
  return Terms{Term{mono, mpq_class(k)}};
}

Terms sqrt_rational(const mpq_class& q) {
  if (auto r = exact_qsqrt(q)) return rational_terms(*r);
  // sqrt(n/d) = sqrt(n*d) / d
  mpz_class nd = q.get_num() * q.get_den();
  mpq_class inv_den(mpz_class(1), q.get_den());
  return scale(sqrt_integer(nd), inv_den);
}

// Square root inside the field generated by the radicals of x, if any.
std::optional<Terms> try_sqrt(const Terms& x) {
  if (x.empty()) return Terms{};
  if (is_rational_terms(x)) {
    if (auto r = exact_qsqrt(x[0].coef)) return rational_terms(*r);
    return std::nullopt;
  }
  if (sign_of(x) < 0) return std::nullopt;
  const Radical* top = top_radical(x);
  Terms p, q;
  split_top(x, top, p, q);
  if (sign_of(q) == 0) return try_sqrt(p);
  // (u + v*top)^2 = x  <=>  u^2 + v^2 a = p,  2uv = q.
  Terms disc = sub(mul(p, p), mul(mul(q, q), top->radicand));
  auto delta = try_sqrt(disc);
  if (!delta) return std::nullopt;
  const mpq_class half(1, 2);
  for (const Terms& w : {scale(add(p, *delta), half), scale(sub(p, *delta), half)}) {
    if (sign_of(w) <= 0) continue;
    auto u = try_sqrt(w);
    if (!u) continue;
    Terms v = mul(q, inv(scale(*u, mpq_class(2))));
    Terms y = add(*u, mul(v, single_radical(top)));
    if (sign_of(y) < 0) y = neg(y);
    if (sign_of(sub(mul(y, y), x)) == 0) return y;
  }
  return std::nullopt;
}

std::string term_str(const Term& t) {
  std::vector<std::string> factors;
  for (const Radical* r : t.mono) factors.push_back(r->label);
  std::sort(factors.begin(), factors.end());
  std::string rad;
  for (std::size_t i = 0; i < factors.size(); ++i) rad += (i ? "*" : "") + factors[i];
  if (rad.empty()) return t.coef.get_str();
  if (t.coef == 1) return rad;
  if (t.coef == -1) return "-" + rad;
  return t.coef.get_str() + "*" + rad;
}

std::string terms_str(const Terms& x) {
  if (x.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : x) parts.push_back(term_str(t));
  // Radical ids depend on creation order; sort for a stable rendering.
  std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
    bool ra = a.find("sqrt") == std::string::npos;
    bool rb = b.find("sqrt") == std::string::npos;
    if (ra != rb) return ra;
    std::string ka = a[0] == '-' ? a.substr(1) : a;
    std::string kb = b[0] == '-' ? b.substr(1) : b;
    return ka != kb ? ka < kb : a < b;
  });
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-') {
      out += " - " + parts[i].substr(1);
    } else {
      out += " + " + parts[i];
    }
  }
  return out;
}

const Terms& empty_terms() {
  static const Terms e;
  return e;
}

}  // namespace
}  // namespace detail

using detail::Poly;
using detail::Terms;

namespace {

const Terms& terms_of(const std::shared_ptr<const Poly>& p) {
  return p ? p->terms : detail::empty_terms();
}

std::shared_ptr<const Poly> make_poly(Terms t) {
  if (t.empty()) return nullptr;
  return std::make_shared<const Poly>(std::move(t));
}

}  // namespace

Scalar::Scalar() = default;

Scalar::Scalar(long value) : rep_(make_poly(detail::rational_terms(mpq_class(value)))) {}

Scalar::Scalar(const mpq_class& value) : rep_(make_poly(detail::rational_terms(value))) {}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  rep_ = make_poly(detail::rational_terms(q));
}

Scalar::Scalar(std::shared_ptr<const detail::Poly> rep) : rep_(std::move(rep)) {}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    v.erase(0, v.find_first_not_of(" \t"));
    v.erase(v.find_last_not_of(" \t") + 1);
  };
  trim(s);
  auto valid_int = [](const std::string& v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i >= v.size()) return false;
    return std::all_of(v.begin() + static_cast<long>(i), v.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    trim(num);
    trim(den);
  }
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::operator-() const { return Scalar(make_poly(detail::neg(terms_of(rep_)))); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (!rhs.rep_) return *this;
  if (!rep_) return *this = rhs;
  rep_ = make_poly(detail::add(terms_of(rep_), terms_of(rhs.rep_)));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (!rhs.rep_) return *this;
  rep_ = make_poly(detail::sub(terms_of(rep_), terms_of(rhs.rep_)));
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (!rep_ || !rhs.rep_) {
    rep_ = nullptr;
    return *this;
  }
  rep_ = make_poly(detail::mul(terms_of(rep_), terms_of(rhs.rep_)));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.sign() == 0) throw DomainError("division by a zero scalar");
  if (!rep_) return *this;
  rep_ = make_poly(detail::mul(terms_of(rep_), detail::inv(terms_of(rhs.rep_))));
  return *this;
}

int Scalar::sign() const {
  if (!rep_) return 0;
  int cached = rep_->sign_cache.load(std::memory_order_relaxed);
  if (cached != 2) return cached;
  int s = detail::sign_of(rep_->terms);
  rep_->sign_cache.store(s, std::memory_order_relaxed);
  return s;
}

bool Scalar::is_rational() const { return detail::is_rational_terms(terms_of(rep_)); }

std::optional<mpq_class> Scalar::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return detail::rational_value(terms_of(rep_));
}

int Scalar::depth() const { return detail::depth_of(terms_of(rep_)); }

double Scalar::approx() const { return detail::approx_of(terms_of(rep_)); }

std::string Scalar::str() const { return detail::terms_str(terms_of(rep_)); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_ == b.rep_) return true;
  const Terms& x = terms_of(a.rep_);
  const Terms& y = terms_of(b.rep_);
  if (x.size() == y.size()) {
    bool same = true;
    for (std::size_t i = 0; same && i < x.size(); ++i) {
      same = x[i].mono == y[i].mono && x[i].coef == y[i].coef;
    }
    if (same) return true;
  }
  return (a - b).sign() == 0;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar sqrt(const Scalar& a) {
  if (a.sign() <= 0) throw DomainError("square root of a non-positive scalar: " + a.str());
  const Terms& x = terms_of(a.rep_);
  if (detail::is_rational_terms(x)) return Scalar(make_poly(detail::sqrt_rational(x[0].coef)));
  if (auto r = detail::try_sqrt(x)) return Scalar(make_poly(std::move(*r)));
  mpq_class content = x[0].coef;
  if (sgn(content) < 0) content = -content;
  Terms primitive = detail::scale(x, mpq_class(1) / content);
  const detail::Radical* r = detail::intern(primitive);
  return Scalar(make_poly(detail::mul(detail::sqrt_rational(content), detail::single_radical(r))));
}

Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }

int sqrt_depth_cap() { return detail::depth_cap_ref().load(); }

void set_sqrt_depth_cap(int cap) {
  if (cap < 1) throw UsageError("sqrt depth cap must be positive");
  detail::depth_cap_ref().store(cap);
}

}  // namespace sdg
