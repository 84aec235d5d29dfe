// The nilpotent algebra against its brute-force reference, and field laws
// of the exact scalars.

#include <functional>
#include <sstream>

#include "check_util.hpp"
#include "sdg/reference.hpp"

namespace sdg::suite {

namespace {

struct Layout {
  BatchTable table;
  std::vector<NilElement> gens;
  std::vector<Generator> ids;
  std::vector<int> batch_of;
};

void build(Layout& out, const std::vector<int>& sizes) {
  for (int s : sizes) {
    auto b = out.table.fresh_batch(static_cast<std::size_t>(s));
    for (std::uint32_t i = 0; i < b.generators.size(); ++i) {
      out.gens.push_back(b.generators[i]);
      out.ids.push_back({b.id, i});
      out.batch_of.push_back(static_cast<int>(b.id));
    }
  }
}

// Monomials that survive in the truncated algebra: at most one generator per
// batch.
std::vector<reference::Exponents> surviving_monomials(const Layout& l) {
  std::vector<reference::Exponents> out;
  const std::size_t g = l.gens.size();
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    reference::Exponents e(g, 0);
    bool ok = true;
    for (std::size_t i = 0; i < g && ok; ++i) {
      if ((mask >> i & 1u) == 0) continue;
      e[i] = 1;
      for (std::size_t j = 0; j < i; ++j) ok = ok && !(e[j] && l.batch_of[j] == l.batch_of[i]);
    }
    if (ok) out.push_back(std::move(e));
  }
  return out;
}

NilElement to_element(const Layout& l, const reference::Poly& p) {
  NilElement out;
  for (const auto& [e, c] : p) {
    NilElement term{Scalar(c)};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= l.gens[i];
    }
    out += term;
  }
  return out;
}

std::optional<reference::Poly> to_reference(const Layout& l, const NilElement& x) {
  reference::Poly out;
  for (const auto& [m, c] : x.terms()) {
    reference::Exponents e(l.gens.size(), 0);
    for (const auto& g : m) {
      for (std::size_t i = 0; i < l.ids.size(); ++i) {
        if (l.ids[i] == g) e[i] = 1;
      }
    }
    auto q = c.as_rational();
    if (!q) return std::nullopt;
    out[e] = *q;
  }
  return out;
}

std::string render(const reference::Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    os << (first ? "" : " + ") << c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) os << "*g" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    first = false;
  }
  return first ? "0" : os.str();
}

// Coefficient pattern for the k-th monomial of a support: pairwise distinct,
// nonzero, alternating in sign.
mpq_class pattern(std::size_t k) {
  mpq_class c(static_cast<long>(k) + 2, static_cast<long>(k) + 1);
  c.canonicalize();
  return k % 2 == 1 ? mpq_class(-c) : c;
}

reference::Poly random_poly(Trial& t, const std::vector<reference::Exponents>& monomials, std::size_t max_terms) {
  reference::Poly p;
  auto n = static_cast<std::size_t>(t.integer(0, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& e = monomials[static_cast<std::size_t>(t.integer(0, static_cast<long>(monomials.size()) - 1))];
    p[e] += mpq_class(t.integer(-20, 20), t.integer(1, 9));
  }
  for (auto it = p.begin(); it != p.end();) it = sgn(it->second) == 0 ? p.erase(it) : std::next(it);
  return p;
}

// Products, inverses and square roots of random elements over a random
// layout agree with the reference.  The control compares against a
// reference that forgets the same-batch relations.
void algebra_oracle(Trial& t, bool forget_batches) {
  static const std::vector<std::vector<int>> layouts = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}, {1, 2}};
  const auto& sizes = forget_batches ? std::vector<int>{2}
                                     : layouts[static_cast<std::size_t>(t.integer(0, static_cast<long>(layouts.size()) - 1))];
  Layout l;
  build(l, sizes);
  auto monomials = surviving_monomials(l);
  reference::Poly px, py;
  if (forget_batches) {
    px = {{{0, 0}, 1}, {{1, 0}, 1}};
    py = {{{0, 0}, 1}, {{0, 1}, 1}};
  } else {
    px = random_poly(t, monomials, 4);
    py = random_poly(t, monomials, 4);
  }
  NilElement x = to_element(l, px), y = to_element(l, py);
  std::vector<int> wrong(l.gens.size());
  for (std::size_t i = 0; i < wrong.size(); ++i) wrong[i] = static_cast<int>(i);
  const auto& batches = forget_batches ? wrong : l.batch_of;
  reference::Poly expected = reference::reduce(reference::multiply(px, py), batches);
  auto got = to_reference(l, x * y);
  std::ostringstream layout;
  for (int s : sizes) layout << s << ' ';
  t.note("layout", layout.str());
  t.note("x", render(px));
  t.note("y", render(py));
  t.note("product", got ? render(*got) : std::string("irrational coefficient"));
  t.note("reference", render(expected));
  t.expect(got && *got == expected, "x*y matches the reference");
  if (forget_batches) return;
  t.expect(x * y == y * x, "x*y = y*x");
  if (x.is_invertible()) {
    t.expect(x * inverse(x) == NilElement(1), "x * x^-1 = 1");
    t.expect(inverse(inverse(x)) == x, "(x^-1)^-1 = x");
  }
  if (x.pure_sign() > 0) {
    NilElement r = sqrt(x);
    t.expect(r * r == x, "sqrt(x)^2 = x");
    t.expect(r.pure_sign() > 0, "sqrt(x) > 0");
  }
}

Scalar random_scalar(Trial& t) {
  static const long primes[] = {2, 3, 5, 7, 11};
  auto rat = [&] { return Scalar(t.integer(-30, 30), t.integer(1, 12)); };
  auto prime = [&] { return Scalar(primes[t.integer(0, 4)]); };
  Scalar x = rat();
  switch (t.integer(0, 2)) {
    case 0: x += rat() * sqrt(prime()); break;
    case 1: x += rat() * sqrt(prime()) + rat() * sqrt(prime()) * sqrt(prime()); break;
    default: x += rat() * sqrt(Scalar(t.integer(1, 20)) + sqrt(prime())); break;
  }
  return x;
}

// Field laws of the exact scalars, decided by the exact sign of differences.
void scalar_field_laws(Trial& t, bool additive_sqrt) {
  Scalar a = random_scalar(t), b = random_scalar(t), c = random_scalar(t);
  t.note("a", a.str());
  t.note("b", b.str());
  t.note("c", c.str());
  if (additive_sqrt) {
    // sqrt is not additive.
    Scalar pa = abs(a) + Scalar(1), pb = abs(b) + Scalar(1);
    t.expect(sqrt(pa + pb) == sqrt(pa) + sqrt(pb), "sqrt(a + b) = sqrt a + sqrt b");
    return;
  }
  t.expect(((a + b) + c - (a + (b + c))).sign() == 0, "(a + b) + c = a + (b + c)");
  t.expect(((a * b) * c - a * (b * c)).sign() == 0, "(ab)c = a(bc)");
  t.expect((a * (b + c) - (a * b + a * c)).sign() == 0, "a(b + c) = ab + ac");
  t.expect((a * b - b * a).sign() == 0, "ab = ba");
  t.expect((a - b).sign() == -(b - a).sign(), "sign(a - b) = -sign(b - a)");
  if (a.sign() != 0) t.expect((a * (Scalar(1) / a) - Scalar(1)).sign() == 0, "a * (1/a) = 1");
  t.expect(sqrt(a * a + Scalar(1)) * sqrt(a * a + Scalar(1)) == a * a + Scalar(1), "sqrt(x)^2 = x");
  if (a.sign() != 0) t.expect(sqrt(a * a) == abs(a), "sqrt(a^2) = |a|");
  t.expect((a * a).sign() >= 0, "a^2 >= 0");
  int ab = (a - b).sign(), bc = (b - c).sign();
  if (ab < 0 && bc < 0) t.expect((a - c).sign() < 0, "order is transitive");
  t.expect(std::abs(a.approx() - (a - b + b).approx()) <= 1e-9 * (1 + std::abs(a.approx())),
           "approximation consistent");
}

}  // namespace

std::vector<std::vector<int>> batch_layouts(int generators) {
  std::vector<std::vector<int>> out;
  // Non-increasing partitions of each total.
  std::function<void(int, int, std::vector<int>&)> rec = [&](int left, int max_part, std::vector<int>& cur) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p, cur);
      cur.pop_back();
    }
  };
  for (int total = 1; total <= generators; ++total) {
    std::vector<int> cur;
    rec(total, total, cur);
  }
  return out;
}

OracleReport exhaustive_product_oracle(const std::vector<int>& layout, std::size_t max_terms) {
  OracleReport rep;
  rep.layout = layout;
  Layout l;
  build(l, layout);
  auto monomials = surviving_monomials(l);
  // Every support of at most max_terms monomials.
  std::vector<reference::Poly> polys;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> supports = [&](std::size_t start) {
    reference::Poly p;
    for (std::size_t k = 0; k < pick.size(); ++k) p[monomials[pick[k]]] = pattern(k + pick[0]);
    polys.push_back(std::move(p));
    if (pick.size() == max_terms) return;
    for (std::size_t i = start; i < monomials.size(); ++i) {
      pick.push_back(i);
      supports(i + 1);
      pick.pop_back();
    }
  };
  supports(0);
  std::vector<NilElement> elems;
  elems.reserve(polys.size());
  for (const auto& p : polys) elems.push_back(to_element(l, p));
  rep.elements = elems.size();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      ++rep.products;
      reference::Poly expected = reference::reduce(reference::multiply(polys[i], polys[j]), l.batch_of);
      auto got = to_reference(l, elems[i] * elems[j]);
      if (got && *got == expected) continue;
      if (rep.mismatches++ == 0) {
        rep.first_mismatch = "(" + render(polys[i]) + ") * (" + render(polys[j]) + "): got " +
                             (got ? render(*got) : std::string("irrational")) + ", expected " + render(expected);
      }
    }
  }
  return rep;
}

void register_algebra_checks(std::vector<Check>& out) {
  out.push_back(Check{"algebra-oracle", "nilpotent products, inverses and roots agree with the brute-force reference",
                      [](Trial& t) { algebra_oracle(t, false); }, [](Trial& t) { algebra_oracle(t, true); }});
  out.push_back(Check{"scalar-field-laws", "exact scalars satisfy the ordered field laws",
                      [](Trial& t) { scalar_field_laws(t, false); }, [](Trial& t) { scalar_field_laws(t, true); }});
}

}  // namespace sdg::suite
