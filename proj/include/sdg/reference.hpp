#pragma once

// Brute-force reference for products in the batch-truncated algebra:
// multiply as ordinary commutative polynomials with exponent vectors, then
// discard every monomial in the ideal generated by same-batch products.
// Shares nothing with the library's multiplication path.

#include <gmpxx.h>

#include <map>
#include <vector>

namespace sdg::reference {

using Exponents = std::vector<int>;
using Poly = std::map<Exponents, mpq_class>;

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return out;
}

// batch_of[i] is the batch of generator i.
inline Poly reduce(const Poly& p, const std::vector<int>& batch_of) {
  Poly out;
  for (const auto& [e, c] : p) {
    bool killed = false;
    for (std::size_t i = 0; i < e.size() && !killed; ++i) {
      if (e[i] >= 2) killed = true;
      for (std::size_t j = i + 1; j < e.size() && !killed; ++j) {
        if (e[i] > 0 && e[j] > 0 && batch_of[i] == batch_of[j]) killed = true;
      }
    }
    if (!killed && sgn(c) != 0) out[e] += c;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace sdg::reference
