// SPDX-License-Identifier: Apache-2.0
// perm.cpp -- evaluation, interpolation, permutation predicates, linearity

#include "carlitz/perm.hpp"

#include <algorithm>
#include <unordered_map>

namespace carlitz {

Poly make_poly(const Field& f, std::vector<Elem> coeffs) {
  for (const Elem c : coeffs) f.check(c);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return Poly{std::move(coeffs)};
}

Poly monomial(const Field& f, unsigned k, Elem c) {
  f.check(c);
  if (c == 0) return Poly{};
  std::vector<Elem> coeffs(k + 1, 0);
  coeffs[k] = c;
  return Poly{std::move(coeffs)};
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Elem x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    const Elem y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    out[i] = f.add(x, y);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return Poly{std::move(out)};
}

Elem eval(const Field& f, const Poly& p, Elem x) {
  f.check(x);
  Elem acc = 0;
  for (std::size_t i = p.coeffs.size(); i-- > 0;)
    acc = f.add(f.mul(acc, x), p.coeffs[i]);
  return acc;
}

PermMap to_map(const Field& f, const Poly& p) {
  PermMap m;
  m.images.resize(f.q());
  for (std::uint64_t c = 0; c < f.q(); ++c)
    m.images[c] = eval(f, p, static_cast<Elem>(c));
  return m;
}

Poly interpolate(const Field& f, const PermMap& m) {
  // f(x) = -sum_c m[c] * Q_c(x) where Q_c = (x^q - x)/(x - c). Synthetic
  // division gives Q_c coefficients b_i = c^{q-1-i} for i >= 1 and
  // b_0 = c^{q-1} - 1 (zero unless c = 0, where it is -1), using that the
  // derivative of x^q - x is identically -1.
  const std::uint64_t q = f.q();
  std::vector<Elem> r(q, 0);
  for (std::uint64_t c = 0; c < q; ++c) {
    const Elem w = m.images[c];
    if (w == 0) continue;
    if (c == 0) {
      // -w * Q_0 = w - w * x^(q-1)
      r[0] = f.add(r[0], w);
      r[q - 1] = f.sub(r[q - 1], w);
      continue;
    }
    Elem pw = 1;
    for (std::uint64_t i = q - 1; i >= 1; --i) {
      r[i] = f.sub(r[i], f.mul(w, pw));
      pw = f.mul(pw, static_cast<Elem>(c));
    }
  }
  return make_poly(f, std::move(r));
}

bool is_permutation(const Field& f, const std::vector<Elem>& images) {
  if (images.size() != f.q()) return false;
  std::vector<char> seen(f.q(), 0);
  for (const Elem v : images) {
    if (v >= f.q() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_permutation(const Field& f, const PermMap& m) {
  return is_permutation(f, m.images);
}

bool is_complete_mapping(const Field& f, const PermMap& m) {
  if (!is_permutation(f, m)) return false;
  std::vector<Elem> shifted(f.q());
  for (std::uint64_t c = 0; c < f.q(); ++c)
    shifted[c] = f.add(m.images[c], static_cast<Elem>(c));
  return is_permutation(f, shifted);
}

std::optional<unsigned> difference_degree(const Field& f, const PermMap& lo,
                                          const PermMap& hi) {
  PermMap diff;
  diff.images.resize(f.q());
  for (std::uint64_t c = 0; c < f.q(); ++c)
    diff.images[c] = f.sub(hi.images[c], lo.images[c]);
  const Poly p = interpolate(f, diff);
  const auto d = p.degree();
  if (!d || *d == 0) return std::nullopt;
  return d;
}

std::uint32_t linearity(const Field& f, const PermMap& m) {
  const std::uint64_t q = f.q();
  // tally[a*q + b] counts graph-point pairs lying on y = ax + b; a line
  // through t graph points is counted t(t-1)/2 times.
  const bool dense = q <= 1024;
  std::vector<std::uint32_t> tally_vec;
  std::unordered_map<std::uint64_t, std::uint32_t> tally_map;
  if (dense) tally_vec.assign(q * q, 0);
  std::uint32_t best_pairs = 0;
  for (std::uint64_t c1 = 0; c1 < q; ++c1) {
    for (std::uint64_t c2 = c1 + 1; c2 < q; ++c2) {
      const Elem dx = f.sub(static_cast<Elem>(c2), static_cast<Elem>(c1));
      const Elem a =
          f.mul(f.sub(m.images[c2], m.images[c1]), f.inverse_or_zero(dx));
      const Elem b = f.sub(m.images[c1], f.mul(a, static_cast<Elem>(c1)));
      const std::uint64_t key = std::uint64_t{a} * q + b;
      const std::uint32_t t =
          dense ? ++tally_vec[key] : ++tally_map[key];
      best_pairs = std::max(best_pairs, t);
    }
  }
  if (best_pairs == 0) return 1;  // q >= 3 never lands here; defensive
  // best_pairs = t(t-1)/2; invert exactly.
  std::uint32_t t = 1;
  while (std::uint64_t{t + 1} * t / 2 <= best_pairs) ++t;
  return t;
}

ValueSetSummary value_multiset(const Field& f,
                               const std::vector<Elem>& values) {
  std::vector<std::uint32_t> count(f.q(), 0);
  for (const Elem v : values) {
    f.check(v);
    ++count[v];
  }
  ValueSetSummary out;
  out.total = values.size();
  for (std::uint64_t v = 0; v < f.q(); ++v) {
    if (count[v] > 0) {
      out.fibers.emplace_back(static_cast<Elem>(v), count[v]);
      out.max_fiber = std::max(out.max_fiber, count[v]);
    }
  }
  return out;
}

}  // namespace carlitz
