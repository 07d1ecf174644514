// SPDX-License-Identifier: Apache-2.0
// bounds.cpp -- inequality evaluators, collision tallies, curve point counts

#include "carlitz/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace carlitz {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(Errc::ParameterOutOfRange, what);
}

// 1 + x + ... + x^{k-1}, by Horner.
Elem geometric_sum(const Field& f, Elem x, unsigned k) {
  Elem s = 0;
  for (unsigned i = 0; i < k; ++i) s = f.add(f.mul(s, x), 1);
  return s;
}

}  // namespace

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::Main21: return "main";
    case BoundKind::Monomial31: return "monomial";
    case BoundKind::Nontrivial23: return "nontrivial";
    case BoundKind::ChowlaThm1: return "chowla";
    case BoundKind::CMSThm2: return "cms";
    case BoundKind::ITWThm3: return "itw";
  }
  return "unknown";
}

BoundReport main_bound(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  require(q >= 3, "q < 3");
  require(n >= 1, "n < 1");
  require(k >= 1 && k < q - 1, "k outside [1, q-2]");
  const std::uint64_t nu = std::gcd(k, q - 1);
  BoundReport r;
  r.which = BoundKind::Main21;
  r.statement = "n*k + k*(k-1)*sqrt(q) >= q - nu - n";
  r.inputs = {{"q", static_cast<std::int64_t>(q)},
              {"n", static_cast<std::int64_t>(n)},
              {"k", static_cast<std::int64_t>(k)}};
  r.derived = {{"nu", static_cast<std::int64_t>(nu)}};
  r.has_inequality = true;
  r.inequality = SqrtInequality{static_cast<std::int64_t>(n * k),
                                static_cast<std::int64_t>(k * (k - 1)),
                                static_cast<std::int64_t>(q) -
                                    static_cast<std::int64_t>(nu) -
                                    static_cast<std::int64_t>(n),
                                q};
  r.holds = r.inequality.holds();
  return r;
}

BoundReport monomial_bound(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  require(q >= 3, "q < 3");
  require(n >= 1, "n < 1");
  require(k >= 1 && k < q - 1, "k outside [1, q-2]");
  const std::uint64_t m = std::gcd(k + 1, q - 1);
  BoundReport r;
  r.which = BoundKind::Monomial31;
  r.statement = "k*(n+3) + (k-1)*(m-1)*sqrt(q) >= q - n";
  r.inputs = {{"q", static_cast<std::int64_t>(q)},
              {"n", static_cast<std::int64_t>(n)},
              {"k", static_cast<std::int64_t>(k)}};
  r.derived = {{"m", static_cast<std::int64_t>(m)},
               {"m1_min_k", static_cast<std::int64_t>(monomial_m1_min_k(q, n))}};
  r.has_inequality = true;
  r.inequality = SqrtInequality{static_cast<std::int64_t>(k * (n + 3)),
                                static_cast<std::int64_t>((k - 1) * (m - 1)),
                                static_cast<std::int64_t>(q) -
                                    static_cast<std::int64_t>(n),
                                q};
  r.holds = r.inequality.holds();
  return r;
}

std::uint64_t monomial_m1_min_k(std::uint64_t q, std::uint64_t n) {
  require(q >= 3, "q < 3");
  require(n >= 1, "n < 1");
  if (q <= n) return 1;
  const std::uint64_t num = q - n, den = n + 3;
  const std::uint64_t ceil_k = (num + den - 1) / den;
  return std::max<std::uint64_t>(1, ceil_k);
}

bool nontriviality(std::uint64_t q, std::uint64_t k) {
  require(q >= 3, "q < 3");
  require(k >= 1, "k < 1");
  const std::uint64_t nu = std::gcd(k, q - 1);
  const std::int64_t lhs = static_cast<std::int64_t>(q) -
                           static_cast<std::int64_t>(k) -
                           static_cast<std::int64_t>(nu) - 1;
  if (k >= (std::uint64_t{1} << 31)) return false;  // rhs astronomically large
  return int_ge_sqrt(lhs, static_cast<std::int64_t>(k * (k - 1)), q);
}

BoundReport chowla_thm1(std::uint64_t d, std::optional<std::uint64_t> p) {
  require(d >= 1 && d <= 10000, "degree outside [1, 10^4]");
  const std::uint64_t base = d * d - 3 * d + 4;
  const std::uint64_t threshold = base * base;
  BoundReport r;
  r.which = BoundKind::ChowlaThm1;
  r.statement = "no complete mapping of degree d once p > (d^2 - 3d + 4)^2";
  r.inputs = {{"d", static_cast<std::int64_t>(d)}};
  if (p) r.inputs.emplace_back("p", static_cast<std::int64_t>(*p));
  r.derived = {{"threshold", static_cast<std::int64_t>(threshold)}};
  r.holds = !p || *p > threshold;
  return r;
}

BoundReport cms_thm2(std::uint64_t d, std::uint64_t t) {
  require(d >= 1, "d < 1");
  require(t >= 1, "t < 1");
  BoundReport r;
  r.which = BoundKind::CMSThm2;
  r.statement = "t >= 3d/5 (as 5t >= 3d)";
  r.inputs = {{"d", static_cast<std::int64_t>(d)},
              {"t", static_cast<std::int64_t>(t)}};
  r.derived = {{"5t", static_cast<std::int64_t>(5 * t)},
               {"3d", static_cast<std::int64_t>(3 * d)}};
  r.holds = 5 * t >= 3 * d;
  return r;
}

BoundReport itw_thm3(std::uint64_t q, std::optional<std::uint64_t> lin,
                     std::optional<std::uint64_t> crk) {
  require(q >= 3, "q < 3");
  const std::uint64_t rank_floor = q / 2;
  const std::uint64_t lin_cap = (q + 5) / 2;
  BoundReport r;
  r.which = BoundKind::ITWThm3;
  r.statement = "linearity < floor((q+5)/2) forces Crk >= floor(q/2)";
  r.inputs = {{"q", static_cast<std::int64_t>(q)}};
  if (lin) r.inputs.emplace_back("linearity", static_cast<std::int64_t>(*lin));
  if (crk) r.inputs.emplace_back("crk", static_cast<std::int64_t>(*crk));
  r.derived = {{"rank_floor", static_cast<std::int64_t>(rank_floor)},
               {"linearity_cap", static_cast<std::int64_t>(lin_cap)}};
  r.holds = !(lin && crk) || *lin >= lin_cap || *crk >= rank_floor;
  return r;
}

CollisionReport collision_count(const Field& f, const CarlitzForm& form,
                                const Poly& g) {
  const FormClass cls = classify(f, form);
  if (cls != FormClass::L1 && cls != FormClass::L1andL2)
    fail(Errc::NotInL1, "collision domain needs a proper last approximant");
  const auto deg = g.degree();
  if (!deg || *deg < 1) fail(Errc::ConstantG, "g must have degree >= 1");
  if (*deg >= f.q() - 1)
    fail(Errc::ParameterOutOfRange, "deg g must be < q - 1");
  const NormalizedLast nl = normalize_last(f, form);

  const std::uint64_t q = f.q();
  std::vector<std::uint32_t> count(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) {
    const Elem ex = static_cast<Elem>(x);
    const Elem h = eval(f, g, f.sub(ex, nl.d));
    const Elem value =
        f.add(f.sub(nl.a, f.mul(nl.b_tilde, f.inverse_or_zero(ex))), h);
    ++count[value];
  }
  CollisionReport r;
  r.q = q;
  r.n = form.n();
  r.k = *deg;
  r.a = nl.a;
  r.b = nl.b;
  r.d = nl.d;
  r.b_tilde = nl.b_tilde;
  for (std::uint64_t v = 0; v < q; ++v) {
    if (count[v] == 0) continue;
    r.fibers.emplace_back(static_cast<Elem>(v), count[v]);
    r.max_fiber = std::max(r.max_fiber, count[v]);
    r.mu += std::uint64_t{count[v]} * (count[v] - 1);
  }
  return r;
}

std::uint64_t k1_mu_formula(const Field& f, Elem v) {
  f.check(v);
  if (v == 0) fail(Errc::ZeroInput, "hyperbola constant must be nonzero");
  const std::uint64_t q = f.q();
  if (q % 2 == 0) return q - 2;
  return f.mth_power_residue(v, 2) ? q - 3 : q - 1;
}

bool pole_consistency(const CollisionReport& r) {
  return std::uint64_t{r.k + 1} * (r.n - 1) >= r.mu;
}

CurveCountReport curve_affine_count(const Field& f, unsigned k, Elem b,
                                    Elem c) {
  f.check(b);
  f.check(c);
  if (b == 0 || c == 0) fail(Errc::ZeroCoefficient, "curve needs b, c != 0");
  const std::uint64_t q = f.q();
  require(k >= 1 && k < q - 1, "k outside [1, q-2]");
  const std::uint64_t m = std::gcd<std::uint64_t>(k + 1, q - 1);

  CurveCountReport r;
  r.q = q;
  r.k = k;
  r.b = b;
  r.c = c;
  r.m = m;
  r.genus = (std::uint64_t{k} - 1) * (m - 1) / 2;
  for (std::uint64_t x = 1; x < q; ++x) {
    const Elem ex = static_cast<Elem>(x);
    const Elem s = geometric_sum(f, ex, k);
    if (s == 0) continue;
    const Elem denom = f.mul(c, f.mul(ex, s));
    const Elem v = f.mul(b, f.inverse_or_zero(denom));
    if (f.mth_power_residue(v, m)) {
      r.affine_count += m;
      if (x == 1) r.x_equal_one_points += m;
    }
  }
  const std::int64_t bb = static_cast<std::int64_t>(k - 1) *
                          static_cast<std::int64_t>(m - 1);
  r.floor_inequality =
      SqrtInequality{static_cast<std::int64_t>(r.affine_count), bb,
                     static_cast<std::int64_t>(q) - static_cast<std::int64_t>(k),
                     q};
  r.floor_holds = r.floor_inequality.holds();
  r.floor_positive = int_gt_sqrt(
      static_cast<std::int64_t>(q) - static_cast<std::int64_t>(k), bb, q);
  r.parabola_count = parabola_intersections(f, k, b, c);
  r.parabola_cap = 3 * k + 1;
  return r;
}

std::uint64_t parabola_intersections(const Field& f, unsigned k, Elem b,
                                     Elem c) {
  f.check(b);
  f.check(c);
  if (b == 0 || c == 0) fail(Errc::ZeroCoefficient, "curve needs b, c != 0");
  const std::uint64_t q = f.q();
  require(k >= 1 && k < q - 1, "k outside [1, q-2]");
  std::uint64_t count = 0;
  for (std::uint64_t g = 1; g < q; ++g) {
    const Elem gamma = static_cast<Elem>(g);
    const Elem x = f.mul(gamma, gamma);
    const Elem s = geometric_sum(f, x, k);
    if (s == 0) continue;
    const Elem v = f.mul(b, f.inverse_or_zero(f.mul(c, f.mul(x, s))));
    if (f.pow(gamma, k + 1) == v) ++count;
  }
  return count;
}

}  // namespace carlitz
