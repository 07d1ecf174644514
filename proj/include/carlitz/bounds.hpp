// SPDX-License-Identifier: Apache-2.0
// bounds.hpp -- exact inequality checks, collision counts, curve counts
//
// Every verdict that involves sqrt(q) is decided exactly by the squaring
// rule on integers; no floating point enters any holds() decision.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/field.hpp"
#include "carlitz/form.hpp"
#include "carlitz/perm.hpp"

namespace carlitz {

// The claim "a + b*sqrt(q) >= c" with b >= 0, decided exactly:
// true iff c - a <= 0, or else b^2 q >= (c - a)^2.
struct SqrtInequality {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::uint64_t q = 0;

  bool holds() const {
    const std::int64_t d = c - a;
    if (d <= 0) return true;
    if (b <= 0) return false;
    return static_cast<__int128>(b) * b * static_cast<__int128>(q) >=
           static_cast<__int128>(d) * d;
  }
  bool operator==(const SqrtInequality&) const = default;
};

// x >= b*sqrt(q) and x > b*sqrt(q) for b >= 0, exactly.
inline bool int_ge_sqrt(std::int64_t x, std::int64_t b, std::uint64_t q) {
  if (b <= 0) return x >= 0;
  if (x < 0) return false;
  return static_cast<__int128>(x) * x >=
         static_cast<__int128>(b) * b * static_cast<__int128>(q);
}
inline bool int_gt_sqrt(std::int64_t x, std::int64_t b, std::uint64_t q) {
  if (b <= 0) return x > 0;
  if (x < 0) return false;
  return static_cast<__int128>(x) * x >
         static_cast<__int128>(b) * b * static_cast<__int128>(q);
}

enum class BoundKind {
  Main21,
  Monomial31,
  Nontrivial23,
  ChowlaThm1,
  CMSThm2,
  ITWThm3,
};

const char* bound_kind_name(BoundKind k);

struct BoundReport {
  BoundKind which = BoundKind::Main21;
  bool holds = false;
  std::string statement;
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  std::vector<std::pair<std::string, std::int64_t>> derived;
  bool has_inequality = false;
  SqrtInequality inequality;
};

// nk + k(k-1) sqrt(q) >= q - nu - n, nu = gcd(k, q-1).
BoundReport main_bound(std::uint64_t q, std::uint64_t n, std::uint64_t k);
// k(n+3) + (k-1)(m-1) sqrt(q) >= q - n, m = gcd(k+1, q-1).
BoundReport monomial_bound(std::uint64_t q, std::uint64_t n, std::uint64_t k);
// Smallest k >= 1 allowed by the m = 1 specialization k >= (q-n)/(n+3).
std::uint64_t monomial_m1_min_k(std::uint64_t q, std::uint64_t n);
// The main bound constrains k only while q >= k(k-1) sqrt(q) + k + nu + 1.
bool nontriviality(std::uint64_t q, std::uint64_t k);

// Classical predicates kept for cross-reference:
// no complete mapping of degree d when p > (d^2 - 3d + 4)^2.
BoundReport chowla_thm1(std::uint64_t d,
                        std::optional<std::uint64_t> p = std::nullopt);
// complete mapping of degree d = q - t - 2 forces t >= 3d/5 (checked as
// 5t >= 3d).
BoundReport cms_thm2(std::uint64_t d, std::uint64_t t);
// linearity below floor((q+5)/2) forces Crk >= floor(q/2).
BoundReport itw_thm3(std::uint64_t q,
                     std::optional<std::uint64_t> lin = std::nullopt,
                     std::optional<std::uint64_t> crk = std::nullopt);

struct CollisionReport {
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned k = 0;
  Elem a = 0, b = 0, d = 0, b_tilde = 0;
  std::uint64_t mu = 0;  // ordered pairs x != y with equal H values
  std::uint32_t max_fiber = 0;
  std::vector<std::pair<Elem, std::uint32_t>> fibers;  // (value, n_u), n_u >= 1
};

// Fiber profile of H(x) = a - b~/x + g(x - d) over x in F_q*, where
// (a, b, d, b~) come from the last approximant of F. mu = sum n_u (n_u - 1).
CollisionReport collision_count(const Field& f, const CarlitzForm& form,
                                const Poly& g);

// Ordered pairs x != y in F_q* x F_q* on the hyperbola xy = v:
// q even -> q-2; q odd -> q-3 when v is a square, else q-1.
std::uint64_t k1_mu_formula(const Field& f, Elem v);

// The proof-side pole-counting inequality n >= 1 + mu/(k+1), exactly.
bool pole_consistency(const CollisionReport& r);

struct CurveCountReport {
  std::uint64_t q = 0;
  unsigned k = 0;
  Elem b = 0, c = 0;
  std::uint64_t m = 0;      // gcd(k+1, q-1)
  std::uint64_t genus = 0;  // (k-1)(m-1)/2
  std::uint64_t affine_count = 0;
  // Points counted at x = 1 (present only when p does not divide k); the
  // strict-denominator reading of the curve equation excludes them, so the
  // count over x != 1 is affine_count - x_equal_one_points.
  std::uint64_t x_equal_one_points = 0;
  SqrtInequality floor_inequality;  // affine_count + (k-1)(m-1) sqrt q >= q-k
  bool floor_holds = false;
  bool floor_positive = false;  // q - (k-1)(m-1) sqrt q - k > 0, exactly
  std::uint64_t parabola_count = 0;
  unsigned parabola_cap = 0;  // 3k + 1
};

// Affine points (x, y) in F_q* x F_q* with y^{k+1} = b / (c x s(x)) where
// s(x) = 1 + x + ... + x^{k-1} (the curve equation in lowest terms); the
// domain is s(x) != 0. Also evaluates the Hasse-Weil-derived floor
// q - (k-1)(m-1) sqrt(q) - k and the parabola intersection count.
CurveCountReport curve_affine_count(const Field& f, unsigned k, Elem b,
                                    Elem c);

// Number of gamma in F_q* with (gamma^2, gamma) on the curve; at most 3k+1.
std::uint64_t parabola_intersections(const Field& f, unsigned k, Elem b,
                                     Elem c);

}  // namespace carlitz
