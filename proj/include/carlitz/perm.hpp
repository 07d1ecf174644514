// SPDX-License-Identifier: Apache-2.0
// perm.hpp -- polynomials over GF(q) as coefficient vectors and image tables
//
// A Poly is a reduced coefficient vector (no trailing zeros, empty = zero
// polynomial); a PermMap is a length-q image table. Interpolation returns the
// canonical representative of degree < q, so the degree of a map difference
// is well-defined from the maps alone.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

struct Poly {
  std::vector<Elem> coeffs;  // coeffs[i] multiplies x^i; last entry nonzero

  // Degree of the zero polynomial is "none".
  std::optional<unsigned> degree() const {
    if (coeffs.empty()) return std::nullopt;
    return static_cast<unsigned>(coeffs.size() - 1);
  }
  bool operator==(const Poly&) const = default;
};

struct PermMap {
  std::vector<Elem> images;  // images[c] = f(c)

  bool operator==(const PermMap&) const = default;
};

struct ValueSetSummary {
  // (value, fiber size) for every value with a nonempty fiber, sorted by
  // value code.
  std::vector<std::pair<Elem, std::uint32_t>> fibers;
  std::uint64_t total = 0;
  std::uint32_t max_fiber = 0;
};

// Strips trailing zeros and validates codes.
Poly make_poly(const Field& f, std::vector<Elem> coeffs);
// c * x^k (the zero polynomial when c = 0).
Poly monomial(const Field& f, unsigned k, Elem c);
Poly poly_add(const Field& f, const Poly& a, const Poly& b);

Elem eval(const Field& f, const Poly& p, Elem x);

PermMap to_map(const Field& f, const Poly& p);
// Unique polynomial of degree < q through all q graph points (Lagrange).
Poly interpolate(const Field& f, const PermMap& m);

bool is_permutation(const Field& f, const PermMap& m);
bool is_permutation(const Field& f, const std::vector<Elem>& images);
// True iff both c -> m[c] and c -> m[c] + c are bijections.
bool is_complete_mapping(const Field& f, const PermMap& m);

// Degree of the reduced interpolant of c -> h[c] - f[c]; "none" when that
// difference is constant (degree <= 0).
std::optional<unsigned> difference_degree(const Field& f, const PermMap& lo,
                                          const PermMap& hi);

// max over affine maps ax+b of |{c : m[c] = ac + b}|, exact, O(q^2) by
// tallying the line through every pair of graph points.
std::uint32_t linearity(const Field& f, const PermMap& m);

ValueSetSummary value_multiset(const Field& f, const std::vector<Elem>& values);

// FNV-1a over the image words; used as the dedup key hash for rank tables.
struct ImageHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const Elem e : v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace carlitz
