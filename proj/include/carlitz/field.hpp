// SPDX-License-Identifier: Apache-2.0
// field.hpp -- exact arithmetic in GF(p^r) with a deterministic canonical model
//
// Elements are codes in [0, q): the little-endian base-p digits of a code are
// the coefficients of the representative polynomial modulo the canonical
// modulus (the lexicographically smallest monic irreducible of degree r, by
// the base-p integer encoding of its low coefficients). Code 0 is the
// additive identity and code 1 the multiplicative identity; for r = 1 the
// code is simply the residue.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "carlitz/error.hpp"

namespace carlitz {

using Elem = std::uint32_t;

class Field {
 public:
  static constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 20;

  Field(std::uint64_t p, unsigned r, std::uint64_t size_cap = kDefaultSizeCap);

  std::uint64_t p() const noexcept { return p_; }
  unsigned r() const noexcept { return r_; }
  std::uint64_t q() const noexcept { return q_; }

  // Canonical modulus as base-p coefficients c_0..c_r (monic, c_r = 1).
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  // x^{q-2}: the inverse for x != 0, and 0 for x = 0.
  Elem inverse_or_zero(Elem x) const;
  Elem pow(Elem x, std::uint64_t e) const;  // 0^0 = 1

  // Multiplicative generator with the smallest element code.
  Elem primitive_element() const noexcept { return generator_; }

  // True iff v is an m-th power in F_q* (v^{(q-1)/m} == 1).
  bool mth_power_residue(Elem v, std::uint64_t m) const;

  std::vector<Elem> elements() const;

  void check(Elem x) const {
    if (x >= q_) fail(Errc::InvalidElementCode, "code " + std::to_string(x) +
                                                    " not in [0, q)");
  }

 private:
  Elem mul_direct(Elem x, Elem y) const;  // schoolbook polynomial product

  std::uint64_t p_;
  unsigned r_;
  std::uint64_t q_;
  std::vector<Elem> modulus_;
  Elem generator_ = 0;
  // Discrete-log tables (built when q <= kLogTableLimit): exp_[i] = g^i for
  // i in [0, 2(q-1)), log_[x] = i with g^i = x for x != 0.
  static constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;
  bool tables_ = false;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

struct ProjectivePoint {
  bool infinite = false;
  Elem value = 0;  // meaningful only when !infinite

  static ProjectivePoint infinity() { return {true, 0}; }
  static ProjectivePoint finite(Elem v) { return {false, v}; }
  bool operator==(const ProjectivePoint&) const = default;
};

inline Field construct_field(std::uint64_t p, unsigned r,
                             std::uint64_t size_cap = Field::kDefaultSizeCap) {
  return Field(p, r, size_cap);
}

}  // namespace carlitz
