// SPDX-License-Identifier: Apache-2.0
// form.hpp -- Carlitz forms, convergents, poles, approximants, rank
//
// A form with coefficients (a_0, ..., a_{n+1}) represents the permutation
//   P_n(x) = (...((a_0 x + a_1)^{q-2} + a_2)^{q-2} ... + a_n)^{q-2} + a_{n+1}
// with a_i != 0 for i = 0 and i = 2..n. n counts the inversion steps; the
// convergent recursion and the pole set mirror continued-fraction structure:
// off its poles the expansion agrees with the Moebius map
// R_n(x) = (alpha_{n+1} x + beta_{n+1}) / (alpha_n x + beta_n).

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "carlitz/field.hpp"
#include "carlitz/perm.hpp"

namespace carlitz {

struct CarlitzForm {
  std::vector<Elem> coeffs;  // a_0 .. a_{n+1}, size n + 2

  unsigned n() const { return static_cast<unsigned>(coeffs.size()) - 2; }
  bool operator==(const CarlitzForm&) const = default;
};

struct ConvergentSequence {
  std::vector<Elem> alpha;  // index 0 .. n+1
  std::vector<Elem> beta;
};

struct FracTransform {
  Elem num_a = 0, num_b = 0;  // numerator   alpha_{k+1} x + beta_{k+1}
  Elem den_a = 0, den_b = 0;  // denominator alpha_k     x + beta_k

  ProjectivePoint eval(const Field& f, Elem x) const {
    const Elem den = f.add(f.mul(den_a, x), den_b);
    if (den == 0) return ProjectivePoint::infinity();
    const Elem num = f.add(f.mul(num_a, x), num_b);
    return ProjectivePoint::finite(f.mul(num, f.inverse_or_zero(den)));
  }
};

struct PoleSet {
  std::vector<ProjectivePoint> list;      // x_1 .. x_n in order
  std::vector<ProjectivePoint> distinct;  // deduplicated, deterministic order
};

enum class FormClass { Rank0, LinearApproximant, L1, L1andL2 };

// Last-approximant parameters when alpha_n != 0:
// R_n(z) = (a z + b)/(z + d), with b~ = ad - b != 0 and pole x_n = -d.
struct NormalizedLast {
  Elem a = 0, b = 0, d = 0;
  Elem b_tilde = 0;
};

struct RankResult {
  std::optional<unsigned> rank;  // empty = not found within cap
  unsigned cap = 0;
  std::optional<CarlitzForm> witness;
};

void validate_form(const Field& f, const CarlitzForm& form);
PermMap expand_form(const Field& f, const CarlitzForm& form);
// In-place expansion into a caller-owned buffer (hot path; no validation
// beyond the form constraints).
void expand_into(const Field& f, const CarlitzForm& form,
                 std::vector<Elem>& images);

ConvergentSequence convergents(const Field& f, const CarlitzForm& form);
PoleSet pole_set(const Field& f, const CarlitzForm& form);
FracTransform approximant(const Field& f, const CarlitzForm& form, unsigned k);
FormClass classify(const Field& f, const CarlitzForm& form);
NormalizedLast normalize_last(const Field& f, const CarlitzForm& form);

const char* form_class_name(FormClass c);

// All forms of a given inversion count n, indexable in lexicographic order
// by (a_0, a_1, ..., a_{n+1}) with the last coefficient varying fastest.
// Count: (q-1)q for n = 0, (q-1)^n q^2 for n >= 1.
class FormSpace {
 public:
  FormSpace(const Field& f, unsigned n);
  std::uint64_t count() const { return count_; }
  CarlitzForm at(std::uint64_t idx) const;

 private:
  const Field* f_;
  unsigned n_;
  std::uint64_t count_;
};

// All polynomials of exact degree k >= 1, indexable: low coefficients are
// the low base-q digits of the index, the leading coefficient is the high
// digit plus one. Count: (q-1) q^k.
class PolySpace {
 public:
  PolySpace(const Field& f, unsigned k);
  std::uint64_t count() const { return count_; }
  Poly at(std::uint64_t idx) const;

 private:
  const Field* f_;
  unsigned k_;
  std::uint64_t count_;
};

// Breadth-first search over form lengths 0..cap (default q + 2); the first
// expansion equal to m gives the exact Carlitz rank with a witness form.
RankResult carlitz_rank(const Field& f, const PermMap& m,
                        std::optional<unsigned> cap = std::nullopt);

// Permutations grouped by exact rank, built by expanding all forms of
// lengths 0..max_rank and deduplicating: a map first seen at length n has
// rank n. form_budget > 0 caps the total number of expansions.
class RankTable {
 public:
  RankTable(const Field& f, unsigned max_rank, std::uint64_t form_budget = 0);

  unsigned max_rank() const { return max_rank_; }
  // Rank-n permutations sorted lexicographically by image table.
  const std::vector<PermMap>& of_rank(unsigned n) const;
  std::optional<unsigned> rank_of(const std::vector<Elem>& images) const;
  std::uint64_t forms_expanded() const { return forms_expanded_; }

 private:
  unsigned max_rank_;
  std::uint64_t forms_expanded_ = 0;
  std::vector<std::vector<PermMap>> by_rank_;
  std::unordered_map<std::vector<Elem>, unsigned, ImageHash> rank_of_;
};

std::vector<PermMap> permutations_of_rank(const Field& f, unsigned n,
                                          std::uint64_t form_budget = 0);

}  // namespace carlitz
