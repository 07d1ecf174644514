// SPDX-License-Identifier: Apache-2.0
// form.cpp -- form expansion, convergent recursion, classification, rank BFS

#include "carlitz/form.hpp"

#include <algorithm>

namespace carlitz {

void validate_form(const Field& f, const CarlitzForm& form) {
  if (form.coeffs.size() < 2)
    fail(Errc::MalformedForm, "needs at least (a_0, a_1)");
  for (const Elem c : form.coeffs) f.check(c);
  if (form.coeffs[0] == 0) fail(Errc::MalformedForm, "a_0 = 0");
  const unsigned n = form.n();
  for (unsigned i = 2; i <= n; ++i)
    if (form.coeffs[i] == 0)
      fail(Errc::MalformedForm, "a_" + std::to_string(i) + " = 0");
}

void expand_into(const Field& f, const CarlitzForm& form,
                 std::vector<Elem>& images) {
  const std::uint64_t q = f.q();
  const unsigned n = form.n();
  images.resize(q);
  const Elem a0 = form.coeffs[0], a1 = form.coeffs[1];
  for (std::uint64_t c = 0; c < q; ++c) {
    Elem y = f.add(f.mul(a0, static_cast<Elem>(c)), a1);
    for (unsigned i = 1; i <= n; ++i)
      y = f.add(f.inverse_or_zero(y), form.coeffs[i + 1]);
    images[c] = y;
  }
}

PermMap expand_form(const Field& f, const CarlitzForm& form) {
  validate_form(f, form);
  PermMap m;
  expand_into(f, form, m.images);
  return m;
}

ConvergentSequence convergents(const Field& f, const CarlitzForm& form) {
  validate_form(f, form);
  const unsigned n = form.n();
  ConvergentSequence s;
  s.alpha.resize(n + 2);
  s.beta.resize(n + 2);
  s.alpha[0] = 0;
  s.beta[0] = 1;
  s.alpha[1] = form.coeffs[0];
  s.beta[1] = form.coeffs[1];
  for (unsigned k = 2; k <= n + 1; ++k) {
    s.alpha[k] = f.add(f.mul(form.coeffs[k], s.alpha[k - 1]), s.alpha[k - 2]);
    s.beta[k] = f.add(f.mul(form.coeffs[k], s.beta[k - 1]), s.beta[k - 2]);
  }
  // Cross-determinant alpha_{k+1} beta_k - alpha_k beta_{k+1} = (-1)^k a_0;
  // in particular (alpha_k, beta_k) != (0, 0) at every index.
  for (unsigned k = 0; k <= n; ++k) {
    const Elem det = f.sub(f.mul(s.alpha[k + 1], s.beta[k]),
                           f.mul(s.alpha[k], s.beta[k + 1]));
    const Elem want = (k % 2 == 0) ? form.coeffs[0] : f.neg(form.coeffs[0]);
    if (det != want)
      fail(Errc::MalformedForm, "convergent determinant broke");  // unreachable
  }
  return s;
}

PoleSet pole_set(const Field& f, const CarlitzForm& form) {
  const ConvergentSequence s = convergents(f, form);
  const unsigned n = form.n();
  PoleSet out;
  out.list.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    if (s.alpha[k] == 0) {
      out.list.push_back(ProjectivePoint::infinity());
    } else {
      out.list.push_back(ProjectivePoint::finite(
          f.mul(f.neg(s.beta[k]), f.inverse_or_zero(s.alpha[k]))));
    }
  }
  out.distinct = out.list;
  std::sort(out.distinct.begin(), out.distinct.end(),
            [](const ProjectivePoint& a, const ProjectivePoint& b) {
              if (a.infinite != b.infinite) return b.infinite;
              return a.value < b.value;
            });
  out.distinct.erase(std::unique(out.distinct.begin(), out.distinct.end()),
                     out.distinct.end());
  return out;
}

FracTransform approximant(const Field& f, const CarlitzForm& form,
                          unsigned k) {
  const unsigned n = form.n();
  if (k > n) fail(Errc::IndexOutOfRange, "approximant index past n");
  const ConvergentSequence s = convergents(f, form);
  return FracTransform{s.alpha[k + 1], s.beta[k + 1], s.alpha[k], s.beta[k]};
}

FormClass classify(const Field& f, const CarlitzForm& form) {
  const unsigned n = form.n();
  if (n == 0) {
    validate_form(f, form);
    return FormClass::Rank0;
  }
  const ConvergentSequence s = convergents(f, form);
  if (s.alpha[n] == 0) return FormClass::LinearApproximant;
  return s.beta[n] == 0 ? FormClass::L1andL2 : FormClass::L1;
}

NormalizedLast normalize_last(const Field& f, const CarlitzForm& form) {
  const unsigned n = form.n();
  const ConvergentSequence s = convergents(f, form);
  if (n == 0 || s.alpha[n] == 0)
    fail(Errc::NotInL1, "last approximant is not a proper fraction");
  const Elem inv = f.inverse_or_zero(s.alpha[n]);
  NormalizedLast out;
  out.a = f.mul(s.alpha[n + 1], inv);
  out.b = f.mul(s.beta[n + 1], inv);
  out.d = f.mul(s.beta[n], inv);
  out.b_tilde = f.sub(f.mul(out.a, out.d), out.b);
  return out;
}

const char* form_class_name(FormClass c) {
  switch (c) {
    case FormClass::Rank0: return "rank0";
    case FormClass::LinearApproximant: return "linear-approximant";
    case FormClass::L1: return "l1";
    case FormClass::L1andL2: return "l1-and-l2";
  }
  return "unknown";
}

FormSpace::FormSpace(const Field& f, unsigned n) : f_(&f), n_(n) {
  const std::uint64_t q = f.q();
  count_ = (q - 1) * q;  // a_0, a_1
  for (unsigned i = 2; i <= n; ++i) count_ *= q - 1;
  if (n >= 1) count_ *= q;  // a_{n+1}
}

CarlitzForm FormSpace::at(std::uint64_t idx) const {
  if (idx >= count_) fail(Errc::IndexOutOfRange, "form index");
  const std::uint64_t q = f_->q();
  CarlitzForm form;
  form.coeffs.resize(n_ + 2);
  // Peel digits from the fastest-varying coefficient backwards.
  if (n_ >= 1) {
    form.coeffs[n_ + 1] = static_cast<Elem>(idx % q);
    idx /= q;
    for (unsigned i = n_; i >= 2; --i) {
      form.coeffs[i] = static_cast<Elem>(idx % (q - 1) + 1);
      idx /= q - 1;
    }
  }
  form.coeffs[1] = static_cast<Elem>(idx % q);
  idx /= q;
  form.coeffs[0] = static_cast<Elem>(idx + 1);
  return form;
}

PolySpace::PolySpace(const Field& f, unsigned k) : f_(&f), k_(k) {
  if (k < 1) fail(Errc::ParameterOutOfRange, "degree must be >= 1");
  const std::uint64_t q = f.q();
  count_ = q - 1;
  for (unsigned i = 0; i < k; ++i) count_ *= q;
}

Poly PolySpace::at(std::uint64_t idx) const {
  if (idx >= count_) fail(Errc::IndexOutOfRange, "poly index");
  const std::uint64_t q = f_->q();
  std::vector<Elem> coeffs(k_ + 1);
  for (unsigned i = 0; i < k_; ++i) {
    coeffs[i] = static_cast<Elem>(idx % q);
    idx /= q;
  }
  coeffs[k_] = static_cast<Elem>(idx + 1);
  return Poly{std::move(coeffs)};
}

RankResult carlitz_rank(const Field& f, const PermMap& m,
                        std::optional<unsigned> cap) {
  if (!is_permutation(f, m)) fail(Errc::NotAPermutation, "rank query");
  const unsigned limit =
      cap ? *cap : static_cast<unsigned>(std::min<std::uint64_t>(
                       f.q() + 2, 0xffffffffu));
  std::vector<Elem> scratch;
  for (unsigned n = 0; n <= limit; ++n) {
    const FormSpace space(f, n);
    for (std::uint64_t i = 0; i < space.count(); ++i) {
      const CarlitzForm form = space.at(i);
      expand_into(f, form, scratch);
      if (scratch == m.images) return RankResult{n, limit, form};
    }
  }
  return RankResult{std::nullopt, limit, std::nullopt};
}

RankTable::RankTable(const Field& f, unsigned max_rank,
                     std::uint64_t form_budget)
    : max_rank_(max_rank) {
  by_rank_.resize(max_rank + 1);
  std::vector<Elem> scratch;
  for (unsigned n = 0; n <= max_rank; ++n) {
    const FormSpace space(f, n);
    if (form_budget > 0 && forms_expanded_ + space.count() > form_budget)
      fail(Errc::BudgetExceeded,
           "rank table would expand " +
               std::to_string(forms_expanded_ + space.count()) + " forms");
    for (std::uint64_t i = 0; i < space.count(); ++i) {
      expand_into(f, space.at(i), scratch);
      ++forms_expanded_;
      if (rank_of_.emplace(scratch, n).second)
        by_rank_[n].push_back(PermMap{scratch});
    }
  }
  for (auto& bucket : by_rank_)
    std::sort(bucket.begin(), bucket.end(),
              [](const PermMap& a, const PermMap& b) {
                return a.images < b.images;
              });
}

const std::vector<PermMap>& RankTable::of_rank(unsigned n) const {
  if (n > max_rank_) fail(Errc::IndexOutOfRange, "rank past table");
  return by_rank_[n];
}

std::optional<unsigned> RankTable::rank_of(
    const std::vector<Elem>& images) const {
  const auto it = rank_of_.find(images);
  if (it == rank_of_.end()) return std::nullopt;
  return it->second;
}

std::vector<PermMap> permutations_of_rank(const Field& f, unsigned n,
                                          std::uint64_t form_budget) {
  const RankTable table(f, n, form_budget);
  return table.of_rank(n);
}

}  // namespace carlitz
