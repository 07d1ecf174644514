// SPDX-License-Identifier: Apache-2.0
// campaign.cpp -- campaign runners, deterministic parallel scheduling, reports

#include "carlitz/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <memory>
#include <numeric>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace carlitz {
namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr std::uint64_t kMaxRejectionTries = 10000;
constexpr std::uint64_t kMuSweepDefaultSamples = 100;
constexpr std::uint64_t kCurveSweepDefaultSamples = 50;

struct CellResult {
  CellStats stats;
  std::vector<Witness> notable;
  std::vector<Witness> counterexamples;
  std::vector<Witness> informational;
};

struct FieldCtx {
  FieldId id;
  Field field;
  std::unique_ptr<RankTable> ranks;
};

std::string form_to_string(const CarlitzForm& form) {
  std::string out;
  for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(form.coeffs[i]);
  }
  return out;
}

// Pull tasks off a shared counter; results land in caller-indexed slots, so
// the merged output cannot depend on scheduling.
template <typename Fn>
void run_tasks(unsigned workers, std::size_t count, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t nthreads = std::min<std::size_t>(workers, count);
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
}

void require_fields(const CampaignConfig& cfg) {
  if (cfg.fields.empty()) fail(Errc::ConfigInvalid, "empty field list");
}

std::vector<FieldCtx> build_contexts(const std::vector<FieldId>& ids,
                                     std::optional<unsigned> rank_to) {
  std::vector<FieldCtx> out;
  out.reserve(ids.size());
  for (const FieldId& id : ids) {
    FieldCtx ctx{id, Field(id.p, id.r), nullptr};
    if (rank_to)
      ctx.ranks = std::make_unique<RankTable>(ctx.field, *rank_to);
    out.push_back(std::move(ctx));
  }
  return out;
}

double form_space_size(std::uint64_t q, unsigned n) {
  double c = static_cast<double>(q - 1) * static_cast<double>(q);
  for (unsigned i = 2; i <= n; ++i) c *= static_cast<double>(q - 1);
  if (n >= 1) c *= static_cast<double>(q);
  return c;
}

double poly_space_size(std::uint64_t q, unsigned k) {
  double c = static_cast<double>(q - 1);
  for (unsigned i = 0; i < k; ++i) c *= static_cast<double>(q);
  return c;
}

void guard_cost(double estimate, double max_cost) {
  if (estimate > max_cost)
    fail(Errc::BudgetExceeded,
         "estimated cost " + std::to_string(estimate) + " exceeds ceiling " +
             std::to_string(max_cost));
}

Witness base_witness(const FieldCtx& ctx, unsigned n, unsigned k) {
  Witness w;
  w.p = ctx.id.p;
  w.r = ctx.id.r;
  w.q = ctx.field.q();
  w.n = n;
  w.k = k;
  if (k >= 1) {
    w.nu = std::gcd<std::uint64_t>(k, ctx.field.q() - 1);
    w.m = std::gcd<std::uint64_t>(k + 1, ctx.field.q() - 1);
  }
  return w;
}

void attach_collision(Witness& w, const CollisionReport& col) {
  w.mu = col.mu;
  w.max_fiber = col.max_fiber;
  w.fibers = col.fibers;
  w.extra.emplace_back("a", col.a);
  w.extra.emplace_back("b", col.b);
  w.extra.emplace_back("d", col.d);
  w.extra.emplace_back("b_tilde", col.b_tilde);
}

// mu >= q + 1 - k(k-1) sqrt(q) - (nu + k + 2), the proof-side floor; logged
// only, never asserted, because it leans on an irreducibility argument the
// artifact does not re-derive.
bool proof_floor_holds(std::uint64_t q, std::uint64_t k, std::uint64_t nu,
                       std::uint64_t mu) {
  const SqrtInequality s{
      static_cast<std::int64_t>(mu),
      static_cast<std::int64_t>(k * (k - 1)),
      static_cast<std::int64_t>(q) - static_cast<std::int64_t>(nu) -
          static_cast<std::int64_t>(k) - 1,
      q};
  return s.holds();
}

struct EligibleForm {
  std::uint64_t index = 0;
  CarlitzForm form;
  std::vector<Elem> fmap;
  NormalizedLast nl;
};

// All length-n forms in the wanted class whose expansion has exact rank n.
std::vector<EligibleForm> eligible_forms(const FieldCtx& ctx, unsigned n,
                                         bool require_l2,
                                         std::uint64_t* enumerated) {
  const Field& f = ctx.field;
  const FormSpace space(f, n);
  if (enumerated) *enumerated = space.count();
  std::vector<EligibleForm> out;
  std::vector<Elem> scratch;
  for (std::uint64_t i = 0; i < space.count(); ++i) {
    CarlitzForm form = space.at(i);
    const FormClass cls = classify(f, form);
    const bool class_ok = require_l2
                              ? cls == FormClass::L1andL2
                              : (cls == FormClass::L1 ||
                                 cls == FormClass::L1andL2);
    if (!class_ok) continue;
    expand_into(f, form, scratch);
    if (ctx.ranks->rank_of(scratch) != std::optional<unsigned>(n)) continue;
    const NormalizedLast nl = normalize_last(f, form);
    out.push_back(EligibleForm{i, std::move(form), scratch, nl});
  }
  return out;
}

// ---------------------------------------------------------------------------
// main theorem campaign

void handle_main_hit(const FieldCtx& ctx, const CarlitzForm& form,
                     std::uint64_t form_index, const Poly& g,
                     std::uint64_t g_index, unsigned n, unsigned k,
                     CellResult& res, bool& have_first_hit) {
  const Field& f = ctx.field;
  const std::uint64_t q = f.q();
  const CollisionReport col = collision_count(f, form, g);
  const BoundReport bound = main_bound(q, n, k);
  const bool fiber_ok = col.max_fiber <= k + 1;
  const bool pole_ok = pole_consistency(col);
  const std::uint64_t nu = std::gcd<std::uint64_t>(k, q - 1);
  const bool proof_ok = proof_floor_holds(q, k, nu, col.mu);

  auto witness = [&](const char* note) {
    Witness w = base_witness(ctx, n, k);
    w.form = form_to_string(form);
    w.g = g.coeffs;
    w.form_index = form_index;
    w.g_index = g_index;
    attach_collision(w, col);
    w.bounds = {bound};
    w.extra.emplace_back("fiber_ok", fiber_ok ? 1 : 0);
    w.extra.emplace_back("pole_ok", pole_ok ? 1 : 0);
    w.extra.emplace_back("proof_floor_ok", proof_ok ? 1 : 0);
    w.note = note;
    return w;
  };

  if (!bound.holds || !fiber_ok || !pole_ok) {
    res.counterexamples.push_back(
        witness(!bound.holds  ? "main bound failed on a permutation pair"
                : !fiber_ok   ? "fiber exceeds k+1"
                              : "pole-count inequality failed"));
    ++res.stats.counterexamples;
    return;
  }
  if (!proof_ok) {
    ++res.stats.discrepancies;
    if (res.informational.size() < 5)
      res.informational.push_back(witness("observed mu below proof-side floor"));
  }
  if (!have_first_hit) {
    have_first_hit = true;
    res.notable.push_back(witness("first permutation hit in cell"));
  }
}

CellResult main_cell_exhaustive(const FieldCtx& ctx,
                                const std::vector<EligibleForm>& elig,
                                std::uint64_t space_count, unsigned n,
                                unsigned k) {
  const Field& f = ctx.field;
  const std::uint64_t q = f.q();
  CellResult res;
  res.stats.p = ctx.id.p;
  res.stats.r = ctx.id.r;
  res.stats.q = q;
  res.stats.n = n;
  res.stats.k = k;
  res.stats.forms_enumerated = space_count;
  res.stats.forms_eligible = elig.size();
  res.stats.out_of_hypothesis = space_count - elig.size();

  const PolySpace gspace(f, k);
  std::vector<Elem> gmap(q);
  std::vector<std::uint64_t> mark(q, 0);
  std::uint64_t epoch = 0;
  bool have_first_hit = false;

  for (std::uint64_t gi = 0; gi < gspace.count(); ++gi) {
    const Poly g = gspace.at(gi);
    for (std::uint64_t c = 0; c < q; ++c)
      gmap[c] = eval(f, g, static_cast<Elem>(c));
    for (const EligibleForm& ef : elig) {
      ++res.stats.pairs_tested;
      ++epoch;
      bool perm = true;
      for (std::uint64_t c = 0; c < q; ++c) {
        const Elem v = f.add(ef.fmap[c], gmap[c]);
        if (mark[v] == epoch) {
          perm = false;
          break;
        }
        mark[v] = epoch;
      }
      if (!perm) continue;
      ++res.stats.permutation_hits;
      handle_main_hit(ctx, ef.form, ef.index, g, gi, n, k, res,
                      have_first_hit);
    }
  }
  return res;
}

CellResult main_cell_sampled(const FieldCtx& ctx, unsigned n, unsigned k,
                             std::uint64_t budget, std::uint64_t seed) {
  const Field& f = ctx.field;
  const std::uint64_t q = f.q();
  CellResult res;
  res.stats.p = ctx.id.p;
  res.stats.r = ctx.id.r;
  res.stats.q = q;
  res.stats.n = n;
  res.stats.k = k;

  const FormSpace space(f, n);
  const PolySpace gspace(f, k);
  std::vector<Elem> fmap, gmap(q);
  std::vector<std::uint64_t> mark(q, 0);
  std::uint64_t epoch = 0;
  bool have_first_hit = false;

  for (std::uint64_t s = 0; s < budget; ++s) {
    SplitMix64 rng(fold_seed(seed, q, n, k, s));
    bool found = false;
    CarlitzForm form;
    std::uint64_t fidx = 0;
    for (std::uint64_t t = 0; t < kMaxRejectionTries && !found; ++t) {
      ++res.stats.forms_enumerated;
      fidx = rng.below(space.count());
      form = space.at(fidx);
      const FormClass cls = classify(f, form);
      if (cls != FormClass::L1 && cls != FormClass::L1andL2) continue;
      expand_into(f, form, fmap);
      if (ctx.ranks->rank_of(fmap) != std::optional<unsigned>(n)) continue;
      found = true;
    }
    if (!found) {
      ++res.stats.out_of_hypothesis;
      continue;
    }
    ++res.stats.forms_eligible;
    const std::uint64_t gi = rng.below(gspace.count());
    const Poly g = gspace.at(gi);
    for (std::uint64_t c = 0; c < q; ++c)
      gmap[c] = eval(f, g, static_cast<Elem>(c));
    ++res.stats.pairs_tested;
    ++epoch;
    bool perm = true;
    for (std::uint64_t c = 0; c < q; ++c) {
      const Elem v = f.add(fmap[c], gmap[c]);
      if (mark[v] == epoch) {
        perm = false;
        break;
      }
      mark[v] = epoch;
    }
    if (!perm) continue;
    ++res.stats.permutation_hits;
    handle_main_hit(ctx, form, fidx, g, gi, n, k, res, have_first_hit);
  }
  return res;
}

// ---------------------------------------------------------------------------
// monomial theorem campaign

CellResult monomial_cell(const FieldCtx& ctx,
                         const std::vector<EligibleForm>& elig,
                         std::uint64_t space_count, unsigned n, unsigned k) {
  const Field& f = ctx.field;
  const std::uint64_t q = f.q();
  CellResult res;
  res.stats.p = ctx.id.p;
  res.stats.r = ctx.id.r;
  res.stats.q = q;
  res.stats.n = n;
  res.stats.k = k;
  res.stats.forms_enumerated = space_count;
  res.stats.forms_eligible = elig.size();
  res.stats.out_of_hypothesis = space_count - elig.size();

  std::vector<Elem> powk(q), gmap(q);
  for (std::uint64_t c = 0; c < q; ++c)
    powk[c] = f.pow(static_cast<Elem>(c), k);
  std::vector<std::uint64_t> mark(q, 0);
  std::uint64_t epoch = 0;
  bool have_first_hit = false;
  const std::uint64_t m1_min_k = monomial_m1_min_k(q, n);

  for (Elem cf = 1; cf < q; ++cf) {
    for (std::uint64_t c = 0; c < q; ++c) gmap[c] = f.mul(cf, powk[c]);
    const Poly g = monomial(f, k, cf);
    for (const EligibleForm& ef : elig) {
      ++res.stats.pairs_tested;
      ++epoch;
      bool perm = true;
      for (std::uint64_t c = 0; c < q; ++c) {
        const Elem v = f.add(ef.fmap[c], gmap[c]);
        if (mark[v] == epoch) {
          perm = false;
          break;
        }
        mark[v] = epoch;
      }
      if (!perm) continue;
      ++res.stats.permutation_hits;

      const CollisionReport col = collision_count(f, ef.form, g);
      const BoundReport mono = monomial_bound(q, n, k);
      const BoundReport main = main_bound(q, n, k);
      const CurveCountReport curve = curve_affine_count(f, k, ef.nl.b, cf);
      const bool fiber_ok = col.max_fiber <= k + 1;
      const bool pole_ok = pole_consistency(col);
      const bool m1_ok = curve.m != 1 || k >= m1_min_k;
      // Collision pairs (u, w) biject with curve points having x != 1 via
      // (u, w) = (xy, y), so mu must equal the count minus the x = 1 points.
      const bool relation_ok =
          col.mu == curve.affine_count - curve.x_equal_one_points;
      const bool proof_ok =
          proof_floor_holds(q, k, std::gcd<std::uint64_t>(k, q - 1), col.mu);

      auto witness = [&](const char* note) {
        Witness w = base_witness(ctx, n, k);
        w.form = form_to_string(ef.form);
        w.g = g.coeffs;
        w.form_index = ef.index;
        w.g_index = cf;
        attach_collision(w, col);
        w.bounds = {mono, main};
        w.extra.emplace_back("curve_affine_count",
                             static_cast<std::int64_t>(curve.affine_count));
        w.extra.emplace_back(
            "curve_x_equal_one_points",
            static_cast<std::int64_t>(curve.x_equal_one_points));
        w.extra.emplace_back("relation_ok", relation_ok ? 1 : 0);
        w.extra.emplace_back("fiber_ok", fiber_ok ? 1 : 0);
        w.extra.emplace_back("pole_ok", pole_ok ? 1 : 0);
        w.extra.emplace_back("proof_floor_ok", proof_ok ? 1 : 0);
        w.note = note;
        return w;
      };

      if (!mono.holds || !main.holds || !fiber_ok || !pole_ok || !m1_ok ||
          !relation_ok) {
        res.counterexamples.push_back(witness(
            !mono.holds    ? "monomial bound failed on a permutation hit"
            : !main.holds  ? "main bound failed on a permutation hit"
            : !m1_ok       ? "m=1 minimal-k rule failed"
            : !relation_ok ? "collision/curve relation mismatch"
            : !fiber_ok    ? "fiber exceeds k+1"
                           : "pole-count inequality failed"));
        ++res.stats.counterexamples;
        continue;
      }
      if (!proof_ok) {
        ++res.stats.discrepancies;
        if (res.informational.size() < 5)
          res.informational.push_back(
              witness("observed mu below proof-side floor"));
      }
      if (!have_first_hit) {
        have_first_hit = true;
        res.notable.push_back(witness("first permutation hit in cell"));
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// complete-mapping corollary campaign

CellResult corollary_cell(const FieldCtx& ctx, unsigned n) {
  const Field& f = ctx.field;
  const std::uint64_t q = f.q();
  CellResult res;
  res.stats.p = ctx.id.p;
  res.stats.r = ctx.id.r;
  res.stats.q = q;
  res.stats.n = n;
  res.stats.k = 0;

  const FormSpace space(f, n);
  res.stats.forms_enumerated = space.count();
  if (2 * std::uint64_t{n} >= q - 1) {
    res.stats.out_of_hypothesis = space.count();
    return res;
  }

  std::vector<Elem> fmap;
  std::vector<std::uint64_t> mark(q, 0);
  std::uint64_t epoch = 0;
  auto shifted_is_perm = [&](const std::vector<Elem>& im) {
    ++epoch;
    for (std::uint64_t c = 0; c < q; ++c) {
      const Elem v = f.add(im[c], static_cast<Elem>(c));
      if (mark[v] == epoch) return false;
      mark[v] = epoch;
    }
    return true;
  };

  for (std::uint64_t i = 0; i < space.count(); ++i) {
    const CarlitzForm form = space.at(i);
    const FormClass cls = classify(f, form);
    if (cls == FormClass::LinearApproximant) {
      ++res.stats.out_of_hypothesis;
      expand_into(f, form, fmap);
      if (shifted_is_perm(fmap)) {
        Witness w = base_witness(ctx, n, 1);
        w.form = form_to_string(form);
        w.form_index = i;
        w.note = "complete mapping in the linear-approximant family";
        res.informational.push_back(std::move(w));
      }
      continue;
    }
    expand_into(f, form, fmap);
    if (ctx.ranks->rank_of(fmap) != std::optional<unsigned>(n)) {
      ++res.stats.out_of_hypothesis;
      continue;
    }
    ++res.stats.forms_eligible;
    ++res.stats.pairs_tested;
    if (shifted_is_perm(fmap)) {
      Witness w = base_witness(ctx, n, 1);
      w.form = form_to_string(form);
      w.form_index = i;
      w.note = "complete mapping inside the hypothesis range";
      res.counterexamples.push_back(std::move(w));
      ++res.stats.counterexamples;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// mu sweep

CellResult mu_cell(const FieldCtx& ctx, const CampaignConfig& cfg) {
  const Field& f = ctx.field;
  const std::uint64_t q = f.q();
  CellResult res;
  res.stats.p = ctx.id.p;
  res.stats.r = ctx.id.r;
  res.stats.q = q;

  // Closed form against the literal hyperbola double loop, every constant.
  for (std::uint64_t v = 1; v < q; ++v) {
    std::uint64_t brute = 0;
    for (std::uint64_t x = 1; x < q; ++x)
      for (std::uint64_t y = 1; y < q; ++y)
        if (x != y &&
            f.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == v)
          ++brute;
    ++res.stats.pairs_tested;
    const std::uint64_t formula = k1_mu_formula(f, static_cast<Elem>(v));
    if (brute != formula) {
      Witness w = base_witness(ctx, 0, 1);
      w.note = "hyperbola closed form mismatch";
      w.extra = {{"v", static_cast<std::int64_t>(v)},
                 {"brute", static_cast<std::int64_t>(brute)},
                 {"formula", static_cast<std::int64_t>(formula)}};
      res.counterexamples.push_back(std::move(w));
      ++res.stats.counterexamples;
    }
  }

  // Sampled collision tallies against an ordered-pair scan.
  const std::uint64_t samples =
      cfg.budget == 0 ? kMuSweepDefaultSamples : cfg.budget;
  const unsigned n_hi = std::max(1u, cfg.n_max);
  const unsigned k_hi =
      std::max<unsigned>(1, std::min<std::uint64_t>(cfg.k_max, q - 2));
  std::vector<Elem> hvals(q);
  for (std::uint64_t s = 0; s < samples; ++s) {
    SplitMix64 rng(fold_seed(cfg.seed, q, 1, 0, s));
    const unsigned n = 1 + static_cast<unsigned>(rng.below(n_hi));
    const FormSpace space(f, n);
    bool found = false;
    CarlitzForm form;
    std::uint64_t fidx = 0;
    for (std::uint64_t t = 0; t < kMaxRejectionTries && !found; ++t) {
      ++res.stats.forms_enumerated;
      fidx = rng.below(space.count());
      form = space.at(fidx);
      const FormClass cls = classify(f, form);
      found = cls == FormClass::L1 || cls == FormClass::L1andL2;
    }
    if (!found) {
      ++res.stats.out_of_hypothesis;
      continue;
    }
    ++res.stats.forms_eligible;
    const unsigned k = 1 + static_cast<unsigned>(rng.below(k_hi));
    const PolySpace gspace(f, k);
    const std::uint64_t gi = rng.below(gspace.count());
    const Poly g = gspace.at(gi);
    ++res.stats.pairs_tested;

    const CollisionReport fast = collision_count(f, form, g);
    const NormalizedLast nl = normalize_last(f, form);
    for (std::uint64_t x = 1; x < q; ++x) {
      const Elem ex = static_cast<Elem>(x);
      hvals[x] = f.add(
          f.sub(nl.a, f.mul(nl.b_tilde, f.inverse_or_zero(ex))),
          eval(f, g, f.sub(ex, nl.d)));
    }
    std::uint64_t mu_oracle = 0;
    for (std::uint64_t x = 1; x < q; ++x)
      for (std::uint64_t y = 1; y < q; ++y)
        if (x != y && hvals[x] == hvals[y]) ++mu_oracle;

    const bool tally_ok = fast.mu == mu_oracle;
    const bool fiber_ok = fast.max_fiber <= k + 1;
    bool k1_ok = true;
    std::uint64_t k1_expect = 0;
    if (k == 1) {
      // H(x) = H(y) collapses to the hyperbola xy = -b~/lead(g).
      const Elem target =
          f.neg(f.mul(nl.b_tilde, f.inverse_or_zero(g.coeffs[1])));
      k1_expect = k1_mu_formula(f, target);
      k1_ok = fast.mu == k1_expect;
    }
    if (!tally_ok || !fiber_ok || !k1_ok) {
      Witness w = base_witness(ctx, n, k);
      w.form = form_to_string(form);
      w.g = g.coeffs;
      w.form_index = fidx;
      w.g_index = gi;
      attach_collision(w, fast);
      w.extra.emplace_back("mu_oracle", static_cast<std::int64_t>(mu_oracle));
      if (k == 1)
        w.extra.emplace_back("k1_formula",
                             static_cast<std::int64_t>(k1_expect));
      w.note = !tally_ok ? "collision tally differs from pair-scan oracle"
               : !k1_ok  ? "k=1 closed form mismatch"
                         : "fiber exceeds k+1";
      res.counterexamples.push_back(std::move(w));
      ++res.stats.counterexamples;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// curve sweep

CellResult curve_cell(const FieldCtx& ctx, unsigned k,
                      const CampaignConfig& cfg) {
  const Field& f = ctx.field;
  const std::uint64_t q = f.q();
  CellResult res;
  res.stats.p = ctx.id.p;
  res.stats.r = ctx.id.r;
  res.stats.q = q;
  res.stats.k = k;

  const std::uint64_t samples =
      cfg.budget == 0 ? kCurveSweepDefaultSamples : cfg.budget;
  std::vector<Elem> ypow(q);
  for (std::uint64_t y = 1; y < q; ++y)
    ypow[y] = f.pow(static_cast<Elem>(y), k + 1);
  Elem k_bar = 0;  // k as a field element, for s(1)
  for (unsigned i = 0; i < k; ++i) k_bar = f.add(k_bar, 1);

  bool have_summary = false;
  for (std::uint64_t s = 0; s < samples; ++s) {
    SplitMix64 rng(fold_seed(cfg.seed, q, 0, k, s));
    const Elem b = static_cast<Elem>(1 + rng.below(q - 1));
    const Elem c = static_cast<Elem>(1 + rng.below(q - 1));
    ++res.stats.pairs_tested;
    const CurveCountReport rep = curve_affine_count(f, k, b, c);

    // Independent recount: s(x) via (x^k - 1)/(x - 1), y via the k+1 power
    // table, no residue tests anywhere.
    std::uint64_t brute = 0;
    for (std::uint64_t x = 1; x < q; ++x) {
      const Elem ex = static_cast<Elem>(x);
      const Elem sx =
          x == 1 ? k_bar
                 : f.mul(f.sub(f.pow(ex, k), 1),
                         f.inverse_or_zero(f.sub(ex, 1)));
      if (sx == 0) continue;
      const Elem v = f.mul(b, f.inverse_or_zero(f.mul(c, f.mul(ex, sx))));
      for (std::uint64_t y = 1; y < q; ++y)
        if (ypow[y] == v) ++brute;
    }

    const bool count_ok = brute == rep.affine_count;
    const bool floor_ok =
        !(rep.m >= 2 && rep.floor_positive) || rep.floor_holds;
    const bool parabola_ok = rep.parabola_count <= rep.parabola_cap;
    const bool m1_floor_ok =
        !(rep.m == 1 && rep.floor_positive) || rep.floor_holds;

    auto witness = [&](const char* note) {
      Witness w = base_witness(ctx, 0, k);
      w.extra = {{"b", static_cast<std::int64_t>(b)},
                 {"c", static_cast<std::int64_t>(c)},
                 {"m", static_cast<std::int64_t>(rep.m)},
                 {"genus", static_cast<std::int64_t>(rep.genus)},
                 {"affine_count", static_cast<std::int64_t>(rep.affine_count)},
                 {"x_equal_one_points",
                  static_cast<std::int64_t>(rep.x_equal_one_points)},
                 {"brute_count", static_cast<std::int64_t>(brute)},
                 {"parabola_count",
                  static_cast<std::int64_t>(rep.parabola_count)},
                 {"parabola_cap", static_cast<std::int64_t>(rep.parabola_cap)},
                 {"floor_a", rep.floor_inequality.a},
                 {"floor_b", rep.floor_inequality.b},
                 {"floor_c", rep.floor_inequality.c},
                 {"floor_holds", rep.floor_holds ? 1 : 0},
                 {"floor_positive", rep.floor_positive ? 1 : 0}};
      w.g_index = s;
      w.note = note;
      return w;
    };

    if (!count_ok || !floor_ok || !parabola_ok) {
      res.counterexamples.push_back(
          witness(!count_ok     ? "curve count differs from brute force"
                  : !floor_ok   ? "curve floor violated"
                                : "parabola cap exceeded"));
      ++res.stats.counterexamples;
      continue;
    }
    if (!m1_floor_ok) {
      ++res.stats.discrepancies;
      if (res.informational.size() < 5)
        res.informational.push_back(witness("m=1 floor violated"));
    }
    if (!have_summary) {
      have_summary = true;
      res.notable.push_back(witness("curve cell summary"));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// merge and serialize

void sort_witnesses(std::vector<Witness>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Witness& a, const Witness& b) {
    return std::tie(a.q, a.n, a.k, a.form_index, a.g_index) <
           std::tie(b.q, b.n, b.k, b.form_index, b.g_index);
  });
}

CampaignConfig echo_config(const CampaignConfig& cfg, CampaignKind kind,
                           const std::vector<FieldId>& fields) {
  CampaignConfig echo = cfg;
  echo.kind = kind;
  echo.fields = fields;
  return echo;
}

CampaignReport merge(const CampaignConfig& echo,
                     std::vector<CellResult>&& results) {
  CampaignReport rep;
  rep.kind = echo.kind;
  rep.config = echo;
  for (CellResult& r : results) {
    rep.totals.forms_enumerated += r.stats.forms_enumerated;
    rep.totals.forms_eligible += r.stats.forms_eligible;
    rep.totals.pairs_tested += r.stats.pairs_tested;
    rep.totals.permutation_hits += r.stats.permutation_hits;
    rep.totals.out_of_hypothesis += r.stats.out_of_hypothesis;
    rep.totals.counterexamples += r.stats.counterexamples;
    rep.totals.discrepancies += r.stats.discrepancies;
    rep.cells.push_back(r.stats);
    std::move(r.notable.begin(), r.notable.end(),
              std::back_inserter(rep.notable));
    std::move(r.counterexamples.begin(), r.counterexamples.end(),
              std::back_inserter(rep.counterexamples));
    std::move(r.informational.begin(), r.informational.end(),
              std::back_inserter(rep.informational));
  }
  sort_witnesses(rep.notable);
  sort_witnesses(rep.counterexamples);
  sort_witnesses(rep.informational);
  rep.pass = rep.counterexamples.empty();
  return rep;
}

OrderedJson json_inequality(const SqrtInequality& s) {
  return OrderedJson{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"q", s.q},
                     {"holds", s.holds()}};
}

OrderedJson json_pairs(
    const std::vector<std::pair<std::string, std::int64_t>>& kv) {
  OrderedJson out = OrderedJson::object();
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

OrderedJson json_bound(const BoundReport& b) {
  OrderedJson out;
  out["which"] = bound_kind_name(b.which);
  out["holds"] = b.holds;
  out["statement"] = b.statement;
  out["inputs"] = json_pairs(b.inputs);
  out["derived"] = json_pairs(b.derived);
  out["inequality"] =
      b.has_inequality ? json_inequality(b.inequality) : OrderedJson(nullptr);
  return out;
}

OrderedJson json_witness(const Witness& w) {
  OrderedJson out;
  out["p"] = w.p;
  out["r"] = w.r;
  out["q"] = w.q;
  out["form"] = w.form;
  out["g"] = w.g;
  out["n"] = w.n;
  out["k"] = w.k;
  out["nu"] = w.nu;
  out["m"] = w.m;
  out["mu"] = w.mu;
  out["max_fiber"] = w.max_fiber;
  OrderedJson fibers = OrderedJson::array();
  for (const auto& [value, count] : w.fibers)
    fibers.push_back(OrderedJson::array({value, count}));
  out["fibers"] = fibers;
  OrderedJson bounds = OrderedJson::array();
  for (const BoundReport& b : w.bounds) bounds.push_back(json_bound(b));
  out["bounds"] = bounds;
  out["extra"] = json_pairs(w.extra);
  out["note"] = w.note;
  out["form_index"] = w.form_index;
  out["g_index"] = w.g_index;
  return out;
}

OrderedJson json_cell_counts(const CellStats& c) {
  OrderedJson out;
  out["forms_enumerated"] = c.forms_enumerated;
  out["forms_eligible"] = c.forms_eligible;
  out["pairs_tested"] = c.pairs_tested;
  out["permutation_hits"] = c.permutation_hits;
  out["out_of_hypothesis"] = c.out_of_hypothesis;
  out["counterexamples"] = c.counterexamples;
  out["discrepancies"] = c.discrepancies;
  return out;
}

}  // namespace

std::uint64_t fold_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                        std::uint64_t c, std::uint64_t d) {
  std::uint64_t h = seed;
  for (const std::uint64_t v : {a, b, c, d}) {
    h += 0x9e3779b97f4a7c15ull * (v + 1);
    SplitMix64 mixer(h);
    h = mixer.next();
  }
  return h;
}

const char* campaign_kind_name(CampaignKind k) {
  switch (k) {
    case CampaignKind::MainTheorem: return "main-theorem";
    case CampaignKind::MonomialTheorem: return "monomial-theorem";
    case CampaignKind::CorollaryComplete: return "corollary-complete";
    case CampaignKind::ExampleF9: return "example-f9";
    case CampaignKind::MuSweep: return "mu-sweep";
    case CampaignKind::CurveSweep: return "curve-sweep";
  }
  return "unknown";
}

std::vector<FieldId> prime_power_fields(std::uint64_t qmin,
                                        std::uint64_t qmax) {
  std::vector<FieldId> out;
  for (std::uint64_t q = std::max<std::uint64_t>(3, qmin); q <= qmax; ++q) {
    std::uint64_t t = q;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= t; ++d) {
      if (t % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = t;  // q prime
    unsigned r = 0;
    while (t % p == 0) {
      t /= p;
      ++r;
    }
    if (t == 1) out.push_back(FieldId{p, r});
  }
  return out;
}

CampaignReport verify_main(const CampaignConfig& cfg) {
  require_fields(cfg);
  if (cfg.n_max < 1) fail(Errc::ConfigInvalid, "n_max must be >= 1");
  if (cfg.k_max < 1) fail(Errc::ConfigInvalid, "k_max must be >= 1");
  std::vector<FieldCtx> ctxs = build_contexts(cfg.fields, cfg.n_max);

  struct Cell {
    std::size_t field = 0;
    unsigned n = 0, k = 0;
  };
  std::vector<Cell> cells;
  double estimate = 0;
  for (std::size_t ci = 0; ci < ctxs.size(); ++ci) {
    const std::uint64_t q = ctxs[ci].field.q();
    const unsigned k_hi =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.k_max, q - 2));
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
      for (unsigned k = 1; k <= k_hi; ++k) {
        cells.push_back(Cell{ci, n, k});
        estimate += cfg.budget == 0 ? form_space_size(q, n) *
                                          poly_space_size(q, k) *
                                          static_cast<double>(q)
                                    : static_cast<double>(cfg.budget) *
                                          static_cast<double>(q) * 30.0;
      }
      estimate += form_space_size(q, n) * static_cast<double>(q);
    }
  }
  guard_cost(estimate, cfg.max_cost);

  // Eligible lists are shared across the k cells of a (field, n) pair.
  std::vector<std::vector<std::vector<EligibleForm>>> eligible(ctxs.size());
  std::vector<std::vector<std::uint64_t>> enumerated(ctxs.size());
  if (cfg.budget == 0) {
    for (std::size_t ci = 0; ci < ctxs.size(); ++ci) {
      eligible[ci].resize(cfg.n_max + 1);
      enumerated[ci].assign(cfg.n_max + 1, 0);
      for (unsigned n = 1; n <= cfg.n_max; ++n)
        eligible[ci][n] =
            eligible_forms(ctxs[ci], n, false, &enumerated[ci][n]);
    }
  }

  std::vector<CellResult> results(cells.size());
  run_tasks(cfg.workers, cells.size(), [&](std::size_t i) {
    const Cell& cell = cells[i];
    const FieldCtx& ctx = ctxs[cell.field];
    results[i] =
        cfg.budget == 0
            ? main_cell_exhaustive(ctx, eligible[cell.field][cell.n],
                                   enumerated[cell.field][cell.n], cell.n,
                                   cell.k)
            : main_cell_sampled(ctx, cell.n, cell.k, cfg.budget, cfg.seed);
  });
  return merge(echo_config(cfg, CampaignKind::MainTheorem, cfg.fields),
               std::move(results));
}

CampaignReport verify_monomial(const CampaignConfig& cfg) {
  require_fields(cfg);
  if (cfg.n_max < 1) fail(Errc::ConfigInvalid, "n_max must be >= 1");
  if (cfg.k_max < 1) fail(Errc::ConfigInvalid, "k_max must be >= 1");
  std::vector<FieldCtx> ctxs = build_contexts(cfg.fields, cfg.n_max);

  struct Cell {
    std::size_t field = 0;
    unsigned n = 0, k = 0;
  };
  std::vector<Cell> cells;
  double estimate = 0;
  for (std::size_t ci = 0; ci < ctxs.size(); ++ci) {
    const std::uint64_t q = ctxs[ci].field.q();
    const unsigned k_hi =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.k_max, q - 2));
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
      for (unsigned k = 1; k <= k_hi; ++k) {
        cells.push_back(Cell{ci, n, k});
        estimate += form_space_size(q, n) * static_cast<double>(q - 1) *
                    static_cast<double>(q);
      }
      estimate += form_space_size(q, n) * static_cast<double>(q);
    }
  }
  guard_cost(estimate, cfg.max_cost);

  std::vector<std::vector<std::vector<EligibleForm>>> eligible(ctxs.size());
  std::vector<std::vector<std::uint64_t>> enumerated(ctxs.size());
  for (std::size_t ci = 0; ci < ctxs.size(); ++ci) {
    eligible[ci].resize(cfg.n_max + 1);
    enumerated[ci].assign(cfg.n_max + 1, 0);
    for (unsigned n = 1; n <= cfg.n_max; ++n)
      eligible[ci][n] = eligible_forms(ctxs[ci], n, true, &enumerated[ci][n]);
  }

  std::vector<CellResult> results(cells.size());
  run_tasks(cfg.workers, cells.size(), [&](std::size_t i) {
    const Cell& cell = cells[i];
    results[i] = monomial_cell(ctxs[cell.field], eligible[cell.field][cell.n],
                               enumerated[cell.field][cell.n], cell.n, cell.k);
  });
  CampaignReport rep =
      merge(echo_config(cfg, CampaignKind::MonomialTheorem, cfg.fields),
            std::move(results));

  // Minimal hit degree per (field, n), ordered like the cells.
  for (const FieldCtx& ctx : ctxs) {
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
      std::uint64_t min_k = 0;
      for (const CellStats& cell : rep.cells)
        if (cell.q == ctx.field.q() && cell.n == n &&
            cell.permutation_hits > 0 && (min_k == 0 || cell.k < min_k))
          min_k = cell.k;
      if (min_k == 0) continue;
      Witness w = base_witness(ctx, n, static_cast<unsigned>(min_k));
      w.note = "min-k";
      w.extra = {{"min_k", static_cast<std::int64_t>(min_k)}};
      rep.notable.push_back(std::move(w));
    }
  }
  return rep;
}

CampaignReport verify_corollary(const CampaignConfig& cfg) {
  require_fields(cfg);
  if (cfg.n_max < 1) fail(Errc::ConfigInvalid, "n_max must be >= 1");
  std::vector<FieldCtx> ctxs = build_contexts(cfg.fields, cfg.n_max);

  struct Cell {
    std::size_t field = 0;
    unsigned n = 0;
  };
  std::vector<Cell> cells;
  double estimate = 0;
  for (std::size_t ci = 0; ci < ctxs.size(); ++ci) {
    const std::uint64_t q = ctxs[ci].field.q();
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
      cells.push_back(Cell{ci, n});
      estimate += form_space_size(q, n) * static_cast<double>(q) * 2.0;
    }
  }
  guard_cost(estimate, cfg.max_cost);

  std::vector<CellResult> results(cells.size());
  run_tasks(cfg.workers, cells.size(), [&](std::size_t i) {
    results[i] = corollary_cell(ctxs[cells[i].field], cells[i].n);
  });
  return merge(echo_config(cfg, CampaignKind::CorollaryComplete, cfg.fields),
               std::move(results));
}

CampaignReport example_f9(const CampaignConfig& cfg) {
  const std::vector<FieldId> fields{FieldId{3, 2}};
  const Field f(3, 2);
  const std::uint64_t q = f.q();

  std::vector<Elem> generators;
  for (std::uint64_t x = 2; x < q; ++x)
    if (f.pow(static_cast<Elem>(x), 4) != 1)  // order 8 in a group of order 8
      generators.push_back(static_cast<Elem>(x));

  CampaignReport rep;
  rep.kind = CampaignKind::ExampleF9;
  rep.config = echo_config(cfg, CampaignKind::ExampleF9, fields);

  CellStats cell;
  cell.p = 3;
  cell.r = 2;
  cell.q = q;
  cell.n = 3;
  cell.k = 2;
  cell.forms_enumerated = generators.size();

  std::vector<Elem> fmap, shifted(q);
  for (const Elem zeta : generators) {
    const CarlitzForm form{
        {1, f.pow(zeta, 5), f.pow(zeta, 6), f.pow(zeta, 3), 0}};
    expand_into(f, form, fmap);
    ZetaRow row;
    row.zeta = zeta;
    row.is_permutation = is_permutation(f, fmap);
    const RankResult rr = carlitz_rank(f, PermMap{fmap}, 3u);
    row.rank = rr.rank;
    row.rank_equals_3 = rr.rank == std::optional<unsigned>(3);
    for (std::uint64_t c = 0; c < q; ++c)
      shifted[c] =
          f.add(fmap[c], f.mul(static_cast<Elem>(c), static_cast<Elem>(c)));
    row.f_plus_x2_is_permutation = is_permutation(f, shifted);
    row.pass = row.is_permutation && row.rank_equals_3 &&
               row.f_plus_x2_is_permutation;
    rep.zeta_table.push_back(row);
    ++cell.pairs_tested;
    if (row.pass) {
      ++cell.permutation_hits;
      ++cell.forms_eligible;
      if (rep.notable.empty()) {
        Witness w;
        w.p = 3;
        w.r = 2;
        w.q = q;
        w.form = form_to_string(form);
        w.g = {0, 0, 1};
        w.n = 3;
        w.k = 2;
        w.nu = std::gcd<std::uint64_t>(2, q - 1);
        w.m = std::gcd<std::uint64_t>(3, q - 1);
        w.extra = {{"zeta", static_cast<std::int64_t>(zeta)}};
        w.note = "rank-3 permutation whose square shift stays a permutation";
        rep.notable.push_back(std::move(w));
      }
    }
  }
  rep.pass = cell.permutation_hits > 0;
  if (!rep.pass) {
    Witness w;
    w.p = 3;
    w.r = 2;
    w.q = q;
    w.n = 3;
    w.k = 2;
    w.note = "no generator reproduces the rank-3 example";
    rep.counterexamples.push_back(std::move(w));
    cell.counterexamples = 1;
  }
  rep.cells.push_back(cell);
  rep.totals.forms_enumerated = cell.forms_enumerated;
  rep.totals.forms_eligible = cell.forms_eligible;
  rep.totals.pairs_tested = cell.pairs_tested;
  rep.totals.permutation_hits = cell.permutation_hits;
  rep.totals.counterexamples = cell.counterexamples;
  return rep;
}

CampaignReport mu_sweep(const CampaignConfig& cfg) {
  const std::vector<FieldId> fields =
      cfg.fields.empty() ? prime_power_fields(3, 64) : cfg.fields;
  std::vector<FieldCtx> ctxs = build_contexts(fields, std::nullopt);
  for (const FieldCtx& ctx : ctxs)
    if (ctx.field.q() > 64)
      fail(Errc::ConfigInvalid, "mu sweep is specified for q <= 64");

  double estimate = 0;
  const std::uint64_t samples =
      cfg.budget == 0 ? kMuSweepDefaultSamples : cfg.budget;
  for (const FieldCtx& ctx : ctxs) {
    const double q = static_cast<double>(ctx.field.q());
    estimate += q * q * q + static_cast<double>(samples) * q * q;
  }
  guard_cost(estimate, cfg.max_cost);

  std::vector<CellResult> results(ctxs.size());
  run_tasks(cfg.workers, ctxs.size(),
            [&](std::size_t i) { results[i] = mu_cell(ctxs[i], cfg); });
  return merge(echo_config(cfg, CampaignKind::MuSweep, fields),
               std::move(results));
}

CampaignReport curve_sweep(const CampaignConfig& cfg) {
  const std::vector<FieldId> fields =
      cfg.fields.empty() ? prime_power_fields(3, 81) : cfg.fields;
  if (cfg.k_max < 1) fail(Errc::ConfigInvalid, "k_max must be >= 1");
  std::vector<FieldCtx> ctxs = build_contexts(fields, std::nullopt);

  struct Cell {
    std::size_t field = 0;
    unsigned k = 0;
  };
  std::vector<Cell> cells;
  const std::uint64_t samples =
      cfg.budget == 0 ? kCurveSweepDefaultSamples : cfg.budget;
  double estimate = 0;
  for (std::size_t ci = 0; ci < ctxs.size(); ++ci) {
    const std::uint64_t q = ctxs[ci].field.q();
    const unsigned k_hi =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.k_max, q - 2));
    for (unsigned k = 1; k <= k_hi; ++k) {
      cells.push_back(Cell{ci, k});
      estimate += static_cast<double>(samples) * static_cast<double>(q) *
                  static_cast<double>(q);
    }
  }
  guard_cost(estimate, cfg.max_cost);

  std::vector<CellResult> results(cells.size());
  run_tasks(cfg.workers, cells.size(), [&](std::size_t i) {
    results[i] = curve_cell(ctxs[cells[i].field], cells[i].k, cfg);
  });
  return merge(echo_config(cfg, CampaignKind::CurveSweep, fields),
               std::move(results));
}

CampaignReport run_campaign(const CampaignConfig& config) {
  CampaignConfig cfg = config;
  if (cfg.workers < 1) cfg.workers = 1;
  CampaignReport rep;
  switch (cfg.kind) {
    case CampaignKind::MainTheorem: rep = verify_main(cfg); break;
    case CampaignKind::MonomialTheorem: rep = verify_monomial(cfg); break;
    case CampaignKind::CorollaryComplete: rep = verify_corollary(cfg); break;
    case CampaignKind::ExampleF9: rep = example_f9(cfg); break;
    case CampaignKind::MuSweep: rep = mu_sweep(cfg); break;
    case CampaignKind::CurveSweep: rep = curve_sweep(cfg); break;
    default: fail(Errc::ConfigInvalid, "unknown campaign kind");
  }
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) fail(Errc::IoFailure, "cannot open " + cfg.out_path);
    out << (cfg.format == ReportFormat::Json ? to_json(rep) : to_csv(rep));
    if (!out) fail(Errc::IoFailure, "short write to " + cfg.out_path);
  }
  return rep;
}

std::string to_json(const CampaignReport& rep) {
  OrderedJson doc;
  doc["schema_version"] = rep.schema_version;
  doc["campaign"] = campaign_kind_name(rep.kind);
  doc["verdict"] = rep.pass ? "PASS" : "FAIL";

  OrderedJson fields = OrderedJson::array();
  for (const FieldId& id : rep.config.fields) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < id.r; ++i) q *= id.p;
    fields.push_back(OrderedJson{{"p", id.p}, {"r", id.r}, {"q", q}});
  }
  doc["config"] = OrderedJson{{"fields", fields},
                              {"n_max", rep.config.n_max},
                              {"k_max", rep.config.k_max},
                              {"budget", rep.config.budget},
                              {"seed", rep.config.seed}};
  doc["totals"] = json_cell_counts(rep.totals);

  OrderedJson cells = OrderedJson::array();
  for (const CellStats& c : rep.cells) {
    OrderedJson cell;
    cell["p"] = c.p;
    cell["r"] = c.r;
    cell["q"] = c.q;
    cell["n"] = c.n;
    cell["k"] = c.k;
    const OrderedJson counts = json_cell_counts(c);
    for (const auto& [key, value] : counts.items()) cell[key] = value;
    cells.push_back(cell);
  }
  doc["cells"] = cells;

  auto witness_array = [](const std::vector<Witness>& v) {
    OrderedJson arr = OrderedJson::array();
    for (const Witness& w : v) arr.push_back(json_witness(w));
    return arr;
  };
  doc["notable"] = witness_array(rep.notable);
  doc["counterexamples"] = witness_array(rep.counterexamples);
  doc["informational"] = witness_array(rep.informational);

  if (rep.kind == CampaignKind::ExampleF9) {
    OrderedJson table = OrderedJson::array();
    for (const ZetaRow& row : rep.zeta_table) {
      OrderedJson r;
      r["zeta"] = row.zeta;
      r["is_permutation"] = row.is_permutation;
      r["rank"] = row.rank ? OrderedJson(*row.rank) : OrderedJson(nullptr);
      r["rank_equals_3"] = row.rank_equals_3;
      r["f_plus_x2_is_permutation"] = row.f_plus_x2_is_permutation;
      r["pass"] = row.pass;
      table.push_back(r);
    }
    doc["zeta_table"] = table;
  }
  return doc.dump(2) + "\n";
}

std::string to_csv(const CampaignReport& rep) {
  std::string out =
      "campaign,p,r,q,n,k,forms_enumerated,forms_eligible,pairs_tested,"
      "permutation_hits,out_of_hypothesis,counterexamples,discrepancies\n";
  for (const CellStats& c : rep.cells) {
    out += campaign_kind_name(rep.kind);
    out += ',' + std::to_string(c.p) + ',' + std::to_string(c.r) + ',' +
           std::to_string(c.q) + ',' + std::to_string(c.n) + ',' +
           std::to_string(c.k) + ',' + std::to_string(c.forms_enumerated) +
           ',' + std::to_string(c.forms_eligible) + ',' +
           std::to_string(c.pairs_tested) + ',' +
           std::to_string(c.permutation_hits) + ',' +
           std::to_string(c.out_of_hypothesis) + ',' +
           std::to_string(c.counterexamples) + ',' +
           std::to_string(c.discrepancies) + '\n';
  }
  return out;
}

}  // namespace carlitz
