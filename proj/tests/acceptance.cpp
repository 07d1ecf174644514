// SPDX-License-Identifier: Apache-2.0
// acceptance.cpp -- end-to-end acceptance checks, one verdict line each.
//
// Every TEST_CASE prints exactly one "ACCEPTANCE <n>: PASS/FAIL" line with a
// short detail and its wall time; the doctest assertion mirrors the verdict,
// so ctest fails if and only if a line reads FAIL. Runtime ceilings are part
// of each verdict.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "carlitz/bounds.hpp"
#include "carlitz/campaign.hpp"
#include "carlitz/error.hpp"
#include "carlitz/field.hpp"
#include "carlitz/form.hpp"
#include "carlitz/perm.hpp"

using carlitz::CampaignConfig;
using carlitz::CampaignKind;
using carlitz::CampaignReport;
using carlitz::CarlitzForm;
using carlitz::Elem;
using carlitz::Field;
using carlitz::FieldId;
using carlitz::FormSpace;
using carlitz::PoleSet;
using carlitz::ProjectivePoint;
using carlitz::RankTable;
using carlitz::SplitMix64;
using carlitz::Witness;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void announce(int index, bool ok, const std::string& detail) {
  std::printf("ACCEPTANCE %d: %s — %s\n", index, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

// Runs the CLI binary with the given arguments, silencing its streams;
// returns the process exit status (or -1 if it could not be launched).
int run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BIN) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  if (!WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, ap);
  va_end(ap);
  return std::string(buf);
}

CampaignConfig grid_config(CampaignKind kind, std::vector<FieldId> fields,
                           unsigned n_max, unsigned k_max) {
  CampaignConfig cfg;
  cfg.kind = kind;
  cfg.fields = std::move(fields);
  cfg.n_max = n_max;
  cfg.k_max = k_max;
  return cfg;
}

}  // namespace

TEST_CASE("acceptance 1: rank-3 square-shift example over GF(9)") {
  const auto t0 = Clock::now();
  const CampaignReport rep = carlitz::example_f9(CampaignConfig{});
  std::uint64_t passing = 0;
  bool rows_ok = rep.zeta_table.size() == 4;
  for (const carlitz::ZetaRow& row : rep.zeta_table) {
    rows_ok = rows_ok && row.is_permutation;
    if (row.pass) {
      ++passing;
      rows_ok = rows_ok && row.rank_equals_3 && row.f_plus_x2_is_permutation;
    }
  }
  const int cli = run_cli("example-f9");
  const double dt = seconds_since(t0);
  const bool ok = rep.pass && rows_ok && passing >= 1 && cli == 0 && dt < 5.0;
  announce(1, ok,
           fmt("square-shift example holds for %llu of 4 generators, CLI exit "
               "%d, %.2fs (limit 5s)",
               static_cast<unsigned long long>(passing), cli, dt));
  CHECK(ok);
}

TEST_CASE("acceptance 2: hyperbola pair counts exact for every q <= 64") {
  const auto t0 = Clock::now();
  CampaignConfig cfg;
  cfg.kind = CampaignKind::MuSweep;  // empty field list = every q in [3, 64]
  const CampaignReport rep = carlitz::mu_sweep(cfg);
  const double dt = seconds_since(t0);
  const bool ok = rep.pass && rep.cells.size() == 26 &&
                  rep.totals.counterexamples == 0 && dt < 30.0;
  announce(2, ok,
           fmt("closed form matched brute force on %llu checks across 26 "
               "fields, %.2fs (limit 30s)",
               static_cast<unsigned long long>(rep.totals.pairs_tested), dt));
  CHECK(ok);
}

TEST_CASE("acceptance 3: difference bound, exhaustive small fields plus sampled GF(9)") {
  const auto t0 = Clock::now();
  const CampaignReport exhaustive = carlitz::verify_main(
      grid_config(CampaignKind::MainTheorem,
                  {FieldId{5, 1}, FieldId{7, 1}, FieldId{2, 3}}, 2, 3));
  CampaignConfig sampled_cfg =
      grid_config(CampaignKind::MainTheorem, {FieldId{3, 2}}, 3, 3);
  sampled_cfg.budget = 10000;
  sampled_cfg.seed = 1;
  const CampaignReport sampled = carlitz::verify_main(sampled_cfg);
  const double dt = seconds_since(t0);
  const bool ok = exhaustive.pass && sampled.pass &&
                  exhaustive.totals.counterexamples == 0 &&
                  sampled.totals.counterexamples == 0 && dt < 600.0;
  announce(
      3, ok,
      fmt("zero counterexamples on %llu exhaustive + %llu sampled pairs "
          "(%llu + %llu hits), %.1fs (limit 600s)",
          static_cast<unsigned long long>(exhaustive.totals.pairs_tested),
          static_cast<unsigned long long>(sampled.totals.pairs_tested),
          static_cast<unsigned long long>(exhaustive.totals.permutation_hits),
          static_cast<unsigned long long>(sampled.totals.permutation_hits),
          dt));
  CHECK(ok);
}

TEST_CASE("acceptance 4: monomial bound exhaustive with minimal-degree check") {
  const auto t0 = Clock::now();
  const CampaignReport rep = carlitz::verify_monomial(grid_config(
      CampaignKind::MonomialTheorem,
      {FieldId{5, 1}, FieldId{7, 1}, FieldId{2, 3}, FieldId{3, 2}}, 3, 5));
  std::uint64_t min_k_q9_n3 = 0;
  for (const Witness& w : rep.notable)
    if (w.note == "min-k" && w.q == 9 && w.n == 3 && !w.extra.empty())
      min_k_q9_n3 = static_cast<std::uint64_t>(w.extra[0].second);
  const double dt = seconds_since(t0);
  const bool ok = rep.pass && rep.totals.counterexamples == 0 &&
                  min_k_q9_n3 == 2 && dt < 600.0;
  announce(4, ok,
           fmt("zero counterexamples on %llu pairs, minimal hit degree for "
               "(q=9, n=3) is %llu (want 2), %.1fs (limit 600s)",
               static_cast<unsigned long long>(rep.totals.pairs_tested),
               static_cast<unsigned long long>(min_k_q9_n3), dt));
  CHECK(ok);
}

TEST_CASE("acceptance 5: no complete mapping below the rank threshold") {
  const auto t0 = Clock::now();
  const CampaignReport rep = carlitz::verify_corollary(grid_config(
      CampaignKind::CorollaryComplete,
      {FieldId{5, 1}, FieldId{7, 1}, FieldId{2, 3}, FieldId{3, 2}}, 3, 1));
  const double dt = seconds_since(t0);
  const bool ok = rep.pass && rep.totals.counterexamples == 0 && dt < 300.0;
  announce(5, ok,
           fmt("%llu rank-exact forms checked, zero complete mappings in "
               "range, %.1fs (limit 300s)",
               static_cast<unsigned long long>(rep.totals.pairs_tested), dt));
  CHECK(ok);
}

TEST_CASE("acceptance 6: rank table covers every permutation of GF(4) and GF(5)") {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string parts;
  for (const auto& [p, r, expected] :
       {std::tuple<std::uint64_t, unsigned, std::uint64_t>{2, 2, 24},
        {5, 1, 120}}) {
    const Field f(p, r);
    const RankTable table(f, 6);
    std::uint64_t total = 0;
    std::set<std::vector<Elem>> distinct;
    for (unsigned n = 0; n <= table.max_rank(); ++n) {
      total += table.of_rank(n).size();
      for (const carlitz::PermMap& m : table.of_rank(n))
        distinct.insert(m.images);
    }
    std::uint64_t found = 0, perms = 0;
    std::vector<Elem> images(f.q());
    for (std::uint64_t c = 0; c < f.q(); ++c) images[c] = static_cast<Elem>(c);
    do {
      ++perms;
      if (table.rank_of(images)) ++found;
    } while (std::next_permutation(images.begin(), images.end()));
    ok = ok && total == expected && distinct.size() == expected &&
         perms == expected && found == expected;
    parts += fmt("%sq=%llu: %llu/%llu ranked", parts.empty() ? "" : "; ",
                 static_cast<unsigned long long>(f.q()),
                 static_cast<unsigned long long>(found),
                 static_cast<unsigned long long>(perms));
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 120.0;
  announce(6, ok, parts + fmt(", %.1fs (limit 120s)", dt));
  CHECK(ok);
}

TEST_CASE("acceptance 7: expansion agrees with the approximant off the poles") {
  const auto t0 = Clock::now();
  std::uint64_t checked = 0, failures = 0;

  auto check_form = [&](const Field& f, const CarlitzForm& form) {
    ++checked;
    const carlitz::PermMap fmap = expand_form(f, form);
    const PoleSet poles = pole_set(f, form);
    if (poles.distinct.size() > form.n()) {
      ++failures;
      return;
    }
    std::set<Elem> finite_poles;
    for (const ProjectivePoint& pt : poles.distinct)
      if (!pt.infinite) finite_poles.insert(pt.value);
    const carlitz::FracTransform last = approximant(f, form, form.n());
    for (std::uint64_t x = 0; x < f.q(); ++x) {
      if (finite_poles.count(static_cast<Elem>(x))) continue;
      const ProjectivePoint v = last.eval(f, static_cast<Elem>(x));
      if (v != ProjectivePoint::finite(fmap.images[x])) {
        ++failures;
        return;
      }
    }
  };

  for (const std::uint64_t p : {5ull, 7ull}) {
    const Field f(p, 1);
    for (unsigned n = 0; n <= 3; ++n) {
      const FormSpace space(f, n);
      for (std::uint64_t i = 0; i < space.count(); ++i)
        check_form(f, space.at(i));
    }
  }
  for (const auto& [p, r] : {std::pair<std::uint64_t, unsigned>{2, 3},
                             {3, 2},
                             {2, 4},
                             {5, 2}}) {
    const Field f(p, r);
    SplitMix64 rng(carlitz::fold_seed(2026, f.q(), 7, 0, 0));
    for (int s = 0; s < 1000; ++s) {
      const unsigned n = static_cast<unsigned>(rng.below(7));  // 0..6
      const FormSpace space(f, n);
      check_form(f, space.at(rng.below(space.count())));
    }
  }
  const double dt = seconds_since(t0);
  const bool ok = failures == 0 && dt < 120.0;
  announce(7, ok,
           fmt("%llu forms checked (exhaustive n<=3 at q=5,7 plus 4000 "
               "sampled n<=6), %llu failures, %.1fs (limit 120s)",
               static_cast<unsigned long long>(checked),
               static_cast<unsigned long long>(failures), dt));
  CHECK(ok);
}

TEST_CASE("acceptance 8: curve counts match brute force across the sweep grid") {
  const auto t0 = Clock::now();
  CampaignConfig cfg;
  cfg.kind = CampaignKind::CurveSweep;  // empty field list = every q in [3, 81]
  cfg.k_max = 6;
  const CampaignReport rep = carlitz::curve_sweep(cfg);
  const double dt = seconds_since(t0);
  const bool ok = rep.pass && rep.totals.counterexamples == 0 &&
                  rep.cells.size() >= 150 && dt < 300.0;
  announce(8, ok,
           fmt("%llu sampled curves over %llu cells matched the brute count "
               "and floor, %.1fs (limit 300s)",
               static_cast<unsigned long long>(rep.totals.pairs_tested),
               static_cast<unsigned long long>(rep.cells.size()), dt));
  CHECK(ok);
}

TEST_CASE("acceptance 9: worker counts 1 and 8 serialize identically") {
  const auto t0 = Clock::now();
  auto bytes = [](CampaignConfig cfg, unsigned workers) {
    cfg.workers = workers;
    return carlitz::to_json(carlitz::run_campaign(cfg));
  };

  std::vector<CampaignConfig> configs;
  configs.push_back(
      grid_config(CampaignKind::MainTheorem, {FieldId{5, 1}}, 2, 2));
  {
    CampaignConfig sampled =
        grid_config(CampaignKind::MainTheorem, {FieldId{3, 2}}, 3, 3);
    sampled.budget = 500;
    sampled.seed = 3;
    configs.push_back(sampled);
  }
  configs.push_back(grid_config(CampaignKind::MonomialTheorem,
                                {FieldId{5, 1}, FieldId{2, 3}}, 2, 3));
  configs.push_back(grid_config(CampaignKind::CorollaryComplete,
                                {FieldId{5, 1}, FieldId{2, 3}}, 3, 1));
  configs.push_back(
      grid_config(CampaignKind::ExampleF9, {FieldId{3, 2}}, 3, 2));
  {
    CampaignConfig mu = grid_config(
        CampaignKind::MuSweep, {FieldId{5, 1}, FieldId{2, 3}, FieldId{3, 2}},
        2, 2);
    mu.budget = 50;
    configs.push_back(mu);
  }
  {
    CampaignConfig curve = grid_config(
        CampaignKind::CurveSweep, {FieldId{5, 1}, FieldId{2, 3}, FieldId{3, 2}},
        2, 3);
    curve.budget = 20;
    configs.push_back(curve);
  }

  std::size_t matched = 0;
  for (const CampaignConfig& cfg : configs)
    if (bytes(cfg, 1) == bytes(cfg, 8)) ++matched;
  const double dt = seconds_since(t0);
  const bool ok = matched == configs.size() && dt < 300.0;
  announce(9, ok,
           fmt("%zu of %zu campaign configs byte-identical at workers 1 vs 8, "
               "%.1fs (limit 300s)",
               matched, configs.size(), dt));
  CHECK(ok);
}

TEST_CASE("command line smoke checks") {
  CHECK(run_cli("") == 2);                // a subcommand is required
  CHECK(run_cli("field --p 5") == 0);
  CHECK(run_cli("field --p 4") == 2);     // 4 is not prime
  CHECK(run_cli("crk --p 5 --form 1,0,0") == 0);
  CHECK(run_cli("crk --p 5 --perm 0,1,3,2,4") == 0);
  CHECK(run_cli("crk --p 5") == 2);       // needs --perm or --form
  CHECK(run_cli("verify bogus --out /tmp/x.json") == 2);
  CHECK(run_cli("mu --p 7 --form 1,0,0 --g 0,1") == 0);
  CHECK(run_cli("curve --p 7 --k 2 --b 2 --c 1") == 0);
  CHECK(run_cli("curve --p 7 --k 9 --b 1 --c 1") == 2);  // k out of range

  namespace fs = std::filesystem;
  const fs::path out = fs::temp_directory_path() / "carlitz_cli_smoke.json";
  fs::remove(out);
  CHECK(run_cli("verify main --p 5 --n-max 1 --k-max 1 --out " +
                out.string()) == 0);
  CHECK(fs::exists(out));
  fs::remove(out);
  // --out is mandatory for campaigns.
  CHECK(run_cli("verify main --p 5 --n-max 1 --k-max 1") == 2);
}
