// SPDX-License-Identifier: Apache-2.0
// campaign.hpp -- verification campaigns over small fields, with reports
//
// A campaign walks a declared (field, n, k) grid, tests every (or a seeded
// sample of) candidate pair, and records counterexamples as replayable
// witnesses. Report content is a pure function of (config, seed): worker
// count, scheduling, wall time, and output path never enter the serialized
// bytes, so re-runs diff clean.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/bounds.hpp"
#include "carlitz/field.hpp"
#include "carlitz/form.hpp"
#include "carlitz/perm.hpp"

namespace carlitz {

// Deterministic splittable generator (splitmix64); `below` maps the next
// word into [0, bound) by 128-bit multiply-shift.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
};

// Per-sample seed derivation; every (q, n, k, index) coordinate gets an
// independent stream, so results do not depend on how work is chunked.
std::uint64_t fold_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                        std::uint64_t c, std::uint64_t d);

struct FieldId {
  std::uint64_t p = 0;
  unsigned r = 1;
  bool operator==(const FieldId&) const = default;
};

enum class CampaignKind {
  MainTheorem,
  MonomialTheorem,
  CorollaryComplete,
  ExampleF9,
  MuSweep,
  CurveSweep,
};

const char* campaign_kind_name(CampaignKind k);

enum class ReportFormat { Json, Csv };

struct CampaignConfig {
  CampaignKind kind = CampaignKind::MainTheorem;
  std::vector<FieldId> fields;  // empty = per-kind default grid for sweeps
  unsigned n_max = 2;
  unsigned k_max = 3;
  // 0 = exhaustive (theorem campaigns) or the per-kind default sample count
  // (100 for mu-sweep, 50 for curve-sweep).
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out_path;  // empty = do not write a file
  ReportFormat format = ReportFormat::Json;
  double max_cost = 2e9;  // rough elementary-operation ceiling
};

struct CellStats {
  std::uint64_t p = 0;
  unsigned r = 1;
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned k = 0;
  std::uint64_t forms_enumerated = 0;
  std::uint64_t forms_eligible = 0;
  std::uint64_t pairs_tested = 0;
  std::uint64_t permutation_hits = 0;
  std::uint64_t out_of_hypothesis = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t discrepancies = 0;
};

struct Witness {
  std::uint64_t p = 0;
  unsigned r = 1;
  std::uint64_t q = 0;
  std::string form;     // "a0,a1,..."
  std::vector<Elem> g;  // reduced coefficients, lowest degree first
  unsigned n = 0;
  unsigned k = 0;
  std::uint64_t nu = 0;
  std::uint64_t m = 0;
  std::uint64_t mu = 0;
  std::uint32_t max_fiber = 0;
  std::vector<std::pair<Elem, std::uint32_t>> fibers;
  std::vector<BoundReport> bounds;
  std::vector<std::pair<std::string, std::int64_t>> extra;
  std::string note;
  std::uint64_t form_index = 0;
  std::uint64_t g_index = 0;
};

struct ZetaRow {
  Elem zeta = 0;
  bool is_permutation = false;
  std::optional<unsigned> rank;
  bool rank_equals_3 = false;
  bool f_plus_x2_is_permutation = false;
  bool pass = false;
};

struct CampaignReport {
  int schema_version = 1;
  CampaignKind kind = CampaignKind::MainTheorem;
  bool pass = false;
  CampaignConfig config;  // echo; fields normalized, runtime knobs excluded
  CellStats totals;       // grid labels zeroed, counts summed
  std::vector<CellStats> cells;
  std::vector<Witness> notable;
  std::vector<Witness> counterexamples;
  std::vector<Witness> informational;
  std::vector<ZetaRow> zeta_table;  // example-f9 only
};

// All prime powers q in [qmin, qmax], ascending.
std::vector<FieldId> prime_power_fields(std::uint64_t qmin,
                                        std::uint64_t qmax);

CampaignReport run_campaign(const CampaignConfig& config);

CampaignReport verify_main(const CampaignConfig& config);
CampaignReport verify_monomial(const CampaignConfig& config);
CampaignReport verify_corollary(const CampaignConfig& config);
CampaignReport example_f9(const CampaignConfig& config);
CampaignReport mu_sweep(const CampaignConfig& config);
CampaignReport curve_sweep(const CampaignConfig& config);

std::string to_json(const CampaignReport& report);
std::string to_csv(const CampaignReport& report);

}  // namespace carlitz
