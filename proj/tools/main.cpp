// SPDX-License-Identifier: Apache-2.0
// carlitz -- command line front end

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "carlitz/bounds.hpp"
#include "carlitz/campaign.hpp"
#include "carlitz/error.hpp"
#include "carlitz/field.hpp"
#include "carlitz/form.hpp"
#include "carlitz/perm.hpp"

namespace {

using carlitz::Elem;
using OrderedJson = nlohmann::ordered_json;

std::vector<Elem> parse_codes(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(token, &used);
      if (used != token.size() || v > 0xffffffffull)
        throw std::invalid_argument(token);
      out.push_back(static_cast<Elem>(v));
    } catch (const std::exception&) {
      carlitz::fail(carlitz::Errc::ConfigInvalid,
                    "bad element code '" + token + "' in '" + text + "'");
    }
  }
  if (out.empty())
    carlitz::fail(carlitz::Errc::ConfigInvalid, "empty code list");
  return out;
}

std::string join_codes(const std::vector<Elem>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(codes[i]);
  }
  return out;
}

struct VerifyOpts {
  std::vector<std::uint64_t> ps;
  std::vector<std::uint64_t> rs;
  unsigned n_max = 2;
  unsigned k_max = 3;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out;
  std::string format = "json";
  double max_cost = 2e9;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation polynomials in Carlitz-rank form: tools and "
               "verification campaigns"};
  app.require_subcommand(1);
  int rc = 0;

  // field --------------------------------------------------------------
  std::uint64_t field_p = 0;
  unsigned field_r = 1;
  auto* field_cmd =
      app.add_subcommand("field", "print canonical data for GF(p^r)");
  field_cmd->add_option("--p", field_p, "prime characteristic")->required();
  field_cmd->add_option("--r", field_r, "extension degree");
  field_cmd->callback([&] {
    const carlitz::Field f(field_p, field_r);
    OrderedJson doc;
    doc["p"] = f.p();
    doc["r"] = f.r();
    doc["q"] = f.q();
    doc["modulus"] = f.modulus();
    doc["primitive_element"] = f.primitive_element();
    std::cout << doc.dump(2) << "\n";
  });

  // crk ----------------------------------------------------------------
  std::uint64_t crk_p = 0;
  unsigned crk_r = 1;
  std::string crk_perm, crk_form;
  std::int64_t crk_cap = -1;
  auto* crk_cmd = app.add_subcommand(
      "crk", "Carlitz rank of a permutation (as images or as a form)");
  crk_cmd->add_option("--p", crk_p, "prime characteristic")->required();
  crk_cmd->add_option("--r", crk_r, "extension degree");
  crk_cmd->add_option("--perm", crk_perm,
                      "comma-separated images of 0..q-1");
  crk_cmd->add_option("--form", crk_form,
                      "comma-separated form coefficients a0,...,a_{n+1}");
  crk_cmd->add_option("--cap", crk_cap, "rank search ceiling");
  crk_cmd->callback([&] {
    const carlitz::Field f(crk_p, crk_r);
    if (crk_perm.empty() == crk_form.empty())
      carlitz::fail(carlitz::Errc::ConfigInvalid,
                    "pass exactly one of --perm and --form");
    std::vector<Elem> images;
    if (!crk_form.empty()) {
      carlitz::CarlitzForm form{parse_codes(crk_form)};
      carlitz::validate_form(f, form);
      images = carlitz::expand_form(f, form).images;
    } else {
      images = parse_codes(crk_perm);
      if (images.size() != f.q())
        carlitz::fail(carlitz::Errc::ConfigInvalid,
                      "--perm needs exactly q images");
      for (const Elem v : images) f.check(v);
    }
    const std::optional<unsigned> cap =
        crk_cap < 0 ? std::nullopt
                    : std::optional<unsigned>(static_cast<unsigned>(crk_cap));
    const carlitz::RankResult res =
        carlitz::carlitz_rank(f, carlitz::PermMap{images}, cap);
    OrderedJson doc;
    doc["p"] = f.p();
    doc["r"] = f.r();
    doc["q"] = f.q();
    doc["rank"] = res.rank ? OrderedJson(*res.rank) : OrderedJson(nullptr);
    doc["cap"] = res.cap;
    doc["witness"] = res.witness ? OrderedJson(join_codes(res.witness->coeffs))
                                 : OrderedJson(nullptr);
    std::cout << doc.dump(2) << "\n";
  });

  // verify -------------------------------------------------------------
  VerifyOpts vo;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->require_subcommand(1);
  auto add_verify_kind = [&](const std::string& name, const char* help,
                             carlitz::CampaignKind kind) {
    auto* sub = verify_cmd->add_subcommand(name, help);
    sub->add_option("--p", vo.ps, "prime characteristic (repeatable)");
    sub->add_option("--r", vo.rs, "extension degree (pairs with --p)");
    sub->add_option("--n-max", vo.n_max, "largest Carlitz rank");
    sub->add_option("--k-max", vo.k_max, "largest degree for g");
    sub->add_option("--budget", vo.budget,
                    "samples per cell (0 = exhaustive or campaign default)");
    sub->add_option("--seed", vo.seed, "sampling seed");
    sub->add_option("--workers", vo.workers, "worker threads");
    sub->add_option("--out", vo.out, "report path")->required();
    sub->add_option("--format", vo.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--max-cost", vo.max_cost,
                    "abort if the estimated work exceeds this");
    sub->callback([&, kind, name] {
      carlitz::CampaignConfig cfg;
      cfg.kind = kind;
      if (vo.ps.size() != vo.rs.size()) {
        if (!vo.rs.empty() || vo.ps.empty())
          carlitz::fail(carlitz::Errc::ConfigInvalid,
                        "--p and --r must pair up");
        vo.rs.assign(vo.ps.size(), 1);  // bare primes
      }
      for (std::size_t i = 0; i < vo.ps.size(); ++i)
        cfg.fields.push_back(
            carlitz::FieldId{vo.ps[i], static_cast<unsigned>(vo.rs[i])});
      cfg.n_max = vo.n_max;
      cfg.k_max = vo.k_max;
      cfg.budget = vo.budget;
      cfg.seed = vo.seed;
      cfg.workers = vo.workers;
      cfg.out_path = vo.out;
      cfg.format = vo.format == "csv" ? carlitz::ReportFormat::Csv
                                      : carlitz::ReportFormat::Json;
      cfg.max_cost = vo.max_cost;
      const carlitz::CampaignReport rep = carlitz::run_campaign(cfg);
      std::cout << "campaign=" << name
                << " verdict=" << (rep.pass ? "PASS" : "FAIL")
                << " cells=" << rep.cells.size()
                << " counterexamples=" << rep.counterexamples.size()
                << " out=" << cfg.out_path << "\n";
      if (!rep.pass) rc = 1;
    });
  };
  add_verify_kind("main", "permutation pairs against the difference bound",
                  carlitz::CampaignKind::MainTheorem);
  add_verify_kind("monomial", "monomial differences against the curve bound",
                  carlitz::CampaignKind::MonomialTheorem);
  add_verify_kind("corollary", "complete mappings below the rank threshold",
                  carlitz::CampaignKind::CorollaryComplete);
  add_verify_kind("mu-sweep", "collision tallies against brute force",
                  carlitz::CampaignKind::MuSweep);
  add_verify_kind("curve-sweep", "curve point counts against brute force",
                  carlitz::CampaignKind::CurveSweep);

  // mu -----------------------------------------------------------------
  std::uint64_t mu_p = 0;
  unsigned mu_r = 1;
  std::string mu_form, mu_g;
  auto* mu_cmd = app.add_subcommand(
      "mu", "collision count of one (form, g) pair");
  mu_cmd->add_option("--p", mu_p, "prime characteristic")->required();
  mu_cmd->add_option("--r", mu_r, "extension degree");
  mu_cmd->add_option("--form", mu_form, "form coefficients")->required();
  mu_cmd->add_option("--g", mu_g, "g coefficients, low degree first")
      ->required();
  mu_cmd->callback([&] {
    const carlitz::Field f(mu_p, mu_r);
    const carlitz::CarlitzForm form{parse_codes(mu_form)};
    const carlitz::Poly g{parse_codes(mu_g)};
    const carlitz::CollisionReport rep = carlitz::collision_count(f, form, g);
    OrderedJson doc;
    doc["q"] = rep.q;
    doc["n"] = rep.n;
    doc["k"] = rep.k;
    doc["a"] = rep.a;
    doc["b"] = rep.b;
    doc["d"] = rep.d;
    doc["b_tilde"] = rep.b_tilde;
    doc["mu"] = rep.mu;
    doc["max_fiber"] = rep.max_fiber;
    OrderedJson fibers = OrderedJson::array();
    for (const auto& [value, count] : rep.fibers)
      fibers.push_back(OrderedJson::array({value, count}));
    doc["fibers"] = fibers;
    std::cout << doc.dump(2) << "\n";
  });

  // curve --------------------------------------------------------------
  std::uint64_t curve_p = 0;
  unsigned curve_r = 1, curve_k = 1;
  std::uint64_t curve_b = 0, curve_c = 0;
  auto* curve_cmd = app.add_subcommand(
      "curve", "affine point count for one superelliptic instance");
  curve_cmd->add_option("--p", curve_p, "prime characteristic")->required();
  curve_cmd->add_option("--r", curve_r, "extension degree");
  curve_cmd->add_option("--k", curve_k, "monomial degree")->required();
  curve_cmd->add_option("--b", curve_b, "numerator constant")->required();
  curve_cmd->add_option("--c", curve_c, "monomial coefficient")->required();
  curve_cmd->callback([&] {
    const carlitz::Field f(curve_p, curve_r);
    f.check(static_cast<Elem>(curve_b));
    f.check(static_cast<Elem>(curve_c));
    const carlitz::CurveCountReport rep = carlitz::curve_affine_count(
        f, curve_k, static_cast<Elem>(curve_b), static_cast<Elem>(curve_c));
    OrderedJson doc;
    doc["q"] = rep.q;
    doc["k"] = rep.k;
    doc["b"] = rep.b;
    doc["c"] = rep.c;
    doc["m"] = rep.m;
    doc["genus"] = rep.genus;
    doc["affine_count"] = rep.affine_count;
    doc["x_equal_one_points"] = rep.x_equal_one_points;
    doc["floor"] = OrderedJson{{"a", rep.floor_inequality.a},
                               {"b", rep.floor_inequality.b},
                               {"c", rep.floor_inequality.c},
                               {"q", rep.floor_inequality.q},
                               {"holds", rep.floor_holds}};
    doc["floor_positive"] = rep.floor_positive;
    doc["parabola_count"] = rep.parabola_count;
    doc["parabola_cap"] = rep.parabola_cap;
    std::cout << doc.dump(2) << "\n";
  });

  // example-f9 ---------------------------------------------------------
  std::string ef_out;
  auto* ef_cmd = app.add_subcommand(
      "example-f9", "rank-3 square-shift example over GF(9)");
  ef_cmd->add_option("--out", ef_out, "optional report path");
  ef_cmd->callback([&] {
    carlitz::CampaignConfig cfg;
    cfg.kind = carlitz::CampaignKind::ExampleF9;
    cfg.out_path = ef_out;
    const carlitz::CampaignReport rep = carlitz::run_campaign(cfg);
    std::cout << carlitz::to_json(rep);
    if (!rep.pass) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const carlitz::Error& e) {
    std::cerr << "error (" << carlitz::errc_name(e.code()) << "): " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
