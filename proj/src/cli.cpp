#include "planegraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "planegraph/charging.hpp"
#include "planegraph/constructions.hpp"
#include "planegraph/report.hpp"
#include "planegraph/verify.hpp"

namespace planegraph::cli {

namespace {

// Per-graph charge listings are kept in memory; beyond this n they are omitted.
constexpr int kPerGraphListingMaxN = 8;

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + cfg.out_path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RunOptions options(const RunConfig& cfg) {
  RunOptions opts;
  opts.workers = cfg.workers;
  opts.limits = cfg.limits;
  return opts;
}

Universe load(const RunConfig& cfg, std::ostream& err) {
  PointSet points = read_pts_file(cfg.input);
  check_cap(points.size(), cfg.limits);
  if (points.size() > 10) err << work_estimate(points.size()) << "\n";
  return Universe(std::move(points));
}

bool csv(const RunConfig& cfg) { return cfg.format && *cfg.format == "csv"; }

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const auto points = parse_pts_points(read_text_file(cfg.input));
  const auto report = validate_general_position(points);
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["n"] = points.size();
  j["ok"] = report.ok();
  Json dups = Json::array();
  for (const auto& [a, b] : report.duplicates) dups.push_back({a, b});
  Json col = Json::array();
  for (const auto& t : report.collinear) col.push_back({t.a, t.b, t.c});
  j["duplicates"] = std::move(dups);
  j["collinear_triples"] = std::move(col);
  j["out_of_range"] = report.out_of_range;
  if (report.ok() && points.size() >= 3) {
    const auto ps = PointSet::from_points(points);
    j["hull"] = convex_hull(ps);
    j["input_fingerprint"] = fingerprint(ps);
  }
  emit(cfg, out, dump(j));
  return report.ok() ? kExitOk : kExitUsage;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Universe u = load(cfg, err);
  const mpz_class pg = count_plane_graphs(u, options(cfg));
  if (!cfg.format) emit(cfg, out, pg.get_str() + "\n");
  else if (csv(cfg)) emit(cfg, out, "pg\n" + pg.get_str() + "\n");
  else emit(cfg, out, dump(count_json(u, pg)));
  return kExitOk;
}

int cmd_degrees(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Universe u = load(cfg, err);
  const DegreeExpectation d = expected_degree_vector(u, options(cfg));
  emit(cfg, out, csv(cfg) ? degrees_csv(d) : dump(degrees_json(u, d)));
  return kExitOk;
}

int cmd_triangulations(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Universe u = load(cfg, err);
  const TriangulationStats stats = enumerate_triangulations(u, {}, cfg.limits);
  emit(cfg, out, csv(cfg) ? triangulations_csv(u, stats) : dump(triangulations_json(u, stats)));
  return kExitOk;
}

int cmd_charge_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Universe u = load(cfg, err);
  const bool listing = !csv(cfg) && u.n() <= kPerGraphListingMaxN;
  const ChargeAudit audit = charge_audit(u, listing, cfg.limits);
  if (csv(cfg)) {
    emit(cfg, out, family_census_csv(audit.census));
  } else {
    Json j = charge_audit_json(u, audit);
    if (!listing) j["graph_charges_omitted"] = "n > " + std::to_string(kPerGraphListingMaxN);
    emit(cfg, out, dump(j));
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Universe u = load(cfg, err);
  const auto reports = verify_all(u, cfg.claims, options(cfg));
  emit(cfg, out, dump(verification_document(&u, reports)));
  return any_violation(reports) ? kExitViolation : kExitOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  ConstructionSpec spec;
  spec.kind = parse_construction_kind(cfg.gen_kind);
  spec.n = cfg.gen_n;
  spec.seed = cfg.seed;
  emit(cfg, out, format_pts(generate(spec)));
  return kExitOk;
}

int cmd_construction_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_cap(cfg.n_max, cfg.limits);
  if (cfg.n_max > 10) err << work_estimate(cfg.n_max) << "\n";
  const auto rows = construction_report(cfg.n_max, options(cfg));
  const bool json = cfg.format && *cfg.format == "json";
  emit(cfg, out, json ? dump(construction_report_json(rows)) : construction_report_csv(rows));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and verification of plane graphs on small point sets", "planegraph"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  RunConfig cfg;
  std::optional<int> max_n;
  app.add_option("--workers", cfg.workers, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--out", cfg.out_path, "write the report to this path");
  app.add_option("--max-n", max_n, "largest point count to enumerate")->check(CLI::PositiveNumber);
  app.add_flag("--force", cfg.limits.force, "enumerate above the cap");

  const auto with_pts = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("pts", cfg.input, ".pts input file")->required();
    return sub;
  };
  with_pts("validate", "check a .pts file for duplicates and collinear triples");
  with_pts("count", "number of plane graphs");
  with_pts("degrees", "exact expected degree vector");
  with_pts("triangulations", "enumerate triangulations with degree data");
  with_pts("charge-audit", "per-graph charges and family census");
  auto* verify = with_pts("verify", "check every applicable claim exhaustively");
  verify->add_option("--claims", cfg.claims, "comma-separated claim groups")->delimiter(',');
  auto* gen = app.add_subcommand("gen", "write a generated point set");
  gen->add_option("kind", cfg.gen_kind, "convex_chain | cap_with_apex | triangular_hull_random")->required();
  gen->add_option("n", cfg.gen_n, "number of points")->required();
  gen->add_option("--seed", cfg.seed, "seed for triangular_hull_random");
  auto* report = app.add_subcommand("construction-report", "exact counts vs. asymptotics for the constructions");
  report->add_option("n_max", cfg.n_max, "largest size")->required()->check(CLI::Range(4, kMaxSupportedPoints));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << " " << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (max_n) cfg.limits.max_n = *max_n;
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    const std::string& s = cfg.subcommand;
    if (s == "validate") return cmd_validate(cfg, out);
    if (s == "count") return cmd_count(cfg, out, err);
    if (s == "degrees") return cmd_degrees(cfg, out, err);
    if (s == "triangulations") return cmd_triangulations(cfg, out, err);
    if (s == "charge-audit") return cmd_charge_audit(cfg, out, err);
    if (s == "verify") return cmd_verify(cfg, out, err);
    if (s == "gen") return cmd_gen(cfg, out);
    if (s == "construction-report") return cmd_construction_report(cfg, out, err);
    err << "unknown subcommand '" << s << "'\n";
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace planegraph::cli
