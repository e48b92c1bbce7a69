#include "planegraph/report.hpp"

#include <iomanip>
#include <sstream>

namespace planegraph {

Json rational_json(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  Json j;
  j["num"] = c.get_num().get_str();
  j["den"] = c.get_den().get_str();
  return j;
}

Json report_header(const Universe& u) {
  Json h;
  h["tool"] = kToolName;
  h["version"] = kToolVersion;
  h["input_fingerprint"] = fingerprint(u.points());
  h["n"] = u.n();
  h["hull_size"] = u.hull_size();
  h["segment_indexing"] = kSegmentIndexing;
  return h;
}

Json count_json(const Universe& u, const mpz_class& pg) {
  Json j;
  j["header"] = report_header(u);
  j["pg"] = pg.get_str();
  return j;
}

Json degrees_json(const Universe& u, const DegreeExpectation& d) {
  Json j;
  j["header"] = report_header(u);
  j["pg"] = d.pg.get_str();
  j["total_edges"] = d.total_edges.get_str();
  Json rows = Json::array();
  for (int i = 0; i < d.n(); ++i) {
    Json row;
    row["i"] = i;
    row["ving_count"] = d.ving_counts[static_cast<std::size_t>(i)].get_str();
    row["vhat"] = rational_json(d.vhat(i));
    rows.push_back(std::move(row));
  }
  j["degrees"] = std::move(rows);
  return j;
}

std::string degrees_csv(const DegreeExpectation& d) {
  std::ostringstream os;
  os << "i,ving_count,vhat_numerator,vhat_denominator\n";
  for (int i = 0; i < d.n(); ++i) {
    const mpq_class v = d.vhat(i);
    os << i << ',' << d.ving_counts[static_cast<std::size_t>(i)].get_str() << ',' << v.get_num().get_str() << ','
       << v.get_den().get_str() << '\n';
  }
  return os.str();
}

Json triangulations_json(const Universe& u, const TriangulationStats& stats) {
  Json j;
  j["header"] = report_header(u);
  j["count"] = stats.count.get_str();
  Json recs = Json::array();
  for (const auto& r : stats.records) {
    Json row;
    row["graph"] = PlaneGraph{r.edges, u.n()}.to_hex();
    row["v3"] = r.v3;
    row["v4"] = r.v4;
    row["hull_degree3"] = r.hull_degree3;
    row["degree_histogram"] = r.histogram;
    recs.push_back(std::move(row));
  }
  j["triangulations"] = std::move(recs);
  return j;
}

std::string triangulations_csv(const Universe& u, const TriangulationStats& stats) {
  std::ostringstream os;
  os << "graph,v3,v4,hull_degree3\n";
  for (const auto& r : stats.records)
    os << PlaneGraph{r.edges, u.n()}.to_hex() << ',' << r.v3 << ',' << r.v4 << ',' << r.hull_degree3 << '\n';
  return os.str();
}

Json charge_audit_json(const Universe& u, const ChargeAudit& audit) {
  Json j;
  j["header"] = report_header(u);
  j["pg"] = audit.degrees.pg.get_str();
  j["sum_v0"] = audit.degrees.ving_counts.empty() ? "0" : audit.degrees.ving_counts[0].get_str();
  j["total_v0_charge"] = {{"numerator", audit.total_v0_charge.numerator().get_str()},
                          {"exponent", audit.total_v0_charge.exponent()}};
  Json graphs = Json::array();
  for (const auto& [g, c] : audit.per_graph) {
    Json row;
    row["graph"] = PlaneGraph{g, u.n()}.to_hex();
    row["numerator"] = c.numerator().get_str();
    row["exponent"] = c.exponent();
    graphs.push_back(std::move(row));
  }
  j["graph_charges"] = std::move(graphs);
  Json census = Json::array();
  for (const auto& r : audit.census.rows)
    census.push_back({{"point", r.point}, {"visibility_j", r.visibility}, {"multiplicity", r.multiplicity.get_str()}});
  j["family_census"] = std::move(census);
  return j;
}

std::string family_census_csv(const FamilyCensus& census) {
  std::ostringstream os;
  os << "point,visibility_j,multiplicity\n";
  for (const auto& r : census.rows) os << r.point << ',' << r.visibility << ',' << r.multiplicity.get_str() << '\n';
  return os.str();
}

Json verification_json(const VerificationReport& r) {
  Json j;
  j["claim"] = r.claim_id;
  j["point_set"] = r.descriptor;
  j["status"] = to_string(r.status);
  if (r.finding) j["finding"] = true;
  if (r.margin) j["margin"] = rational_json(*r.margin);
  if (r.witness) {
    Json w;
    if (!r.witness->graph_hex.empty()) w["graph"] = r.witness->graph_hex;
    if (r.witness->point >= 0) w["point"] = r.witness->point;
    w["observed"] = r.witness->observed;
    j["witness"] = std::move(w);
  }
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = std::move(details);
  return j;
}

Json verification_document(const Universe* u, const std::vector<VerificationReport>& reports) {
  Json j;
  if (u) j["header"] = report_header(*u);
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(verification_json(r));
  j["reports"] = std::move(arr);
  return j;
}

namespace {

std::string fixed(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

std::string construction_report_csv(const std::vector<ConstructionRow>& rows) {
  std::ostringstream os;
  os << "m,pg_convex,fn_leading_term,ratio_exact_over_leading,growth,pg_cap_with_apex,vhat0_num,vhat0_den,"
        "vhat0_x23.31_over_n,vhat0_x23.314_over_n,vhat0_x23.32_over_n\n";
  for (const auto& r : rows) {
    os << r.m << ',' << r.pg_convex.get_str() << ',' << fixed(r.fn_approx) << ',' << fixed(r.fn_ratio) << ','
       << fixed(r.growth) << ',' << r.pg_cap_apex.get_str() << ',' << r.vhat0_cap_apex.get_num().get_str() << ','
       << r.vhat0_cap_apex.get_den().get_str() << ',' << fixed(r.trend_2331) << ',' << fixed(r.trend_23314) << ','
       << fixed(r.trend_2332) << '\n';
  }
  return os.str();
}

Json construction_report_json(const std::vector<ConstructionRow>& rows) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back({{"m", r.m},
                   {"pg_convex", r.pg_convex.get_str()},
                   {"fn_leading_term", r.fn_approx},
                   {"ratio_exact_over_leading", r.fn_ratio},
                   {"growth", r.growth},
                   {"pg_cap_with_apex", r.pg_cap_apex.get_str()},
                   {"vhat0_cap_with_apex", rational_json(r.vhat0_cap_apex)},
                   {"trend", {{"23.31", r.trend_2331}, {"23.314", r.trend_23314}, {"23.32", r.trend_2332}}}});
  }
  j["rows"] = std::move(arr);
  return j;
}

}  // namespace planegraph
