#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planegraph/charging.hpp"
#include "planegraph/constructions.hpp"
#include "planegraph/dyadic.hpp"
#include "planegraph/enumerate.hpp"
#include "planegraph/report.hpp"
#include "planegraph/verify.hpp"

namespace py = pybind11;
using namespace planegraph;

namespace {

using Coords = std::vector<std::pair<std::int64_t, std::int64_t>>;

py::object to_py(const mpz_class& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::object to_py(const mpq_class& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

Coords coords(const PointSet& ps) {
  Coords out;
  for (const auto& p : ps) out.emplace_back(p.x, p.y);
  return out;
}

Universe universe(const Coords& xy, std::optional<int> max_n, bool force) {
  PointSet ps = PointSet::from_coordinates(xy);
  EnumerationLimits limits = EnumerationLimits::from_environment();
  if (max_n) limits.max_n = *max_n;
  limits.force = force;
  check_cap(ps.size(), limits);
  return Universe(std::move(ps));
}

RunOptions options(int workers, bool force) {
  RunOptions o;
  o.workers = workers;
  o.limits.force = force;
  return o;
}

py::dict degrees_dict(const DegreeExpectation& d) {
  py::dict out;
  out["pg"] = to_py(d.pg);
  py::list ving, vhat;
  for (int i = 0; i < d.n(); ++i) {
    ving.append(to_py(d.ving_counts[static_cast<std::size_t>(i)]));
    vhat.append(to_py(d.vhat(i)));
  }
  out["ving_counts"] = ving;
  out["vhat"] = vhat;
  out["total_edges"] = to_py(d.total_edges);
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict out;
  out["claim"] = r.claim_id;
  out["descriptor"] = r.descriptor;
  out["status"] = to_string(r.status);
  out["finding"] = r.finding;
  out["margin"] = r.margin ? to_py(*r.margin) : py::none();
  if (r.witness) {
    py::dict w;
    w["graph"] = r.witness->graph_hex;
    w["point"] = r.witness->point;
    w["observed"] = r.witness->observed;
    out["witness"] = w;
  } else {
    out["witness"] = py::none();
  }
  py::dict details;
  for (const auto& [k, v] : r.details) details[py::str(k)] = v;
  out["details"] = details;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact plane-graph enumeration on small planar point sets.";
  m.attr("__version__") = kToolVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def(
      "validate",
      [](const Coords& xy) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < xy.size(); ++i) pts.push_back({xy[i].first, xy[i].second, static_cast<int>(i)});
        const auto r = validate_general_position(pts);
        py::dict out;
        out["ok"] = r.ok();
        out["duplicates"] = r.duplicates;
        std::vector<std::tuple<int, int, int>> col;
        for (const auto& t : r.collinear) col.emplace_back(t.a, t.b, t.c);
        out["collinear"] = col;
        out["out_of_range"] = r.out_of_range;
        return out;
      },
      py::arg("points"), "General-position report for a list of (x, y) pairs.");

  m.def(
      "convex_hull", [](const Coords& xy) { return convex_hull(PointSet::from_coordinates(xy)); }, py::arg("points"));

  m.def(
      "count_plane_graphs",
      [](const Coords& xy, int workers, std::optional<int> max_n, bool force) {
        const Universe u = universe(xy, max_n, force);
        mpz_class pg;
        {
          py::gil_scoped_release release;
          pg = count_plane_graphs(u, options(workers, true));
        }
        return to_py(pg);
      },
      py::arg("points"), py::arg("workers") = 1, py::arg("max_n") = py::none(), py::arg("force") = false);

  m.def(
      "expected_degrees",
      [](const Coords& xy, int workers, std::optional<int> max_n, bool force) {
        const Universe u = universe(xy, max_n, force);
        DegreeExpectation d;
        {
          py::gil_scoped_release release;
          d = expected_degree_vector(u, options(workers, true));
        }
        return degrees_dict(d);
      },
      py::arg("points"), py::arg("workers") = 1, py::arg("max_n") = py::none(), py::arg("force") = false,
      "pg, per-degree ving counts and the exact expected degree vector (as Fractions).");

  m.def(
      "triangulations",
      [](const Coords& xy, std::optional<int> max_n, bool force) {
        const Universe u = universe(xy, max_n, force);
        py::list records;
        const auto stats = enumerate_triangulations(u, {}, {kMaxSupportedPoints, true});
        for (const auto& r : stats.records) {
          py::dict t;
          t["edges"] = PlaneGraph{r.edges, u.n()}.to_hex();
          t["v3"] = r.v3;
          t["v4"] = r.v4;
          t["hull_degree3"] = r.hull_degree3;
          records.append(t);
        }
        py::dict out;
        out["count"] = to_py(stats.count);
        out["records"] = records;
        return out;
      },
      py::arg("points"), py::arg("max_n") = py::none(), py::arg("force") = false);

  m.def(
      "charge_audit",
      [](const Coords& xy, std::optional<int> max_n, bool force) {
        const Universe u = universe(xy, max_n, force);
        const ChargeAudit a = charge_audit(u, false, {kMaxSupportedPoints, true});
        py::dict out;
        out["total_v0_charge"] = to_py(a.total_v0_charge.to_rational());
        out["sum_v0"] = to_py(a.degrees.ving_counts.empty() ? mpz_class(0) : a.degrees.ving_counts[0]);
        py::list census;
        for (const auto& r : a.census.rows) census.append(py::make_tuple(r.point, r.visibility, to_py(r.multiplicity)));
        out["family_census"] = census;
        return out;
      },
      py::arg("points"), py::arg("max_n") = py::none(), py::arg("force") = false);

  m.def(
      "verify",
      [](const Coords& xy, const std::vector<std::string>& claims, int workers, std::optional<int> max_n, bool force) {
        const Universe u = universe(xy, max_n, force);
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify_all(u, claims, options(workers, true));
        }
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("points"), py::arg("claims") = std::vector<std::string>{}, py::arg("workers") = 1,
      py::arg("max_n") = py::none(), py::arg("force") = false);

  m.def(
      "generate",
      [](const std::string& kind, int n, std::uint64_t seed) {
        return coords(generate({parse_construction_kind(kind), n, seed}));
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 0);

  m.def(
      "lp_charge_cap", [](int n) { return to_py(lp_charge_cap(n).value); }, py::arg("n"));

  m.def(
      "max_family_charge",
      [](int i) {
        const auto r = max_family_charge(i);
        return py::make_tuple(r.argmax, to_py(r.value));
      },
      py::arg("i"));

  m.def(
      "parse_pts", [](const std::string& text) { return coords(parse_pts(text)); }, py::arg("text"));
  m.def(
      "format_pts", [](const Coords& xy) { return format_pts(PointSet::from_coordinates(xy)); }, py::arg("points"));
}
