// Python bindings for the exact mixed-volume engine.  Conversions go
// through decimal strings so arbitrary-precision coordinates survive the
// boundary in both directions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixedvol/bernstein.hpp"
#include "mixedvol/groebner.hpp"
#include "mixedvol/hilbert.hpp"
#include "mixedvol/instances.hpp"
#include "mixedvol/lattice.hpp"

namespace py = pybind11;
using namespace mixedvol;

namespace {

Int int_in(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

py::object int_out(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object rat_out(const Rat& v) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(int_out(v.get_num()), int_out(v.get_den()));
}

std::vector<Point> points_in(const py::sequence& rows) {
  std::vector<Point> pts;
  for (const auto& row : rows) {
    Point p;
    for (const auto& c : py::cast<py::sequence>(row)) p.push_back(int_in(c));
    pts.push_back(std::move(p));
  }
  return pts;
}

py::list points_out(const std::vector<Point>& pts) {
  py::list out;
  for (const auto& p : pts) {
    py::list row;
    for (const auto& c : p) row.append(int_out(c));
    out.append(std::move(row));
  }
  return out;
}

PolytopeTuple tuple_in(int dim, const py::sequence& polys) {
  PolytopeTuple t;
  t.dim = dim;
  for (const auto& rows : polys) {
    t.polytopes.push_back(LatticePolytope::from_points(dim, points_in(py::cast<py::sequence>(rows))));
  }
  return t;
}

// sets are the J_i as lists of exponent vectors; the unit-vector set is
// prepended automatically
MonomialConfiguration config_in(int num_vars, const py::sequence& sets) {
  std::vector<MonomialSet> js;
  for (const auto& exps : sets) {
    std::vector<Expo> rows;
    for (const auto& row : py::cast<py::sequence>(exps)) {
      Expo e;
      for (const auto& c : py::cast<py::sequence>(row)) e.push_back(py::cast<long>(c));
      rows.push_back(std::move(e));
    }
    js.push_back(MonomialSet(num_vars, std::move(rows)));
  }
  return MonomialConfiguration::with_default_m0(num_vars, std::move(js));
}

LaurentSystem system_in(int num_vars, const py::sequence& polys) {
  std::vector<LaurentPoly> ps;
  for (const auto& terms : polys) {
    std::map<std::vector<long>, Int> t;
    for (const auto& term : py::cast<py::sequence>(terms)) {
      auto pair = py::cast<py::sequence>(term);
      std::vector<long> e;
      for (const auto& c : py::cast<py::sequence>(pair[1])) e.push_back(py::cast<long>(c));
      t[std::move(e)] += int_in(pair[0]);
    }
    ps.push_back(LaurentPoly(num_vars, std::move(t)));
  }
  return LaurentSystem(num_vars, std::move(ps));
}

}  // namespace

PYBIND11_MODULE(_mixedvol, m) {
  m.doc() = "exact mixed volumes, mixed multiplicities, and sparse-system root bounds";

  m.def(
      "convex_hull",
      [](int dim, const py::sequence& pts) {
        return points_out(LatticePolytope::from_points(dim, points_in(pts)).vertices);
      },
      py::arg("dim"), py::arg("points"),
      "vertices of the convex hull of integer points");

  m.def(
      "minkowski_sum",
      [](int dim, const py::sequence& a, const py::sequence& b) {
        auto p = LatticePolytope::from_points(dim, points_in(a));
        auto q = LatticePolytope::from_points(dim, points_in(b));
        return points_out(minkowski_sum(p, q).vertices);
      },
      py::arg("dim"), py::arg("p"), py::arg("q"));

  m.def(
      "euclidean_volume",
      [](int dim, const py::sequence& pts) {
        return rat_out(euclidean_volume(LatticePolytope::from_points(dim, points_in(pts))));
      },
      py::arg("dim"), py::arg("points"), "exact volume as a Fraction");

  m.def(
      "lattice_normalized_volume",
      [](int dim, const py::sequence& pts) {
        return int_out(lattice_normalized_volume(dim, points_in(pts)));
      },
      py::arg("dim"), py::arg("points"));

  m.def(
      "mixed_volume_ie",
      [](int dim, const py::sequence& polys) { return rat_out(mixed_volume_ie(tuple_in(dim, polys))); },
      py::arg("dim"), py::arg("polytopes"),
      "mixed volume by the alternating sum over partial Minkowski sums");

  m.def(
      "mixed_volume_interp",
      [](int dim, const py::sequence& polys) {
        return rat_out(mixed_volume_interp(tuple_in(dim, polys)));
      },
      py::arg("dim"), py::arg("polytopes"),
      "mixed volume by exact interpolation of the Minkowski polynomial");

  m.def(
      "mixed_volume",
      [](int dim, const py::sequence& polys) { return int_out(mixed_volume(tuple_in(dim, polys))); },
      py::arg("dim"), py::arg("polytopes"));

  m.def(
      "mv_via_algebra",
      [](int dim, const py::sequence& polys) { return mv_via_algebra(tuple_in(dim, polys)); },
      py::arg("dim"), py::arg("polytopes"),
      "mixed volume as the top mixed multiplicity of the homogenized configuration");

  m.def(
      "sumset_power",
      [](const std::vector<Expo>& pts, long h) { return sumset_power(pts, h); },
      py::arg("points"), py::arg("h"), "all sums of h points with repetition");

  m.def(
      "hilbert_value",
      [](int num_vars, const py::sequence& sets, const MultiIndex& u) {
        return hilbert_value(config_in(num_vars, sets), u);
      },
      py::arg("num_vars"), py::arg("sets"), py::arg("u"),
      "multigraded Hilbert function of the configuration (unit set prepended)");

  m.def(
      "mixed_multiplicity_fd",
      [](int num_vars, const py::sequence& sets, const MultiIndex& alpha, long base) {
        FdOptions o;
        o.base_override = base;
        return mixed_multiplicity_fd(config_in(num_vars, sets), alpha, o);
      },
      py::arg("num_vars"), py::arg("sets"), py::arg("alpha"), py::arg("base") = 0);

  m.def(
      "diagonal_multiplicity",
      [](int num_vars, const py::sequence& sets, const MultiIndex& lam) {
        return diagonal_multiplicity(config_in(num_vars, sets), lam);
      },
      py::arg("num_vars"), py::arg("sets"), py::arg("lam"));

  m.def(
      "mixed_mults_via_diagonals",
      [](int num_vars, const py::sequence& sets) {
        auto mm = mixed_mults_via_diagonals(config_in(num_vars, sets));
        py::dict out;
        for (const auto& [alpha, v] : mm.values) out[py::tuple(py::cast(alpha))] = v;
        return out;
      },
      py::arg("num_vars"), py::arg("sets"));

  m.def(
      "samuel_mixed_multiplicity",
      [](int num_vars, const py::sequence& sets, const MultiIndex& alpha, std::uint64_t seed,
         std::uint32_t prime) {
        auto res = samuel_mixed_multiplicity(config_in(num_vars, sets), alpha, seed, prime);
        py::dict out;
        out["dim"] = res.dim;
        out["e"] = res.e;
        out["positive"] = res.positive;
        out["seed_used"] = res.seed_used;
        out["reseeds"] = res.reseeds;
        return out;
      },
      py::arg("num_vars"), py::arg("sets"), py::arg("alpha"), py::arg("seed") = 0,
      py::arg("prime") = 32003);

  m.def(
      "teissier_check",
      [](int num_vars, const py::sequence& sets, const MultiIndex& alpha, std::uint64_t seed,
         std::uint32_t prime) {
        auto res = teissier_check(config_in(num_vars, sets), alpha, seed, prime);
        return py::make_tuple(res.lhs, res.rhs);
      },
      py::arg("num_vars"), py::arg("sets"), py::arg("alpha"), py::arg("seed") = 0,
      py::arg("prime") = 32003);

  m.def(
      "probe_af",
      [](int num_vars, const py::sequence& sets) {
        auto rep = probe_af(config_in(num_vars, sets));
        py::dict out;
        out["e"] = rep.e;
        out["e11"] = rep.e11;
        out["e22"] = rep.e22;
        out["lhs"] = rep.lhs;
        out["rhs"] = rep.rhs;
        out["comparison"] = rep.comparison;
        out["hypothesis_ok"] = rep.hypothesis_ok;
        return out;
      },
      py::arg("num_vars"), py::arg("sets"));

  m.def(
      "newton_polytope",
      [](int num_vars, const py::sequence& terms) {
        LaurentSystem s = system_in(num_vars, py::make_tuple(terms));
        return points_out(newton_polytope(s.polys[0]).vertices);
      },
      py::arg("num_vars"), py::arg("terms"),
      "terms are (coeff, exponent-vector) pairs; returns the hull vertices");

  m.def(
      "bernstein_bound",
      [](int num_vars, const py::sequence& polys) {
        return int_out(bernstein_bound(system_in(num_vars, polys)));
      },
      py::arg("num_vars"), py::arg("polys"));

  m.def(
      "count_torus_points_exhaustive",
      [](int num_vars, const py::sequence& polys, std::uint32_t q, std::uint64_t budget) {
        return count_torus_points_exhaustive(system_in(num_vars, polys), q, budget);
      },
      py::arg("num_vars"), py::arg("polys"), py::arg("q"), py::arg("budget") = 10'000'000);

  m.def(
      "count_with_multiplicity",
      [](int num_vars, const py::sequence& polys, std::uint32_t p, py::object seed) {
        std::optional<std::uint64_t> s;
        if (!seed.is_none()) s = py::cast<std::uint64_t>(seed);
        return count_with_multiplicity(system_in(num_vars, polys), p, s);
      },
      py::arg("num_vars"), py::arg("polys"), py::arg("p"), py::arg("seed") = py::none());

  m.def(
      "verify_bernstein",
      [](int num_vars, const py::sequence& polys, std::uint32_t p,
         const std::vector<std::uint32_t>& qs, int trials, std::uint64_t seed) {
        auto rep = verify_bernstein(system_in(num_vars, polys), p, qs, trials, seed);
        py::dict out;
        out["bound"] = rep.bound;
        py::list checks;
        for (const auto& chk : rep.field_checks) {
          py::dict cj;
          cj["q"] = chk.q;
          cj["distinct"] = chk.distinct;
          cj["finite"] = chk.finite;
          cj["within_bound"] = chk.within_bound;
          checks.append(std::move(cj));
        }
        out["field_checks"] = std::move(checks);
        out["given_finite"] = rep.given_finite;
        out["multiplicity_count"] = rep.multiplicity_count;
        out["attained_given"] = rep.attained_given;
        out["trials"] = rep.trials;
        out["attained_trials"] = rep.attained_trials;
        return out;
      },
      py::arg("num_vars"), py::arg("polys"), py::arg("p"), py::arg("qs"), py::arg("trials") = 10,
      py::arg("seed") = 0);

  m.def(
      "crosscheck",
      [](int trials, std::uint64_t seed, std::uint32_t prime) {
        auto res = run_crosscheck(trials, seed, prime);
        return py::make_tuple(res.trials, res.failures);
      },
      py::arg("trials") = 10, py::arg("seed") = 0, py::arg("prime") = 32003,
      "randomized multi-route self-test; returns (trials, failures)");
}
