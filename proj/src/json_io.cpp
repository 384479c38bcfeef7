#include "mixedvol/json_io.hpp"

#include "mixedvol/errors.hpp"

namespace mixedvol {

namespace {

constexpr long long kSafeMax = 9007199254740991LL;  // 2^53 - 1

[[noreturn]] void bad_input(const std::string& what) {
  throw std::invalid_argument("malformed input: " + what);
}

}  // namespace

Int int_from_json(const Json& j) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > 9223372036854775807ull) {
    return Int(std::to_string(j.get<std::uint64_t>()));
  }
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad_input("not a decimal integer: " + j.get<std::string>());
    }
  }
  bad_input("expected an integer (number or decimal string)");
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    long s = v.get_si();
    if (s <= kSafeMax && s >= -kSafeMax) return Json(s);
  }
  return Json(v.get_str());
}

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points")) {
    bad_input("polytope needs \"dim\" and \"points\"");
  }
  if (!j["dim"].is_number_integer()) bad_input("\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  if (!j["points"].is_array() || j["points"].empty()) bad_input("\"points\" must be a non-empty array");
  std::vector<Point> pts;
  for (const auto& row : j["points"]) {
    if (!row.is_array()) bad_input("each point must be an array");
    Point p;
    for (const auto& c : row) p.push_back(int_from_json(c));
    pts.push_back(std::move(p));
  }
  return LatticePolytope::from_points(dim, std::move(pts));
}

Json polytope_to_json(const LatticePolytope& p) {
  Json j;
  j["dim"] = p.dim;
  Json pts = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(int_to_json(c));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j;
}

PolytopeTuple tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("polytopes")) {
    bad_input("tuple needs \"dim\" and \"polytopes\"");
  }
  if (!j["dim"].is_number_integer()) bad_input("\"dim\" must be an integer");
  PolytopeTuple t;
  t.dim = j["dim"].get<int>();
  if (!j["polytopes"].is_array()) bad_input("\"polytopes\" must be an array");
  for (const auto& pj : j["polytopes"]) t.polytopes.push_back(polytope_from_json(pj));
  return t;
}

Json tuple_to_json(const PolytopeTuple& t) {
  Json j;
  j["dim"] = t.dim;
  Json ps = Json::array();
  for (const auto& p : t.polytopes) ps.push_back(polytope_to_json(p));
  j["polytopes"] = std::move(ps);
  return j;
}

MonomialConfiguration configuration_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("sets")) {
    bad_input("configuration needs \"vars\" and \"sets\"");
  }
  if (!j["vars"].is_number_integer()) bad_input("\"vars\" must be an integer");
  int nv = j["vars"].get<int>();
  if (!j["sets"].is_array() || j["sets"].empty()) bad_input("\"sets\" must be a non-empty array");
  std::vector<MonomialSet> sets;
  for (const auto& sj : j["sets"]) {
    if (!sj.is_object() || !sj.contains("exponents")) bad_input("each set needs \"exponents\"");
    std::vector<Expo> exps;
    for (const auto& row : sj["exponents"]) {
      if (!row.is_array()) bad_input("each exponent must be an array");
      Expo e;
      for (const auto& c : row) {
        Int v = int_from_json(c);
        if (!v.fits_slong_p()) bad_input("exponent out of range");
        e.push_back(v.get_si());
      }
      exps.push_back(std::move(e));
    }
    MonomialSet m(nv, std::move(exps));
    if (sj.contains("degree")) {
      Int d = int_from_json(sj["degree"]);
      if (d != m.degree) bad_input("declared degree disagrees with the exponents");
    }
    sets.push_back(std::move(m));
  }
  // set 0 may be omitted; it is recognized by being exactly the unit vectors
  const MonomialSet units = MonomialSet::units(nv);
  if (sets[0].exponents == units.exponents) {
    return MonomialConfiguration(nv, std::move(sets));
  }
  return MonomialConfiguration::with_default_m0(nv, std::move(sets));
}

Json configuration_to_json(const MonomialConfiguration& c) {
  Json j;
  j["vars"] = c.num_vars;
  Json sets = Json::array();
  for (const auto& m : c.sets) {
    Json sj;
    sj["degree"] = m.degree;
    Json exps = Json::array();
    for (const auto& e : m.exponents) {
      Json row = Json::array();
      for (long x : e) row.push_back(x);
      exps.push_back(std::move(row));
    }
    sj["exponents"] = std::move(exps);
    sets.push_back(std::move(sj));
  }
  j["sets"] = std::move(sets);
  return j;
}

LaurentSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("polys")) {
    bad_input("system needs \"vars\" and \"polys\"");
  }
  if (!j["vars"].is_number_integer()) bad_input("\"vars\" must be an integer");
  int nv = j["vars"].get<int>();
  if (!j["polys"].is_array()) bad_input("\"polys\" must be an array");
  std::vector<LaurentPoly> polys;
  for (const auto& pj : j["polys"]) {
    if (!pj.is_object() || !pj.contains("terms")) bad_input("each poly needs \"terms\"");
    std::map<std::vector<long>, Int> terms;
    for (const auto& tj : pj["terms"]) {
      if (!tj.is_object() || !tj.contains("coeff") || !tj.contains("exp")) {
        bad_input("each term needs \"coeff\" and \"exp\"");
      }
      std::vector<long> e;
      for (const auto& c : tj["exp"]) {
        Int v = int_from_json(c);
        if (!v.fits_slong_p()) bad_input("exponent out of range");
        e.push_back(v.get_si());
      }
      terms[std::move(e)] += int_from_json(tj["coeff"]);
    }
    polys.push_back(LaurentPoly(nv, std::move(terms)));
  }
  return LaurentSystem(nv, std::move(polys));
}

Json system_to_json(const LaurentSystem& s) {
  Json j;
  j["vars"] = s.num_vars;
  Json ps = Json::array();
  for (const auto& f : s.polys) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms) {
      Json tj;
      tj["coeff"] = int_to_json(c);
      Json row = Json::array();
      for (long x : e) row.push_back(x);
      tj["exp"] = std::move(row);
      terms.push_back(std::move(tj));
    }
    Json pj;
    pj["terms"] = std::move(terms);
    ps.push_back(std::move(pj));
  }
  j["polys"] = std::move(ps);
  return j;
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad_input("invalid JSON");
  return j;
}

}  // namespace mixedvol
