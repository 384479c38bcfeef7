// mvx: exact mixed volumes, mixed multiplicities, and sparse-system root
// bounds, cross-checked over independent computation routes.  All reports
// are JSON on standard output; exit code 0 = success, 1 = an invariant or
// route-agreement violation, 2 = malformed input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mixedvol/errors.hpp"
#include "mixedvol/groebner.hpp"
#include "mixedvol/instances.hpp"
#include "mixedvol/json_io.hpp"

using namespace mixedvol;

namespace {

struct CommonOpts {
  std::string input = "-";
  std::uint32_t prime = 32003;
  std::uint64_t seed = 0;
  long base = 0;
  bool pretty = false;
  bool no_timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
  if (needs_input) {
    cmd->add_option("--input", o.input, "input JSON file ('-' for stdin)");
  }
  cmd->add_option("--prime", o.prime, "coefficient field size (prime)");
  cmd->add_option("--seed", o.seed, "seed for general-element draws");
  cmd->add_option("--base", o.base, "override the finite-difference window start");
  cmd->add_flag("--pretty", o.pretty, "indent the JSON report");
  cmd->add_flag("--no-timings", o.no_timings, "omit timings for byte-stable output");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void emit(const Json& report, const CommonOpts& o) {
  std::cout << (o.pretty ? report.dump(2) : report.dump()) << "\n";
}

Json rat_to_json(const Rat& v) {
  if (v.get_den() == 1) return int_to_json(v.get_num());
  return Json(v.get_str());
}

MultiIndex parse_multi_index(const std::string& text) {
  MultiIndex out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multi-index entry: " + item);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty multi-index");
  return out;
}

FdOptions fd_options(const CommonOpts& o) {
  FdOptions f;
  f.base_override = o.base;
  return f;
}

int cmd_mv(const CommonOpts& o, const std::string& route) {
  PolytopeTuple t = tuple_from_json(parse_json_text(read_input(o.input)));
  Json report;
  report["command"] = "mv";
  report["dim"] = t.dim;
  report["route"] = route;
  report["prime"] = o.prime;
  report["seed"] = o.seed;

  Json routes;
  Json timings;
  std::vector<Rat> values;
  auto run = [&](const std::string& name, auto&& fn) {
    if (route != "all" && route != name) return;
    auto t0 = Clock::now();
    fn();
    timings[name + "_ms"] = ms_since(t0);
  };
  run("geometric", [&] {
    Rat v = mixed_volume_ie(t);
    routes["geometric"] = rat_to_json(v);
    values.push_back(v);
  });
  run("interp", [&] {
    Rat v = mixed_volume_interp(t);
    routes["interp"] = rat_to_json(v);
    values.push_back(v);
  });
  run("algebraic", [&] {
    MonomialConfiguration c = configuration_of_tuple(t);
    MultiIndex alpha(t.dim + 1, 1);
    alpha[0] = 0;
    FdComputation res = mixed_multiplicity_fd_info(c, alpha, fd_options(o));
    Json aj;
    aj["value"] = res.value;
    aj["base"] = res.base_used;
    routes["algebraic"] = std::move(aj);
    values.push_back(Rat(static_cast<long>(res.value)));
  });
  run("samuel", [&] {
    MonomialConfiguration c = configuration_of_tuple(t);
    MultiIndex alpha(t.dim + 1, 1);
    alpha[0] = 0;
    SamuelResult res = samuel_mixed_multiplicity(c, alpha, o.seed, o.prime);
    Json sj;
    sj["value"] = res.e;
    sj["dim"] = res.dim;
    sj["positive"] = res.positive;
    sj["seed_used"] = res.seed_used;
    sj["reseeds"] = res.reseeds;
    routes["samuel"] = std::move(sj);
    values.push_back(Rat(static_cast<long>(res.e)));
  });
  if (values.empty()) throw std::invalid_argument("unknown route: " + route);

  bool agree = true;
  for (const auto& v : values) {
    if (v != values[0]) agree = false;
  }
  report["routes"] = std::move(routes);
  report["agreement"] = agree;
  if (!o.no_timings) report["timings"] = std::move(timings);
  emit(report, o);
  return agree ? 0 : 1;
}

int cmd_mixedmult(const CommonOpts& o, const std::string& route, const std::string& alpha_text) {
  MonomialConfiguration c = configuration_from_json(parse_json_text(read_input(o.input)));
  MultiIndex alpha = parse_multi_index(alpha_text);
  {
    long total = 0;
    for (long a : alpha) total += a;
    if (alpha.size() != c.sets.size() || total != c.num_vars - 1) {
      throw std::invalid_argument("alpha must have one entry per set and weight vars - 1");
    }
  }
  Json report;
  report["command"] = "mixedmult";
  report["vars"] = c.num_vars;
  report["alpha"] = alpha;
  report["route"] = route;

  Json timings;
  bool agree = true;
  long long fd_value = 0, diag_value = 0;
  bool have_fd = false, have_diag = false;
  if (route == "fd" || route == "both") {
    auto t0 = Clock::now();
    FdComputation res = mixed_multiplicity_fd_info(c, alpha, fd_options(o));
    fd_value = res.value;
    timings["fd_ms"] = ms_since(t0);
    report["fd"] = fd_value;
    report["fd_base"] = res.base_used;
    have_fd = true;
  }
  if (route == "diag" || route == "both") {
    auto t0 = Clock::now();
    MixedMultiplicityVector mm = mixed_mults_via_diagonals(c, fd_options(o));
    timings["diag_ms"] = ms_since(t0);
    diag_value = mm.values.at(alpha);
    report["diag"] = diag_value;
    have_diag = true;
  }
  if (!have_fd && !have_diag) throw std::invalid_argument("unknown route: " + route);
  if (have_fd && have_diag) agree = (fd_value == diag_value);
  report["agreement"] = agree;

  DegreeLawReport law = verify_degree_law(c, fd_options(o));
  Json lj;
  lj["expected"] = law.expected;
  lj["observed"] = law.observed;
  lj["top_nonzero"] = law.top_nonzero;
  lj["higher_vanish"] = law.higher_vanish;
  report["hilbert_degree"] = std::move(lj);

  if (!o.no_timings) report["timings"] = std::move(timings);
  emit(report, o);
  return agree ? 0 : 1;
}

int cmd_hilbert(const CommonOpts& o, const std::string& u_text) {
  MonomialConfiguration c = configuration_from_json(parse_json_text(read_input(o.input)));
  MultiIndex u = parse_multi_index(u_text);
  Json report;
  report["command"] = "hilbert";
  report["vars"] = c.num_vars;
  report["u"] = u;
  auto t0 = Clock::now();
  report["value"] = hilbert_value(c, u);
  if (!o.no_timings) report["timings"] = Json{{"hilbert_ms", ms_since(t0)}};
  emit(report, o);
  return 0;
}

int cmd_samuel(const CommonOpts& o, const std::string& alpha_text) {
  MonomialConfiguration c = configuration_from_json(parse_json_text(read_input(o.input)));
  MultiIndex alpha = parse_multi_index(alpha_text);
  Json report;
  report["command"] = "samuel";
  report["vars"] = c.num_vars;
  report["alpha"] = alpha;
  report["prime"] = o.prime;
  auto t0 = Clock::now();
  SamuelResult res = samuel_mixed_multiplicity(c, alpha, o.seed, o.prime);
  report["dim"] = res.dim;
  report["e"] = res.e;
  report["positive"] = res.positive;
  report["seed"] = o.seed;
  report["seed_used"] = res.seed_used;
  report["reseeds"] = res.reseeds;
  if (!o.no_timings) report["timings"] = Json{{"samuel_ms", ms_since(t0)}};
  emit(report, o);
  return 0;
}

int cmd_bernstein(const CommonOpts& o, const std::string& q_text, int trials,
                  std::uint64_t budget) {
  LaurentSystem s = system_from_json(parse_json_text(read_input(o.input)));
  std::vector<std::uint32_t> qs;
  for (long q : parse_multi_index(q_text)) qs.push_back(static_cast<std::uint32_t>(q));

  Json report;
  report["command"] = "bernstein";
  report["vars"] = s.num_vars;
  report["prime"] = o.prime;
  report["seed"] = o.seed;
  report["budget"] = budget;
  auto t0 = Clock::now();
  int exit_code = 0;
  try {
    BernsteinReport rep = verify_bernstein(s, o.prime, qs, trials, o.seed);
    report["bound"] = rep.bound;
    Json fields = Json::array();
    for (const auto& chk : rep.field_checks) {
      Json fj;
      fj["q"] = chk.q;
      fj["distinct"] = chk.distinct;
      fj["finite"] = chk.finite;
      fj["within_bound"] = chk.within_bound;
      fields.push_back(std::move(fj));
    }
    report["field_checks"] = std::move(fields);
    report["given_finite"] = rep.given_finite;
    if (rep.given_finite) {
      report["multiplicity_count"] = rep.multiplicity_count;
      report["attained_given"] = rep.attained_given;
    }
    report["trials"] = rep.trials;
    report["attained_trials"] = rep.attained_trials;
    if (rep.trials > 0) {
      report["attainment_rate"] = static_cast<double>(rep.attained_trials) / rep.trials;
    }
  } catch (const BoundViolationError& e) {
    report["error"] = e.what();
    exit_code = 1;
  }
  if (!o.no_timings) report["timings"] = Json{{"bernstein_ms", ms_since(t0)}};
  emit(report, o);
  return exit_code;
}

int cmd_probe_af(const CommonOpts& o) {
  MonomialConfiguration c = configuration_from_json(parse_json_text(read_input(o.input)));
  Json report;
  report["command"] = "probe-af";
  report["vars"] = c.num_vars;
  auto t0 = Clock::now();
  ProbeAfReport rep = probe_af(c, fd_options(o));
  report["e"] = rep.e;
  report["e11"] = rep.e11;
  report["e22"] = rep.e22;
  report["lhs"] = rep.lhs;
  report["rhs"] = rep.rhs;
  report["comparison"] = rep.comparison == 0 ? "=" : (rep.comparison > 0 ? ">" : "<");
  report["hypothesis_ok"] = rep.hypothesis_ok;
  if (!o.no_timings) report["timings"] = Json{{"probe_ms", ms_since(t0)}};
  emit(report, o);
  return 0;
}

int cmd_crosscheck(const CommonOpts& o, int trials) {
  Json report;
  report["command"] = "crosscheck";
  report["trials"] = trials;
  report["seed"] = o.seed;
  report["prime"] = o.prime;
  auto t0 = Clock::now();
  CrossCheckResult res = run_crosscheck(trials, o.seed, o.prime);
  report["failures"] = res.failures;
  report["agreement"] = res.failures == 0;
  if (!o.no_timings) report["timings"] = Json{{"crosscheck_ms", ms_since(t0)}};
  emit(report, o);
  return res.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mixed volumes, mixed multiplicities, and root bounds"};
  app.require_subcommand(1);

  CommonOpts mv_o;
  std::string mv_route = "all";
  auto* mv = app.add_subcommand("mv", "mixed volume of a polytope tuple, cross-checked");
  add_common(mv, mv_o);
  mv->add_option("--route", mv_route, "geometric|interp|algebraic|samuel|all");

  CommonOpts mm_o;
  std::string mm_route = "both", mm_alpha;
  auto* mm = app.add_subcommand("mixedmult", "mixed multiplicity of a monomial configuration");
  add_common(mm, mm_o);
  mm->add_option("--route", mm_route, "fd|diag|both");
  mm->add_option("--alpha", mm_alpha, "multi-index a0,a1,...")->required();

  CommonOpts h_o;
  std::string h_u;
  auto* hb = app.add_subcommand("hilbert", "raw Hilbert function value H(u)");
  add_common(hb, h_o);
  hb->add_option("--alpha", h_u, "grading multi-index u0,u1,...")->required();

  CommonOpts sa_o;
  std::string sa_alpha;
  auto* sa = app.add_subcommand("samuel", "mixed multiplicity via general elements");
  add_common(sa, sa_o);
  sa->add_option("--alpha", sa_alpha, "multi-index a0,a1,...")->required();

  CommonOpts be_o;
  std::string be_q = "5,7";
  int be_trials = 10;
  std::uint64_t be_budget = 10'000'000;
  auto* be = app.add_subcommand("bernstein", "root bound report for a sparse system");
  add_common(be, be_o);
  be->add_option("--exhaustive-q", be_q, "comma-separated primes for exhaustive counts");
  be->add_option("--trials", be_trials, "random-coefficient redraws");
  be->add_option("--budget", be_budget, "exhaustive evaluation budget");

  CommonOpts pa_o;
  auto* pa = app.add_subcommand("probe-af", "report both sides of the square inequality probe");
  add_common(pa, pa_o);

  CommonOpts cc_o;
  int cc_trials = 20;
  auto* cc = app.add_subcommand("crosscheck", "randomized multi-route self-test");
  add_common(cc, cc_o, /*needs_input=*/false);
  cc->add_option("--trials", cc_trials, "number of random instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mv->parsed()) return cmd_mv(mv_o, mv_route);
    if (mm->parsed()) return cmd_mixedmult(mm_o, mm_route, mm_alpha);
    if (hb->parsed()) return cmd_hilbert(h_o, h_u);
    if (sa->parsed()) return cmd_samuel(sa_o, sa_alpha);
    if (be->parsed()) return cmd_bernstein(be_o, be_q, be_trials, be_budget);
    if (pa->parsed()) return cmd_probe_af(pa_o);
    if (cc->parsed()) return cmd_crosscheck(cc_o, cc_trials);
  } catch (const std::invalid_argument& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
