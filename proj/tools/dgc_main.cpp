// Command-line front end.  Exit codes: 0 all checks pass, 1 a check failed
// or a computation was rejected, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dgc/corpus.hpp"
#include "dgc/planecount.hpp"
#include "dgc/report.hpp"

namespace {

using namespace dgc;

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& w) : std::runtime_error(w) {}
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  for (const std::string& tok : split(s, ',')) {
    try {
      out.push_back(Int(tok));
    } catch (const std::exception&) {
      throw UsageError("not an integer: " + tok);
    }
  }
  return out;
}

IntPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  try {
    return poly_parse(text, vars);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad polynomial: ") + e.what());
  }
}

void emit(bool json_mode, const Json& j, const std::string& human) {
  if (json_mode)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

// Shared options for the subcommands that take one polynomial.
struct PolyArgs {
  std::string poly;
  std::string vars = "x,y";
  bool json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-f,--poly", poly, "polynomial, e.g. \"x^2 + y^2 - 25\"")
        ->required();
    cmd->add_option("--vars", vars, "comma-separated variable names");
    cmd->add_flag("--json", json, "machine-readable output");
  }

  std::vector<std::string> var_list() const {
    auto v = split(vars, ',');
    if (v.empty()) throw UsageError("empty variable list");
    return v;
  }
};

int run_count(const PolyArgs& pa, const std::string& bound, bool projective,
              bool points) {
  auto vars = pa.var_list();
  IntPoly f = parse_poly(pa.poly, vars);
  Int b(bound);
  CountResult res = projective ? enumerate_projective(f, b, points)
                               : enumerate_affine(f, b, points);
  std::ostringstream os;
  os << (projective ? "projective" : "affine") << " count, height <= " << b
     << ": " << res.count << "\n";
  if (points && res.affine_points)
    for (const auto& p : *res.affine_points) {
      os << " ";
      for (const Int& c : p.coords) os << " " << c;
      os << "\n";
    }
  if (points && res.proj_points)
    for (const auto& p : *res.proj_points) {
      os << " ";
      for (const Int& c : p.coords) os << " " << c;
      os << "\n";
    }
  emit(pa.json, report_json(res, vars, f), os.str());
  return 0;
}

int run_auxpoly(const PolyArgs& pa, const std::string& bound, bool projective) {
  auto vars = pa.var_list();
  IntPoly f = parse_poly(pa.poly, vars);
  AuxCertificate cert = aux_polynomial(
      f, Int(bound), projective ? CountMode::projective : CountMode::affine);
  bool ok = bezout_check(cert);
  std::ostringstream os;
  os << "M = " << cert.M << ", points = " << cert.s_points
     << ", bezout bound = " << cert.bezout_bound << (ok ? " (pass)" : " (FAIL)")
     << "\n"
     << "g = " << poly_print(cert.g, vars) << "\n";
  emit(pa.json, report_json(cert, vars), os.str());
  return ok ? 0 : 1;
}

int run_badness(const PolyArgs& pa, long long scan_limit) {
  auto vars = pa.var_list();
  IntPoly f = parse_poly(pa.poly, vars);
  BadnessReport rep = bad_primes(f, scan_limit);
  std::ostringstream os;
  os << "absolutely irreducible: " << (rep.abs_irreducible ? "yes" : "no")
     << "\nbad primes in (" << rep.threshold << ", " << rep.scan_limit
     << "]:";
  for (long long p : rep.bad_primes) os << " " << p;
  os << "\nbadness = " << rep.badness << "\n";
  emit(pa.json, report_json(rep, vars), os.str());
  return 0;
}

int run_witness(int d, int n, bool json_mode) {
  WitnessCurve w = build_witness(d, n);
  Json j;
  j["schema"] = 1;
  j["kind"] = "witness";
  j["curve"] = report_json(w);
  std::ostringstream os;
  os << "f = " << poly_print(w.f, default_vars(n)) << "\nB = " << w.B
     << ", claimed count = " << w.claimed_count << "\n";
  bool pass = true;
  if (n == 2) {
    ProjectiveWitnessReport pr = verify_projective_lower_bound(w);
    j["projective"] = report_json(pr);
    os << "projective: count = " << pr.count
       << (pr.pass ? " (pass)" : " (FAIL)") << "\n";
    pass = pass && pr.pass;
    if (d >= 3) {
      AffineWitnessReport ar = verify_affine_lower_bound(w);
      j["affine"] = report_json(ar);
      os << "affine: count = " << ar.count << (ar.pass ? " (pass)" : " (FAIL)")
         << "\n";
      pass = pass && ar.pass;
    } else {
      j["affine"] = nullptr;
    }
  } else {
    j["projective"] = nullptr;
    j["affine"] = nullptr;
  }
  j["pass"] = pass;
  emit(json_mode, j, os.str());
  return pass ? 0 : 1;
}

// Curve files: first nonblank line lists the variables, each following
// nonblank line is one generator.
std::pair<std::vector<std::string>, std::vector<IntPoly>> read_curve_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  if (lines.size() < 2) throw UsageError("curve file needs variables and generators");
  auto vars = split(lines[0], ',');
  std::vector<IntPoly> gens;
  for (std::size_t i = 1; i < lines.size(); ++i)
    gens.push_back(parse_poly(lines[i], vars));
  return {vars, gens};
}

Int eval_plane_image(const IntPoly& image, const ProjPoint& p, int dropped) {
  std::vector<Int> coords;
  for (int i = 0; i < (int)p.coords.size(); ++i)
    if (i != dropped) coords.push_back(p.coords[i]);
  return image.eval(coords);
}

int run_project(const std::string& curve_path, int d, bool affine,
                const std::string& bound, const std::string& cap,
                bool json_mode) {
  auto [vars, gens] = read_curve_file(curve_path);
  if (gens.size() != 2) throw UsageError("expected exactly two generators");
  Int cap_i = cap.empty() ? Int(0) : Int(cap);
  if (affine) {
    if (vars.size() != 3) throw UsageError("affine mode needs three variables");
    if (bound.empty()) throw UsageError("affine mode needs --bound");
    AffineReduction red = affine_reduce_curve(gens, d, Int(bound), cap_i);
    std::ostringstream os;
    os << "plane curve: " << poly_print(red.plane_curve, default_vars(2))
       << "\ncounts: space " << red.count_space << ", plane "
       << red.count_plane << " + d^2 = "
       << red.count_plane + red.collision_allowance
       << (red.relation_holds ? " (pass)" : " (FAIL)") << "\n";
    emit(json_mode, report_json(red), os.str());
    return red.relation_holds ? 0 : 1;
  }
  if (vars.size() != 4) throw UsageError("projective mode needs four variables");
  ProjectionResult res = find_projection_center(gens, d, cap_i);
  Json j = report_json(res);
  std::ostringstream os;
  os << "center height " << res.center_height << ", image "
     << poly_print(res.image, default_vars(3)) << "\n";
  bool pass = true;
  if (!bound.empty()) {
    Int b(bound);
    CountResult space = enumerate_projective_system(gens, b, true);
    Int inflated = res.setup.inflation * b;
    if (inflated > 1000000000) throw UsageError("inflated height bound out of range");
    Int plane_count =
        plane_curve_counts(res.image, {inflated.convert_to<long long>()})[0];
    bool audits = true;
    if (space.proj_points)
      for (const auto& p : *space.proj_points) {
        ProjectedPoint img = project_point(res.setup, p);
        if (eval_plane_image(res.image, img.image, res.dropped_var) != 0)
          audits = false;
      }
    bool relation =
        space.count <= plane_count + Int(res.degree) * res.degree;
    pass = audits && relation;
    j["audit"] = {{"bound", b.str()},
                  {"count_space", space.count.str()},
                  {"count_plane", plane_count.str()},
                  {"inflated_bound", inflated.str()},
                  {"points_on_image", audits},
                  {"relation_holds", relation}};
    os << "counts: space " << space.count << " <= plane " << plane_count
       << " + d^2" << (pass ? " (pass)" : " (FAIL)") << "\n";
  }
  emit(json_mode, j, os.str());
  return pass ? 0 : 1;
}

int run_padic(int instances, std::uint64_t seed, std::int64_t p_pin, int s_pin,
              bool json_mode) {
  static const std::int64_t primes[] = {5,  7,  11, 13, 17, 19, 23, 29, 31,
                                        37, 41, 43, 47, 53, 59, 61, 67, 71,
                                        73, 79, 83, 89, 97};
  if (instances < 1) throw UsageError("need at least one instance");
  Rng rng(seed);
  Json results = Json::array();
  std::ostringstream os;
  bool pass = true;
  for (int i = 0; i < instances; ++i) {
    std::int64_t p = p_pin ? p_pin : primes[rng.uniform(0, 22)];
    int s = s_pin ? s_pin : (int)rng.uniform(2, 4);
    DeterminantInstance inst = random_determinant_instance(rng, p, s);
    PadicCheckResult res = verify_padic_divisibility(inst);
    pass = pass && res.pass;
    results.push_back(report_json(inst, res));
    os << "instance " << i << ": p = " << p << ", s = " << s << ", ";
    if (res.det_zero)
      os << "det = 0";
    else
      os << "v_p = " << res.vp << " >= A(s) = " << res.a_s;
    os << (res.pass ? " (pass)" : " (FAIL)") << "\n";
  }
  Json j;
  j["schema"] = 1;
  j["kind"] = "padic-suite";
  j["seed"] = seed;
  j["results"] = results;
  j["pass"] = pass;
  emit(json_mode, j, os.str());
  return pass ? 0 : 1;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("expected key = value: " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

long long config_num(const std::map<std::string, std::string>& kv,
                     const std::string& key, long long fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw UsageError("bad number for " + key);
  }
}

RegressionExpectation read_expect(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad expectation file: ") + e.what());
  }
  RegressionExpectation ex;
  if (j.contains("argmax")) {
    ex.argmax = j["argmax"].get<int>();
    ex.argmax_degree = j["argmax_degree"].get<int>();
    ex.argmax_b = Int(j["argmax_b"].get<std::string>());
    ex.argmax_count = Int(j["argmax_count"].get<std::string>());
  }
  if (j.contains("counts"))
    for (const auto& c : j["counts"])
      ex.counts.push_back(Int(c.get<std::string>()));
  if (j.contains("fitted_c")) {
    std::string s = j["fitted_c"].get<std::string>();
    std::size_t slash = s.find('/');
    if (slash == std::string::npos)
      ex.fitted_c = Rat(Int(s));
    else
      ex.fitted_c = Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }
  return ex;
}

int run_experiment(const std::string& config_path, const std::string& expect_path,
                   bool json_mode, bool csv_mode) {
  auto kv = read_config(config_path);
  auto it = kv.find("experiment");
  if (it == kv.end()) throw UsageError("config needs experiment = ...");
  std::string which = it->second;
  auto bit = kv.find("bounds");
  if (bit == kv.end()) throw UsageError("config needs bounds = ...");
  std::vector<Int> bounds = parse_int_list(bit->second);

  ExperimentReport rep;
  std::uint64_t seed = (std::uint64_t)config_num(kv, "seed", 0);
  if (which == "surface-linear") {
    auto fit = kv.find("f");
    if (fit == kv.end()) throw UsageError("surface-linear needs f = ...");
    IntPoly f = parse_poly(fit->second, default_vars(3));
    rep = experiment_surface_linear(f, bounds);
  } else if (which == "curve-bound" || which == "affine-curve-bound") {
    bool projective = which == "curve-bound";
    CorpusSpec spec;
    spec.dmin = (int)config_num(kv, "dmin", 2);
    spec.dmax = (int)config_num(kv, "dmax", 4);
    spec.coeff_bound = config_num(kv, "coeff", 10);
    spec.nvars = projective ? 3 : 2;
    spec.homogeneous = projective;
    spec.count = (int)config_num(kv, "count", 10);
    spec.seed = seed;
    spec.attempt_cap = config_num(kv, "attempt_cap", 200000);
    spec.require_primitive = config_num(kv, "primitive", 1) != 0;
    std::string filter = kv.count("filter") ? kv.at("filter")
                         : (projective ? std::string("irreducible")
                                       : std::string("any"));
    if (filter == "any")
      spec.irreducibility = IrrFilter::any;
    else if (filter == "irreducible")
      spec.irreducibility = IrrFilter::absolutely_irreducible;
    else if (filter == "reducible")
      spec.irreducibility = IrrFilter::reducible;
    else
      throw UsageError("unknown filter " + filter);
    std::vector<IntPoly> corpus = generate_corpus(spec);
    int wmin = (int)config_num(kv, "witness_dmin", 0);
    int wmax = (int)config_num(kv, "witness_dmax", wmin ? wmin : 0);
    for (int d = wmin; wmin && d <= wmax; ++d) {
      IntPoly w = build_witness(d, 2).f;
      corpus.push_back(projective ? w.homogenize() : w);
    }
    rep = projective ? experiment_curve_bound(corpus, bounds)
                     : experiment_affine_curve_bound(corpus, bounds);
    rep.seed = seed;
  } else {
    throw UsageError("unknown experiment " + which);
  }

  if (!expect_path.empty()) check_regression(rep, read_expect(expect_path));

  if (csv_mode) {
    std::cout << experiment_csv(rep);
  } else {
    std::ostringstream os;
    os << rep.experiment << ": " << rep.records.size() << " records, max ratio "
       << rep.max_ratio << " at record " << rep.argmax << "\n";
    for (const auto& r : rep.records)
      os << "  [" << r.index << "] d = " << r.degree << ", B = " << r.b
         << ", count = " << r.count << (r.ok ? "" : "  FAIL: " + r.note)
         << "\n";
    if (rep.fitted_c != 0) os << "fitted c = " << rat_string(rep.fitted_c) << "\n";
    if (rep.regression_checked)
      os << "regression: "
         << (rep.regression_pass ? "pass" : "FAIL " + rep.regression_note)
         << "\n";
    emit(json_mode, report_json(rep), os.str());
  }
  bool pass = rep.all_ok && (!rep.regression_checked || rep.regression_pass);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact point counting on curves of bounded height"};
  app.require_subcommand(1);

  PolyArgs count_args, aux_args, bad_args;
  std::string count_bound, aux_bound;
  bool count_projective = false, count_points = false, aux_projective = false;
  auto* cmd_count = app.add_subcommand("count", "enumerate points of height <= B");
  count_args.attach(cmd_count);
  cmd_count->add_option("-B,--bound", count_bound, "height bound")->required();
  cmd_count->add_flag("--projective", count_projective, "projective mode");
  cmd_count->add_flag("--points", count_points, "list the points");

  auto* cmd_aux = app.add_subcommand("auxpoly", "auxiliary polynomial certificate");
  aux_args.attach(cmd_aux);
  cmd_aux->add_option("-B,--bound", aux_bound, "height bound")->required();
  cmd_aux->add_flag("--projective", aux_projective, "projective mode");

  long long scan_limit = 100000;
  auto* cmd_bad = app.add_subcommand("badness", "bad primes of a plane curve");
  bad_args.attach(cmd_bad);
  cmd_bad->add_option("--scan-limit", scan_limit, "candidate factor bound");

  int wit_d = 0, wit_n = 2;
  bool wit_json = false;
  auto* cmd_wit = app.add_subcommand("witness", "lower-bound witness curve");
  cmd_wit->add_option("-d,--degree", wit_d, "curve degree")->required();
  cmd_wit->add_option("-n,--nvars", wit_n, "affine dimension");
  cmd_wit->add_flag("--json", wit_json, "machine-readable output");

  std::string proj_curve, proj_bound, proj_cap;
  int proj_d = 0;
  bool proj_affine = false, proj_json = false;
  auto* cmd_proj = app.add_subcommand("project", "project a space curve to a plane curve");
  cmd_proj->add_option("--curve", proj_curve, "curve file")->required();
  cmd_proj->add_option("-d,--degree", proj_d, "curve degree")->required();
  cmd_proj->add_flag("--affine", proj_affine, "affine direction projection");
  cmd_proj->add_option("-B,--bound", proj_bound, "verify counts up to this height");
  cmd_proj->add_option("--cap", proj_cap, "center height cap override");
  cmd_proj->add_flag("--json", proj_json, "machine-readable output");

  int padic_n = 1, padic_s = 0;
  std::uint64_t padic_seed = 0;
  std::int64_t padic_p = 0;
  bool padic_json = false;
  auto* cmd_padic = app.add_subcommand("padic-check", "determinant divisibility check");
  cmd_padic->add_option("--instances", padic_n, "number of random instances");
  cmd_padic->add_option("--seed", padic_seed, "generator seed");
  cmd_padic->add_option("-p,--prime", padic_p, "pin the prime");
  cmd_padic->add_option("-s,--monomials", padic_s, "pin the monomial count");
  cmd_padic->add_flag("--json", padic_json, "machine-readable output");

  std::string exp_config, exp_expect;
  bool exp_json = false, exp_csv = false;
  auto* cmd_exp = app.add_subcommand("experiment", "run a configured experiment");
  cmd_exp->add_option("--config", exp_config, "key = value config file")->required();
  cmd_exp->add_option("--expect", exp_expect, "frozen regression values (json)");
  cmd_exp->add_flag("--json", exp_json, "machine-readable output");
  cmd_exp->add_flag("--csv", exp_csv, "per-record table as csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_count->parsed())
      return run_count(count_args, count_bound, count_projective, count_points);
    if (cmd_aux->parsed()) return run_auxpoly(aux_args, aux_bound, aux_projective);
    if (cmd_bad->parsed()) return run_badness(bad_args, scan_limit);
    if (cmd_wit->parsed()) return run_witness(wit_d, wit_n, wit_json);
    if (cmd_proj->parsed())
      return run_project(proj_curve, proj_d, proj_affine, proj_bound, proj_cap,
                         proj_json);
    if (cmd_padic->parsed())
      return run_padic(padic_n, padic_seed, padic_p, padic_s, padic_json);
    if (cmd_exp->parsed())
      return run_experiment(exp_config, exp_expect, exp_json, exp_csv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const WorkLimitError& e) {
    std::cerr << "work limit: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
