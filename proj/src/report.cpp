#include "dgc/report.hpp"

#include <sstream>

namespace dgc {

namespace {

constexpr int kSchema = 1;

std::string int_string(const Int& n) { return n.str(); }

Json int_list(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_string(x));
  return a;
}

Json proj_point_json(const ProjPoint& p) { return int_list(p.coords); }

Json affine_point_json(const AffinePoint& p) { return int_list(p.coords); }

const char* mode_name(CountMode m) {
  return m == CountMode::affine ? "affine" : "projective";
}

}  // namespace

std::vector<std::string> default_vars(int nvars) {
  if (nvars == 2) return {"x", "y"};
  if (nvars == 3) return {"x", "y", "z"};
  std::vector<std::string> v;
  for (int i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::string rat_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Json report_json(const CountResult& r, const std::vector<std::string>& vars,
                 const IntPoly& f) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "count";
  j["mode"] = mode_name(r.mode);
  j["f"] = poly_print(f, vars);
  j["bound"] = int_string(r.bound);
  j["count"] = int_string(r.count);
  if (r.mode == CountMode::affine && r.affine_points) {
    Json pts = Json::array();
    for (const auto& p : *r.affine_points) pts.push_back(affine_point_json(p));
    j["points"] = pts;
  } else if (r.mode == CountMode::projective && r.proj_points) {
    Json pts = Json::array();
    for (const auto& p : *r.proj_points) pts.push_back(proj_point_json(p));
    j["points"] = pts;
  } else {
    j["points"] = nullptr;
  }
  return j;
}

Json report_json(const AuxCertificate& cert,
                 const std::vector<std::string>& vars) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "aux-certificate";
  j["mode"] = mode_name(cert.mode);
  j["f"] = poly_print(cert.f, vars);
  j["degree"] = cert.f.total_degree();
  j["bound"] = int_string(cert.B);
  j["m"] = cert.M;
  j["g"] = poly_print(cert.g, vars);
  j["points"] = cert.s_points;
  j["bezout_bound"] = int_string(cert.bezout_bound);
  j["bezout_ok"] = Int(cert.s_points) <= cert.bezout_bound;
  j["theory_bound"] = cert.theory_bound;
  return j;
}

Json report_json(const BadnessReport& r, const std::vector<std::string>& vars) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "badness";
  j["f"] = poly_print(r.f, vars);
  j["degree"] = r.d;
  j["threshold"] = int_string(r.threshold);
  j["scan_limit"] = r.scan_limit;
  j["candidate_primes"] = r.candidate_primes;
  j["bad_primes"] = r.bad_primes;
  j["cofactor_unfactored"] = r.cofactor_unfactored;
  j["absolutely_irreducible"] = r.abs_irreducible;
  j["log_badness"] = r.log_badness;
  j["badness"] = r.badness;
  return j;
}

Json report_json(const WitnessCurve& w) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "witness-curve";
  j["d"] = w.d;
  j["n"] = w.n;
  j["f"] = poly_print(w.f, default_vars(w.n));
  j["grid_radius"] = int_string(w.grid_radius);
  j["bound"] = int_string(w.B);
  j["claimed_count"] = int_string(w.claimed_count);
  return j;
}

Json report_json(const ProjectiveWitnessReport& r) {
  Json j;
  j["d"] = r.d;
  j["bound"] = int_string(r.B);
  j["count"] = int_string(r.count);
  j["grid_floor"] = int_string(r.grid_floor);
  j["scaling_pass"] = r.scaling_pass;
  j["grid_pass"] = r.grid_pass;
  j["pass"] = r.pass;
  return j;
}

Json report_json(const AffineWitnessReport& r) {
  Json j;
  j["d"] = r.d;
  j["bound"] = int_string(r.B);
  j["count"] = int_string(r.count);
  j["required"] = r.required;
  j["pass"] = r.pass;
  return j;
}

Json report_json(const ProjectionSetup& s) {
  Json j;
  j["n"] = s.n;
  j["m"] = s.m;
  Json centers = Json::array();
  for (const auto& c : s.centers) centers.push_back(proj_point_json(c));
  j["centers"] = centers;
  Json forms = Json::array();
  for (const auto& f : s.forms) forms.push_back(int_list(f));
  j["forms"] = forms;
  j["b1"] = int_string(s.b1);
  j["b2"] = int_string(s.b2);
  j["inflation"] = int_string(s.inflation);
  return j;
}

Json report_json(const ProjectionResult& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "projection";
  j["setup"] = report_json(r.setup);
  j["image"] = poly_print(r.image, default_vars(3));
  j["dropped_var"] = r.dropped_var;
  j["degree"] = r.degree;
  j["center_height"] = int_string(r.center_height);
  j["tried"] = r.tried;
  return j;
}

Json report_json(const AffineReduction& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "affine-reduction";
  j["plane_curve"] = poly_print(r.plane_curve, default_vars(2));
  j["direction"] = int_list(r.direction);
  j["dropped_var"] = r.dropped_var;
  j["degree"] = r.degree;
  j["inflation"] = int_string(r.inflation);
  j["bound"] = int_string(r.bound);
  j["count_space"] = int_string(r.count_space);
  j["count_plane"] = int_string(r.count_plane);
  j["collision_allowance"] = int_string(r.collision_allowance);
  j["relation_holds"] = r.relation_holds;
  return j;
}

Json report_json(const NormalizationResult& r,
                 const std::vector<std::string>& vars) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "normalization";
  j["shift"] = int_list(r.shift);
  j["image"] = poly_print(r.image, vars);
  j["lead"] = int_string(r.lead);
  j["norm_in"] = int_string(r.norm_in);
  j["norm_out"] = int_string(r.norm_out);
  return j;
}

Json report_json(const DeterminantInstance& inst, const PadicCheckResult& res) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "padic-check";
  std::vector<std::string> vars = default_vars(inst.f.nvars());
  j["p"] = inst.p;
  j["f"] = poly_print(inst.f, vars);
  Json pts = Json::array();
  for (const auto& p : inst.points) pts.push_back(proj_point_json(p));
  j["points"] = pts;
  Json mons = Json::array();
  for (const auto& m : inst.monomials) mons.push_back(poly_print(m, vars));
  j["monomials"] = mons;
  j["det"] = int_string(res.det_value);
  j["det_zero"] = res.det_zero;
  j["vp"] = res.vp;
  j["a_s"] = res.a_s;
  j["mu"] = res.mu;
  j["predicted_exponent"] = inst.predicted_exponent;
  j["pass"] = res.pass;
  return j;
}

Json report_json(const ExperimentReport& rep) {
  Json j;
  j["schema"] = rep.schema;
  j["kind"] = "experiment";
  j["experiment"] = rep.experiment;
  j["seed"] = rep.seed;
  j["bounds"] = int_list(rep.bounds);
  Json recs = Json::array();
  for (const auto& r : rep.records) {
    Json e;
    e["index"] = r.index;
    e["f"] = poly_print(r.f, default_vars(r.f.nvars()));
    e["degree"] = r.degree;
    e["bound"] = int_string(r.b);
    e["count"] = int_string(r.count);
    if (r.aux_m >= 0) {
      e["aux_m"] = r.aux_m;
      e["bezout_bound"] = int_string(r.bezout_bound);
      e["bezout_ok"] = r.bezout_ok;
    } else {
      e["aux_m"] = nullptr;
    }
    e["ratio"] = r.ratio;
    e["shape"] = r.shape;
    e["ok"] = r.ok;
    e["note"] = r.note;
    recs.push_back(e);
  }
  j["records"] = recs;
  j["argmax"] = rep.argmax;
  j["max_ratio"] = rep.max_ratio;
  j["fitted_c"] = rep.fitted_c == 0 ? Json() : Json(rat_string(rep.fitted_c));
  j["all_ok"] = rep.all_ok;
  Json reg;
  reg["checked"] = rep.regression_checked;
  reg["pass"] = rep.regression_pass;
  reg["note"] = rep.regression_note;
  j["regression"] = reg;
  return j;
}

std::string experiment_csv(const ExperimentReport& rep) {
  std::ostringstream os;
  os << "index,degree,bound,count,ratio,shape,aux_m,bezout_ok,ok\n";
  for (const auto& r : rep.records) {
    os << r.index << ',' << r.degree << ',' << r.b << ',' << r.count << ','
       << r.ratio << ',' << r.shape << ',';
    if (r.aux_m >= 0)
      os << r.aux_m << ',' << (r.bezout_ok ? 1 : 0) << ',';
    else
      os << ",,";
    os << (r.ok ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace dgc
