// Command-line front end: reads triangulated 2-spheres (catalog families or
// the text format), computes minimum-size fillings exactly, and verifies the
// resulting ball structure.  Exit code 0 when every requested check passes,
// 1 with a failure list otherwise, 2 on input errors.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tautfill/adu.hpp"
#include "tautfill/ball.hpp"
#include "tautfill/fill.hpp"
#include "tautfill/oracle.hpp"
#include "tautfill/sphere.hpp"

using namespace tautfill;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

std::string rat_str(const Rational& r) { return r.get_str(); }

// An instance spec is an existing file path, or a catalog name with an
// optional ":parameter" suffix.
SphereTriangulation load_instance(const std::string& spec) {
  if (std::filesystem::exists(spec)) return read_sphere_file(spec);
  auto colon = spec.find(':');
  if (colon == std::string::npos) return catalog(spec);
  int param = 0;
  try {
    std::size_t used = 0;
    param = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad catalog parameter in '" + spec + "'");
  }
  return catalog(spec.substr(0, colon), param);
}

Triangle parse_triangle(const std::string& text) {
  std::vector<VertexId> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stoi(part));
  if (v.size() != 3)
    throw std::invalid_argument("gluing face '" + text +
                                "' must list three vertices");
  return make_triangle(v[0], v[1], v[2]);
}

// "a,b,c:d,e,f" -> the two gluing faces
std::pair<Triangle, Triangle> parse_faces(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--faces wants 'a,b,c:d,e,f'");
  return {parse_triangle(text.substr(0, colon)),
          parse_triangle(text.substr(colon + 1))};
}

json chain_json(const Chain& c) {
  json out = json::array();
  for (const auto& [verts, coeff] : c.terms()) {
    json term;
    term["vertices"] = verts;
    term["coeff"] = rat_str(coeff);
    out.push_back(term);
  }
  return out;
}

// Pass/fail bookkeeping shared by all subcommands.  Failures double as the
// machine-parsable list: one "FAIL name: detail" line each on stdout, and
// the "failures" array of the JSON report.
struct CheckList {
  json checks = json::object();
  json failures = json::array();

  void record(const std::string& name, bool ok, const std::string& detail) {
    checks[name] = ok;
    if (!ok) {
      json f;
      f["check"] = name;
      f["detail"] = detail;
      failures.push_back(f);
      std::cout << "FAIL " << name << ": " << detail << "\n";
    }
  }

  int exit_code() const { return failures.empty() ? 0 : 1; }
};

void finish_report(json& report, const CheckList& cl,
                   const std::string& json_path) {
  report["checks"] = cl.checks;
  report["failures"] = cl.failures;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << report.dump(2) << "\n";
  }
  if (cl.failures.empty()) std::cout << "checks: all passed\n";
}

// Shared pipeline: bound, LP value, ILP value and filling, then ball,
// shelling, and flag verification of the optimum.
json run_fill_pipeline(const SphereTriangulation& s, const std::string& label,
                       bool qvol_only, bool no_verify, CheckList& cl) {
  json report;
  report["instance"] = label;
  report["v"] = s.vertex_count();
  report["e"] = s.edge_count();
  report["f"] = s.face_count();
  report["maxdeg"] = s.max_degree();
  std::cout << "instance: " << label << " (v=" << s.vertex_count()
            << ", e=" << s.edge_count() << ", f=" << s.face_count()
            << ", maxdeg=" << s.max_degree() << ")\n";

  Chain x = orientation_cycle(s);
  ConingBound cb = coning_bound(x);
  report["coning_bound"] = rat_str(cb.value);
  report["coning_apex"] = cb.apex;
  std::cout << "coning bound: " << rat_str(cb.value) << " (apex " << cb.apex
            << ")\n";

  json timings;
  Clock::time_point t0 = Clock::now();
  FillResult q = qvol(x);
  timings["qvol_ms"] = ms_since(t0);
  report["qvol"] = rat_str(q.value);
  report["lp_pivots"] = q.lp_pivots;
  std::cout << "qvol: " << rat_str(q.value) << " (" << q.lp_pivots
            << " pivots)\n";
  cl.record("qvol_le_coning", q.value <= cb.value,
            "qvol " + rat_str(q.value) + " exceeds coning bound " +
                rat_str(cb.value));

  if (qvol_only) {
    report["timings"] = timings;
    return report;
  }

  t0 = Clock::now();
  FillResult z = zvol(x);
  timings["zvol_ms"] = ms_since(t0);
  report["zvol"] = rat_str(z.value);
  report["bb_nodes"] = z.bb_nodes;
  report["filling"] = chain_json(z.filling);
  report["qvol_eq_zvol"] = (q.value == z.value);
  std::cout << "zvol: " << rat_str(z.value) << " (" << z.bb_nodes
            << " nodes, filling of " << z.filling.terms().size()
            << " tets)\n";
  for (const auto& [verts, coeff] : z.filling.terms()) {
    std::cout << "  " << (coeff > 0 ? "+" : "-") << "[";
    for (std::size_t i = 0; i < verts.size(); ++i)
      std::cout << (i ? "," : "") << verts[i];
    std::cout << "]\n";
  }
  cl.record("qvol_le_zvol", q.value <= z.value,
            "qvol " + rat_str(q.value) + " exceeds zvol " + rat_str(z.value));
  cl.record("zvol_le_coning", z.value <= cb.value,
            "zvol " + rat_str(z.value) + " exceeds coning bound " +
                rat_str(cb.value));

  if (no_verify) {
    report["timings"] = timings;
    return report;
  }

  t0 = Clock::now();
  try {
    BallComplex tau = to_ball_complex(z.filling, s);
    ShellingOrder order = shuck(tau, *tau.tets.begin());
    FreeShellingReport fs = verify_freely_shellable(tau);
    FlagReport fl = flag_check(tau);
    timings["verify_ms"] = ms_since(t0);
    report["ball"] = json::parse(certificate_json(tau, order, fs, fl));
    std::cout << "ball: ok (" << tau.tet_count() << " tets)\n";
    cl.record("ball_ok", true, "");
    std::cout << "free shelling: " << (fs.all_ok ? "ok" : "FAILED") << " ("
              << fs.entries.size() << " starts, " << fs.type3_steps
              << " type-3 steps)\n";
    std::string fs_note;
    for (const auto& e : fs.entries)
      if (!e.ok) fs_note += (fs_note.empty() ? "" : "; ") + e.note;
    cl.record("free_shelling_ok", fs.all_ok, fs_note);
    std::cout << "flag: " << (fl.is_flag() ? "ok" : "FAILED") << "\n";
    cl.record("flag_ok", fl.is_flag(),
              std::to_string(fl.empty_triangles.size()) +
                  " empty triangles, " + std::to_string(fl.empty_k4.size()) +
                  " empty K4, " + std::to_string(fl.k5_cliques.size()) +
                  " K5");
  } catch (const std::exception& e) {
    timings["verify_ms"] = ms_since(t0);
    cl.record("ball_ok", false, e.what());
  }

  report["timings"] = timings;
  return report;
}

int cmd_fill(const std::string& spec, bool qvol_only, bool no_verify,
             const std::string& json_path) {
  SphereTriangulation s = load_instance(spec);
  CheckList cl;
  json report = run_fill_pipeline(s, spec, qvol_only, no_verify, cl);
  report["command"] = "fill";
  finish_report(report, cl, json_path);
  return cl.exit_code();
}

int cmd_sum(const std::vector<std::string>& specs, const std::string& faces,
            bool disjoint, bool no_verify, const std::string& json_path) {
  SphereTriangulation s1 = load_instance(specs[0]);
  SphereTriangulation s2 = load_instance(specs[1]);
  CheckList cl;
  json report;
  report["command"] = "sum";

  AduWitness w = [&] {
    if (disjoint) {
      report["instance"] = specs[0] + " + " + specs[1] + " (disjoint)";
      return disjoint_witness(s1, s2);
    }
    ConnectedSum sum = faces.empty()
                           ? connected_sum(s1, s2)
                           : [&] {
                               auto [f1, f2] = parse_faces(faces);
                               return connected_sum(s1, f1, s2, f2);
                             }();
    std::string label = specs[0] + " # " + specs[1];
    report = run_fill_pipeline(sum.sphere, label, false, no_verify, cl);
    report["command"] = "sum";
    json shared = json::array();
    for (VertexId v : sum.shared) shared.push_back(v);
    report["shared_triangle"] = shared;
    return witness_from_sum(sum);
  }();

  Clock::time_point t0 = Clock::now();
  AdditivityReport add = additivity_check(w);
  std::cout << "zvol additivity: " << add.describe() << "\n";
  json zrep;
  zrep["x"] = rat_str(add.vol_x);
  zrep["y"] = rat_str(add.vol_y);
  zrep["sum"] = rat_str(add.vol_sum);
  zrep["piece_norm_x"] = rat_str(add.norm_x);
  zrep["piece_norm_y"] = rat_str(add.norm_y);
  zrep["ms"] = ms_since(t0);
  report["zvol_additivity"] = zrep;
  cl.record("zvol_additive", add.additive, add.describe());
  cl.record("zvol_split_ok", add.split_ok,
            add.note.empty() ? add.describe() : add.note);

  t0 = Clock::now();
  QAdditivityReport qadd = qvol_additivity_check(w);
  std::cout << "qvol additivity: " << qadd.describe() << "\n";
  json qrep;
  qrep["x"] = rat_str(qadd.qvol_x);
  qrep["y"] = rat_str(qadd.qvol_y);
  qrep["sum"] = rat_str(qadd.qvol_sum);
  qrep["clearing_multiplier"] = qadd.q.get_str();
  qrep["zvol_scaled"] = rat_str(qadd.zvol_scaled);
  qrep["ms"] = ms_since(t0);
  report["qvol_additivity"] = qrep;
  cl.record("qvol_additive", qadd.additive, qadd.describe());
  cl.record("qvol_clearing_ok", qadd.clearing_ok, qadd.describe());
  cl.record("qvol_split_ok", qadd.split_ok,
            qadd.note.empty() ? qadd.describe() : qadd.note);

  finish_report(report, cl, json_path);
  return cl.exit_code();
}

int cmd_oracle(const std::string& spec, int coeff_bound, bool all, bool check,
               const std::string& json_path) {
  SphereTriangulation s = load_instance(spec);
  Chain x = orientation_cycle(s);
  CheckList cl;
  json report;
  report["command"] = "oracle";
  report["instance"] = spec;
  report["coeff_bound"] = coeff_bound;

  Clock::time_point t0 = Clock::now();
  OracleResult res = oracle_zvol(x, coeff_bound, all);
  report["ms"] = ms_since(t0);
  report["found"] = res.found;
  report["search_bound"] = res.search_bound;
  cl.record("oracle_found", res.found,
            "no integral filling with coefficients up to " +
                std::to_string(coeff_bound) + " within norm " +
                std::to_string(res.search_bound));
  if (res.found) {
    report["value"] = res.value;
    std::cout << "oracle value: " << res.value << " (search bound "
              << res.search_bound << ")\n";
  }

  if (all && res.found) {
    report["optimal_count"] = res.optimal_fillings.size();
    json fillings = json::array();
    for (const Chain& m : res.optimal_fillings) fillings.push_back(chain_json(m));
    report["optimal_fillings"] = fillings;
    std::cout << "optimal fillings: " << res.optimal_fillings.size() << "\n";
  }

  if (check && res.found) {
    Rational solved = zvol_value(x);
    report["solver_value"] = rat_str(solved);
    std::cout << "solver value: " << rat_str(solved) << "\n";
    cl.record("oracle_matches_solver", solved == res.value,
              "oracle " + std::to_string(res.value) + " vs solver " +
                  rat_str(solved));
  }

  finish_report(report, cl, json_path);
  return cl.exit_code();
}

int cmd_validate(const std::string& spec, const std::string& json_path) {
  SphereTriangulation s = load_instance(spec);
  CheckList cl;
  json report;
  report["command"] = "validate";
  report["instance"] = spec;
  report["v"] = s.vertex_count();
  report["e"] = s.edge_count();
  report["f"] = s.face_count();
  report["maxdeg"] = s.max_degree();
  report["prime"] = is_prime(s);
  report["flag"] = is_flag(s);
  std::cout << "instance: " << spec << " (v=" << s.vertex_count()
            << ", e=" << s.edge_count() << ", f=" << s.face_count()
            << ", maxdeg=" << s.max_degree() << ")\n"
            << "prime: " << (is_prime(s) ? "yes" : "no") << "\n"
            << "flag: " << (is_flag(s) ? "yes" : "no") << "\n";
  cl.record("valid_sphere", true, "");
  finish_report(report, cl, json_path);
  return cl.exit_code();
}

int cmd_catalog_list() {
  for (const CatalogEntry& e : catalog_entries()) {
    std::cout << e.name;
    if (e.takes_parameter) std::cout << ":k (k >= " << e.min_parameter << ")";
    std::cout << "  " << e.summary << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-size simplicial fillings of triangulated 2-spheres"};
  app.require_subcommand(1);

  // fill: the full pipeline on one instance
  CLI::App* fill = app.add_subcommand(
      "fill", "compute qvol and zvol of an instance and verify the filling");
  std::string fill_input, fill_catalog, fill_json;
  bool fill_qvol_only = false, fill_no_verify = false;
  fill->add_option("input", fill_input, "sphere file or catalog spec");
  fill->add_option("--catalog", fill_catalog, "catalog spec name[:param]");
  fill->add_flag("--qvol-only", fill_qvol_only, "stop after the LP value");
  fill->add_flag("--no-verify", fill_no_verify,
                 "skip ball, shelling, and flag verification");
  fill->add_option("--json", fill_json, "write the JSON report here");

  // sum: connected sum or disjoint union of two instances
  CLI::App* sum = app.add_subcommand(
      "sum", "glue two instances and check volume additivity and splitting");
  std::vector<std::string> sum_inputs;
  std::string sum_faces, sum_json;
  bool sum_disjoint = false, sum_no_verify = false;
  sum->add_option("inputs", sum_inputs, "two sphere files or catalog specs")
      ->expected(2);
  sum->add_option("--faces", sum_faces,
                  "gluing faces as 'a,b,c:d,e,f' (default: lex-least)");
  sum->add_flag("--disjoint", sum_disjoint,
                "skip gluing and treat the pair as a disjoint union");
  sum->add_flag("--no-verify", sum_no_verify,
                "skip ball, shelling, and flag verification");
  sum->add_option("--json", sum_json, "write the JSON report here");

  // oracle: independent exhaustive search
  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force the integral volume of a small instance");
  std::string oracle_input, oracle_catalog, oracle_json;
  int oracle_bound = 1;
  bool oracle_all = false, oracle_check = false;
  oracle->add_option("input", oracle_input, "sphere file or catalog spec");
  oracle->add_option("--catalog", oracle_catalog, "catalog spec name[:param]");
  oracle->add_option("--coeff-bound", oracle_bound,
                     "largest |coefficient| to try (default 1)");
  oracle->add_flag("--all", oracle_all, "enumerate every optimal filling");
  oracle->add_flag("--check", oracle_check,
                   "cross-check the value against the exact solver");
  oracle->add_option("--json", oracle_json, "write the JSON report here");

  // validate: parse and check an instance, print its shape
  CLI::App* val = app.add_subcommand(
      "validate", "check that an input is a triangulated 2-sphere");
  std::string val_input, val_json;
  val->add_option("input", val_input, "sphere file or catalog spec")
      ->required();
  val->add_option("--json", val_json, "write the JSON report here");

  // catalog list: the built-in families
  CLI::App* cat = app.add_subcommand("catalog", "catalog utilities");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list the built-in instance families");

  CLI11_PARSE(app, argc, argv);

  auto pick = [](const std::string& positional, const std::string& flag,
                 const char* cmd) {
    if (positional.empty() == flag.empty())
      throw std::invalid_argument(std::string(cmd) +
                                  " wants exactly one input (positional or "
                                  "--catalog)");
    return positional.empty() ? flag : positional;
  };

  try {
    if (fill->parsed())
      return cmd_fill(pick(fill_input, fill_catalog, "fill"), fill_qvol_only,
                      fill_no_verify, fill_json);
    if (sum->parsed())
      return cmd_sum(sum_inputs, sum_faces, sum_disjoint, sum_no_verify,
                     sum_json);
    if (oracle->parsed())
      return cmd_oracle(pick(oracle_input, oracle_catalog, "oracle"),
                        oracle_bound, oracle_all, oracle_check, oracle_json);
    if (val->parsed()) return cmd_validate(val_input, val_json);
    if (cat->parsed()) return cmd_catalog_list();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
