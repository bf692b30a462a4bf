#include "deltaspringer/service.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "deltaspringer/actions.hpp"
#include "deltaspringer/homology.hpp"
#include "deltaspringer/specht.hpp"
#include "deltaspringer/tensor.hpp"

namespace ds {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int geti(const json& req, const char* key, std::optional<int> fallback = {}) {
  if (!req.contains(key)) {
    if (fallback) return *fallback;
    throw UsageError(std::string("missing argument \"") + key + "\"");
  }
  if (!req.at(key).is_number_integer())
    throw UsageError(std::string("argument \"") + key +
                     "\" must be an integer");
  return req.at(key).get<int>();
}

std::string gets(const json& req, const char* key,
                 const std::string& fallback) {
  if (!req.contains(key)) return fallback;
  if (!req.at(key).is_string())
    throw UsageError(std::string("argument \"") + key +
                     "\" must be a string");
  return req.at(key).get<std::string>();
}

ParamMode mode_arg(const json& req) {
  std::string m = gets(req, "mode", "strict");
  if (m == "strict") return ParamMode::Strict;
  if (m == "relaxed") return ParamMode::Relaxed;
  if (m == "any-k") return ParamMode::AnyK;
  throw UsageError("mode must be strict, relaxed or any-k");
}

ShapeParams params_arg(const json& req,
                       ParamMode fallback_mode = ParamMode::Strict) {
  int n = geti(req, "n");
  if (n > max_n_cap())
    throw UsageError("n exceeds the size cap " +
                     std::to_string(max_n_cap()) +
                     " (set DELTA_SPRINGER_MAX_N to raise it)");
  ParamMode mode = req.contains("mode") ? mode_arg(req) : fallback_mode;
  return ShapeParams::make(n, geti(req, "k"), geti(req, "m"), mode);
}

HeckeParams xi_arg(const json& req, const ShapeParams& p) {
  std::string s = gets(req, "xi", "springer");
  if (s == "springer") return HeckeParams::springer(p);
  if (s == "zero") return HeckeParams::zeros(p);
  std::vector<Rat> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(rat_parse(item));
  if (static_cast<int>(vals.size()) != p.cut() + 1)
    throw UsageError("xi list must have n-m+1 entries");
  return HeckeParams::from_values(p.cut(), std::move(vals));
}

std::string format_arg(const json& req, const std::string& fallback = "json") {
  std::string f = gets(req, "format", fallback);
  if (f != "json" && f != "tsv" && f != "ascii" && f != "tikz")
    throw UsageError("format must be json, tsv, ascii or tikz");
  return f;
}

json head(const std::string& command) {
  json j;
  j["schema"] = kSchemaTag;
  j["command"] = command;
  return j;
}

json params_json(const ShapeParams& p) {
  json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["m"] = p.m;
  return j;
}

json report_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json cj;
    cj["id"] = c.id;
    cj["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  json j;
  j["suite"] = rep.suite;
  j["checks"] = checks;
  j["passed"] = rep.passed();
  j["failed"] = rep.failed();
  return j;
}

std::string report_tsv(const Report& rep) {
  std::string out;
  for (const auto& c : rep.checks)
    out += c.id + "\t" + (c.pass ? "pass" : "fail") +
           (c.pass ? "" : "\t" + c.witness) + "\n";
  return out;
}

CupDiagram diagram_arg(const json& req, const char* key) {
  if (!req.contains(key))
    throw UsageError(std::string("missing argument \"") + key + "\"");
  const json& v = req.at(key);
  if (v.is_object()) return diagram_from_json(v);
  if (v.is_string()) return parse_diagram(v.get<std::string>());
  throw UsageError(std::string("argument \"") + key +
                   "\" must be a diagram object or text");
}

// One weight-or-diagram input for render-like commands.
CupDiagram diagram_or_weight_arg(const json& req) {
  if (req.contains("weight")) {
    DeltaWeight w =
        weight_from_string(gets(req, "weight", ""), ParamMode::AnyK);
    return weight_to_cup(w);
  }
  return diagram_arg(req, "diagram");
}

using Handler = std::function<ServiceResult(const json&)>;

ServiceResult ok(std::string text) { return {0, std::move(text), ""}; }
ServiceResult ok(const json& j) { return {0, j.dump() + "\n", ""}; }

ServiceResult report_result(const std::string& cmd, const json& extra,
                            const Report& rep, const std::string& format) {
  if (format == "tsv") {
    std::string out = report_tsv(rep);
    return {rep.all_pass() ? 0 : 1, out,
            rep.all_pass() ? "" : "verification failed"};
  }
  json j = head(cmd);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = *it;
  j["report"] = report_json(rep);
  return {rep.all_pass() ? 0 : 1, j.dump() + "\n",
          rep.all_pass() ? "" : "verification failed"};
}

// ----- individual commands -------------------------------------------------

ServiceResult cmd_enumerate(const json& req) {
  ShapeParams p = params_arg(req, ParamMode::Relaxed);
  std::string format = format_arg(req);
  auto diagrams = enumerate_cup_diagrams(p);
  if (format == "json") {
    json j = head("enumerate");
    j["params"] = params_json(p);
    json arr = json::array();
    for (const auto& d : diagrams) arr.push_back(diagram_to_json(d));
    j["diagrams"] = arr;
    return ok(j);
  }
  std::string out;
  for (const auto& d : diagrams) {
    if (format == "tsv")
      out += cup_to_weight(d).str() + "\t" + diagram_to_json(d).dump() + "\n";
    else if (format == "ascii")
      out += render_ascii(d) + "\n";
    else
      out += render_tikz(d) + "\n";
  }
  return ok(out);
}

ServiceResult cmd_weights(const json& req) {
  ShapeParams p = params_arg(req, ParamMode::Relaxed);
  std::string format = format_arg(req);
  auto ws = enumerate_weights(p);
  if (format == "json") {
    json j = head("weights");
    j["params"] = params_json(p);
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(w.str());
    j["weights"] = arr;
    return ok(j);
  }
  std::string out;
  for (const auto& w : ws) out += w.str() + "\n";
  return ok(out);
}

ServiceResult cmd_betti(const json& req) {
  ShapeParams p = params_arg(req);
  std::string format = format_arg(req);
  auto b = betti(p);
  if (format == "tsv") {
    std::string out;
    for (size_t d = 0; d < b.size(); ++d)
      out += std::to_string(d) + "\t" + std::to_string(b[d]) + "\n";
    return ok(out);
  }
  json j = head("betti");
  j["params"] = params_json(p);
  json arr = json::array();
  for (long long x : b) arr.push_back(std::to_string(x));
  j["betti"] = arr;
  return ok(j);
}

ServiceResult cmd_l_expand(const json& req) {
  DeltaWeight w = weight_from_string(
      gets(req, "weight", ""),
      req.contains("mode") ? mode_arg(req) : ParamMode::AnyK);
  std::string format = format_arg(req);
  HomVector v = l_expand(w);
  if (format == "tsv") {
    std::string out;
    for (const auto& [u, c] : v.terms) {
      std::string us;
      for (int x : subset_elements(u)) us += (us.empty() ? "" : ",") +
                                             std::to_string(x);
      out += us + "\t" + int_str(c) + "\n";
    }
    return ok(out);
  }
  json j = head("l-expand");
  j["weight"] = w.str();
  j["vector"] = homvector_to_json(v);
  return ok(j);
}

ServiceResult cmd_matrix(const json& req) {
  ShapeParams p = params_arg(req);
  GeneratorRef gen = GeneratorRef::parse(gets(req, "gen", ""));
  std::string basis_s = gets(req, "basis", "L");
  if (basis_s != "L" && basis_s != "lines")
    throw UsageError("basis must be L or lines");
  BasisKind basis = basis_s == "L" ? BasisKind::L : BasisKind::Lines;
  int degree = geti(req, "degree");
  HeckeParams xi = xi_arg(req, p);
  OperatorMatrix m = operator_matrix(gen, basis, degree, p, xi);
  json j = head("matrix");
  j["params"] = params_json(p);
  j["gen"] = gen.str();
  j["basis"] = basis_s;
  j["degree"] = degree;
  j["labels"] = m.labels;
  j["rows"] = m.mat.n;
  j["cols"] = m.mat.m;
  json rows = json::array();
  for (int i = 0; i < m.mat.n; ++i) {
    json row = json::array();
    for (int c = 0; c < m.mat.m; ++c) row.push_back(rat_str(m.mat.at(i, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return ok(j);
}

Report suite_commutant(const ShapeParams& p) {
  Report rep;
  rep.suite = "commutant";
  for (int d = 0; d <= p.k; ++d) {
    long long dim = commutant_dimension(p, d);
    rep.add("commutant.d" + std::to_string(d) + ".dimension_one", dim == 1,
            "commutant dimension is " + std::to_string(dim));
  }
  return rep;
}

Report suite_equivariance(const ShapeParams& p) {
  Report rep;
  rep.suite = "equivariance";
  for (int d = 0; d <= p.k; ++d) rep.merge(equivariance_check(p, d));
  return rep;
}

Report run_suite(const std::string& suite, const ShapeParams& p,
                 const HeckeParams& xi) {
  if (suite == "hecke") return verify_hecke_relations(p, xi, BasisKind::L);
  if (suite == "stability") return verify_stability(p, xi);
  if (suite == "typec") return verify_typec(p, xi);
  if (suite == "specht") return verify_specht(p);
  if (suite == "equivariance") return suite_equivariance(p);
  if (suite == "commutant") return suite_commutant(p);
  if (suite == "extremal") return verify_extremal(p, xi);
  if (suite == "all") {
    Report rep;
    rep.suite = "all";
    for (const char* s : {"hecke", "stability", "typec", "specht",
                          "equivariance", "commutant", "extremal"})
      rep.merge(run_suite(s, p, xi));
    return rep;
  }
  throw UsageError("unknown suite \"" + suite + "\"");
}

ServiceResult cmd_verify(const json& req) {
  ShapeParams p = params_arg(req);
  std::string suite = gets(req, "suite", "all");
  HeckeParams xi = xi_arg(req, p);
  Report rep = run_suite(suite, p, xi);
  json extra;
  extra["suite"] = suite;
  extra["params"] = params_json(p);
  return report_result("verify", extra, rep, format_arg(req));
}

ServiceResult cmd_decompose(const json& req) {
  ShapeParams p = params_arg(req);
  int degree = geti(req, "degree");
  std::string format = format_arg(req);
  auto dec = decompose_homology_rep(p, degree);
  if (format == "tsv") {
    std::string out;
    for (const auto& [s, m] : dec)
      out += std::to_string(s.a) + "," + std::to_string(s.b) + "\t" +
             std::to_string(m) + "\n";
    return ok(out);
  }
  json j = head("decompose");
  j["params"] = params_json(p);
  j["degree"] = degree;
  json arr = json::array();
  for (const auto& [s, m] : dec) {
    json sj;
    sj["shape"] = json::array({s.a, s.b});
    sj["multiplicity"] = std::to_string(m);
    arr.push_back(sj);
  }
  j["summands"] = arr;
  return ok(j);
}

ServiceResult cmd_intersect(const json& req) {
  CupDiagram a = diagram_arg(req, "a");
  CupDiagram b = diagram_arg(req, "b");
  CircleDiagram cd = circle_diagram(a, b);
  IntersectionClass ic = intersection_class(a, b);
  json j = head("intersect");
  j["circle_diagram"] = circle_diagram_to_json(cd);
  json icj;
  icj["empty"] = ic.empty;
  if (!ic.empty) icj["ell"] = std::to_string(ic.ell);
  j["intersection"] = icj;
  return ok(j);
}

ServiceResult cmd_render(const json& req) {
  CupDiagram a = diagram_or_weight_arg(req);
  std::string format = format_arg(req, "ascii");
  bool one_boundary = req.contains("one_boundary") &&
                      req.at("one_boundary").get<bool>();
  if (one_boundary) {
    OneBoundaryDiagram ob = to_one_boundary(a);
    if (format == "json") return ok(one_boundary_to_json(ob));
    if (format == "ascii") return ok(render_ascii(ob));
    throw UsageError("one-boundary render supports json and ascii");
  }
  if (format == "json") return ok(diagram_to_json(a));
  if (format == "ascii") return ok(render_ascii(a));
  if (format == "tikz") return ok(render_tikz(a));
  throw UsageError("render format must be json, ascii or tikz");
}

ServiceResult cmd_fillings(const json& req) {
  ShapeParams p = params_arg(req);
  auto chain = filling_chain(p);
  json j = head("fillings");
  j["params"] = params_json(p);
  json arr = json::array();
  for (const auto& row : chain) {
    json rj;
    rj["small"] = filling_to_json(row.small);
    rj["skew"] = filling_to_json(row.skew);
    rj["full"] = filling_to_json(row.full);
    rj["diagram"] = diagram_to_json(row.diagram);
    arr.push_back(rj);
  }
  j["rows"] = arr;
  return ok(j);
}

ServiceResult cmd_tensor(const json& req) {
  std::string sub = gets(req, "sub", "");
  if (sub == "p-vector") {
    CupDiagram a = diagram_arg(req, "diagram");
    json j = head("tensor.p-vector");
    j["diagram"] = diagram_to_json(a);
    j["vector"] = tensorvector_to_json(p_vector(a));
    return ok(j);
  }
  if (sub == "equivariance" || sub == "commutant") {
    ShapeParams p = params_arg(req);
    int degree = geti(req, "degree");
    Report rep;
    if (sub == "equivariance") {
      rep = equivariance_check(p, degree);
    } else {
      rep.suite = "commutant";
      long long dim = commutant_dimension(p, degree);
      rep.add("commutant.d" + std::to_string(degree) + ".dimension_one",
              dim == 1, "commutant dimension is " + std::to_string(dim));
    }
    json extra;
    extra["params"] = params_json(p);
    extra["degree"] = degree;
    return report_result("tensor." + sub, extra, rep, format_arg(req));
  }
  throw UsageError(
      "tensor subcommand must be p-vector, equivariance or commutant");
}

ServiceResult cmd_sweep(const json& req) {
  int max_n = geti(req, "max_n");
  if (max_n < 1 || max_n > max_n_cap())
    throw UsageError("max_n must lie in 1.." + std::to_string(max_n_cap()));
  std::vector<std::string> suites;
  {
    std::stringstream ss(gets(req, "suites", "all"));
    std::string item;
    while (std::getline(ss, item, ',')) suites.push_back(item);
  }
  json results = json::array();
  int total_passed = 0, total_failed = 0;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n / 2; ++k)
      for (int m = 0; m <= k; ++m) {
        ShapeParams p = ShapeParams::make(n, k, m, ParamMode::Strict);
        HeckeParams xi = HeckeParams::springer(p);
        for (const auto& s : suites) {
          Report rep = run_suite(s, p, xi);
          json r;
          r["params"] = params_json(p);
          r["suite"] = s;
          r["passed"] = rep.passed();
          r["failed"] = rep.failed();
          if (!rep.all_pass()) {
            json fails = json::array();
            for (const auto& c : rep.checks)
              if (!c.pass) fails.push_back(c.id + ": " + c.witness);
            r["failures"] = fails;
          }
          results.push_back(r);
          total_passed += rep.passed();
          total_failed += rep.failed();
        }
      }
  if (format_arg(req) == "tsv") {
    std::string out;
    for (const auto& r : results)
      out += std::to_string(r.at("params").at("n").get<int>()) + "\t" +
             std::to_string(r.at("params").at("k").get<int>()) + "\t" +
             std::to_string(r.at("params").at("m").get<int>()) + "\t" +
             r.at("suite").get<std::string>() + "\t" +
             std::to_string(r.at("passed").get<int>()) + "\t" +
             std::to_string(r.at("failed").get<int>()) + "\n";
    return {total_failed == 0 ? 0 : 1, out,
            total_failed == 0 ? "" : "verification failed"};
  }
  json j = head("sweep");
  j["max_n"] = max_n;
  j["suites"] = suites;
  j["results"] = results;
  j["total_passed"] = total_passed;
  j["total_failed"] = total_failed;
  return {total_failed == 0 ? 0 : 1, j.dump() + "\n",
          total_failed == 0 ? "" : "verification failed"};
}

}  // namespace

int max_n_cap() {
  if (const char* env = std::getenv("DELTA_SPRINGER_MAX_N")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 14;
}

ServiceResult eval_request(const json& request) {
  std::string cmd;
  try {
    if (!request.is_object() || !request.contains("cmd"))
      throw UsageError("request must be an object with a \"cmd\" field");
    cmd = request.at("cmd").get<std::string>();
  } catch (const std::exception& e) {
    return {2, "", e.what()};
  }
  static const std::map<std::string, Handler> handlers = {
      {"enumerate", cmd_enumerate}, {"weights", cmd_weights},
      {"betti", cmd_betti},         {"l-expand", cmd_l_expand},
      {"matrix", cmd_matrix},       {"verify", cmd_verify},
      {"decompose", cmd_decompose}, {"intersect", cmd_intersect},
      {"render", cmd_render},       {"fillings", cmd_fillings},
      {"tensor", cmd_tensor},       {"sweep", cmd_sweep},
  };
  auto it = handlers.find(cmd);
  if (it == handlers.end())
    return {2, "", "unknown command \"" + cmd + "\""};
  try {
    return it->second(request);
  } catch (const InstabilityError& e) {
    return {1, "", std::string("instability: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    // UsageError, ParamError, DiagramError, IndexError, bad literals
    return {2, "", e.what()};
  } catch (const json::exception& e) {
    return {2, "", e.what()};
  } catch (const std::exception& e) {
    // Internal invariant violation: attach the reproduction payload.
    return {3, "", std::string(e.what()) + " [request: " + request.dump() +
                       "]"};
  }
}

ServiceResult eval_request(const std::string& request_json) {
  json req;
  try {
    req = json::parse(request_json);
  } catch (const json::exception& e) {
    return {2, "", std::string("bad request JSON: ") + e.what()};
  }
  return eval_request(req);
}

}  // namespace ds
