// Command-line front end. Every subcommand is translated into a JSON
// request and handed to the shared library through the C API; stdout is
// byte-deterministic for a given invocation, timing goes to stderr.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltaspringer/ds_c_api.h"

namespace {

using json = nlohmann::ordered_json;

struct Common {
  int n = 0, k = 0, m = 0;
  std::string mode;
  std::string format;
  std::string xi;
};

void add_params(CLI::App* cmd, Common& c, bool with_mode = true) {
  cmd->add_option("--n", c.n, "total vertex count")->required();
  cmd->add_option("--k", c.k, "cup budget / number of downs")->required();
  cmd->add_option("--m", c.m, "cut offset")->required();
  if (with_mode)
    cmd->add_option("--param-mode", c.mode,
                    "parameter regime: strict, relaxed or any-k");
}

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format (default json)");
}

void put_common(json& req, const Common& c, bool params = true) {
  if (params) {
    req["n"] = c.n;
    req["k"] = c.k;
    req["m"] = c.m;
  }
  if (!c.mode.empty()) req["mode"] = c.mode;
  if (!c.format.empty()) req["format"] = c.format;
  if (!c.xi.empty()) req["xi"] = c.xi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "delta-springer: exact combinatorics, homology bases and degenerate "
      "affine Hecke algebra actions for two-row Delta-Springer varieties"};
  app.set_version_flag("--version", []() {
    return std::string(ds_version());
  });
  app.require_subcommand(1);

  json req;
  bool timed = false;

  Common c;
  std::string weight, diagram, a_text, b_text, gen, basis, suite, sub,
      suites;
  int degree = 0, max_n = 0;
  bool one_boundary = false;

  auto* enumerate = app.add_subcommand("enumerate", "list all cup diagrams");
  add_params(enumerate, c);
  add_format(enumerate, c);
  enumerate->callback([&] {
    req["cmd"] = "enumerate";
    put_common(req, c);
  });

  auto* weights = app.add_subcommand("weights", "list all weights");
  add_params(weights, c);
  add_format(weights, c);
  weights->callback([&] {
    req["cmd"] = "weights";
    put_common(req, c);
  });

  auto* betti = app.add_subcommand("betti", "Betti numbers b_0..b_k");
  add_params(betti, c);
  add_format(betti, c);
  betti->callback([&] {
    req["cmd"] = "betti";
    put_common(req, c);
  });

  auto* lexp = app.add_subcommand(
      "l-expand", "signed line-diagram expansion of a weight class");
  lexp->add_option("--weight", weight, "weight string, e.g. \"v^^v|^v\"")
      ->required();
  add_format(lexp, c);
  lexp->callback([&] {
    req["cmd"] = "l-expand";
    req["weight"] = weight;
    put_common(req, c, false);
  });

  auto* matrix =
      app.add_subcommand("matrix", "exact matrix of a generator");
  matrix->add_option("--gen", gen, "s<i>, x<i>, sprime<i>, jm<i>, jmt<i>")
      ->required();
  matrix->add_option("--basis", basis, "L or lines (default L)");
  matrix->add_option("--degree", degree, "homology degree block")->required();
  add_params(matrix, c);
  matrix->add_option("--xi", c.xi,
                     "springer, zero, or comma-separated rationals");
  add_format(matrix, c);
  matrix->callback([&] {
    req["cmd"] = "matrix";
    req["gen"] = gen;
    if (!basis.empty()) req["basis"] = basis;
    req["degree"] = degree;
    put_common(req, c);
  });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", suite,
                   "hecke, stability, typec, specht, equivariance, "
                   "commutant, extremal or all")
      ->required();
  add_params(verify, c);
  verify->add_option("--xi", c.xi,
                     "springer, zero, or comma-separated rationals");
  add_format(verify, c);
  verify->callback([&] {
    req["cmd"] = "verify";
    req["suite"] = suite;
    put_common(req, c);
    timed = true;
  });

  auto* decompose = app.add_subcommand(
      "decompose", "symmetric-group decomposition of a degree block");
  add_params(decompose, c);
  decompose->add_option("--degree", degree, "homology degree")->required();
  add_format(decompose, c);
  decompose->add_flag("--json", "emit JSON (the default)");
  decompose->callback([&] {
    req["cmd"] = "decompose";
    req["degree"] = degree;
    put_common(req, c);
  });

  auto* intersect = app.add_subcommand(
      "intersect", "circle diagram and intersection type of two diagrams");
  intersect->add_option("--a", a_text, "first diagram (JSON or ascii)")
      ->required();
  intersect->add_option("--b", b_text, "second diagram (JSON or ascii)")
      ->required();
  add_format(intersect, c);
  intersect->callback([&] {
    req["cmd"] = "intersect";
    req["a"] = a_text;
    req["b"] = b_text;
    put_common(req, c, false);
  });

  auto* render = app.add_subcommand("render", "render a diagram or weight");
  render->add_option("--weight", weight, "weight string");
  render->add_option("--diagram", diagram, "diagram (JSON or ascii)");
  render->add_flag("--one-boundary", one_boundary,
                   "drop the part right of the cut line");
  add_format(render, c);
  render->callback([&] {
    req["cmd"] = "render";
    if (!weight.empty()) req["weight"] = weight;
    if (!diagram.empty()) req["diagram"] = diagram;
    if (one_boundary) req["one_boundary"] = true;
    put_common(req, c, false);
  });

  auto* fillings = app.add_subcommand(
      "fillings", "tableau-filling chain for the component bijection");
  add_params(fillings, c);
  add_format(fillings, c);
  fillings->callback([&] {
    req["cmd"] = "fillings";
    put_common(req, c);
  });

  auto* tensor = app.add_subcommand("tensor", "gl2 tensor-space oracle");
  tensor->add_option("sub", sub, "p-vector, equivariance or commutant")
      ->required();
  tensor->add_option("--diagram", diagram, "diagram for p-vector");
  tensor->add_option("--n", c.n, "total vertex count");
  tensor->add_option("--k", c.k, "cup budget");
  tensor->add_option("--m", c.m, "cut offset");
  tensor->add_option("--degree", degree, "homology degree");
  add_format(tensor, c);
  tensor->callback([&] {
    req["cmd"] = "tensor";
    req["sub"] = sub;
    if (!diagram.empty()) req["diagram"] = diagram;
    if (sub != "p-vector") {
      req["n"] = c.n;
      req["k"] = c.k;
      req["m"] = c.m;
      req["degree"] = degree;
      timed = true;
    }
    if (!c.format.empty()) req["format"] = c.format;
  });

  auto* sweep = app.add_subcommand(
      "sweep", "run suites over every strict (n,k,m) with n <= max-n");
  sweep->add_option("--max-n", max_n, "largest n")->required();
  sweep->add_option("--suites", suites,
                    "comma-separated suite list (default all)");
  add_format(sweep, c);
  sweep->callback([&] {
    req["cmd"] = "sweep";
    req["max_n"] = max_n;
    if (!suites.empty()) req["suites"] = suites;
    put_common(req, c, false);
    timed = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return DS_USAGE_ERROR;
  }

  ds_session* session = ds_session_new();
  if (!session) {
    std::cerr << "out of memory\n";
    return DS_INTERNAL_ERROR;
  }
  auto t0 = std::chrono::steady_clock::now();
  int status = ds_eval(session, req.dump().c_str());
  auto t1 = std::chrono::steady_clock::now();
  std::cout << ds_output(session);
  const char* err = ds_error_message(session);
  if (err && *err) std::cerr << "error: " << err << "\n";
  if (timed)
    std::cerr << "# wall_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 -
                                                                       t0)
                     .count()
              << "\n";
  ds_session_free(session);
  return status;
}
