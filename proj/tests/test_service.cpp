#include <doctest.h>

#include "deltaspringer/service.hpp"

using namespace ds;

TEST_CASE("enumerate request is deterministic and canonical") {
  json req;
  req["cmd"] = "enumerate";
  req["n"] = 6;
  req["k"] = 3;
  req["m"] = 2;
  ServiceResult r1 = eval_request(req);
  ServiceResult r2 = eval_request(req);
  CHECK(r1.status == 0);
  CHECK(r1.output == r2.output);
  json out = json::parse(r1.output);
  CHECK(out.at("schema") == "delta-springer/1");
  CHECK(out.at("diagrams").size() == 3);
}

TEST_CASE("exit-status contract") {
  CHECK(eval_request(std::string("not json")).status == 2);
  CHECK(eval_request(json{{"cmd", "nope"}}).status == 2);
  json missing;
  missing["cmd"] = "betti";
  missing["n"] = 6;
  CHECK(eval_request(missing).status == 2);

  json bad_params;
  bad_params["cmd"] = "betti";
  bad_params["n"] = 6;
  bad_params["k"] = 4;  // k > n/2
  bad_params["m"] = 2;
  CHECK(eval_request(bad_params).status == 2);

  // verification failure: stability at zero parameters
  json unstable;
  unstable["cmd"] = "verify";
  unstable["suite"] = "stability";
  unstable["n"] = 6;
  unstable["k"] = 3;
  unstable["m"] = 2;
  unstable["xi"] = "zero";
  ServiceResult r = eval_request(unstable);
  CHECK(r.status == 1);
  CHECK_FALSE(r.output.empty());

  // instability inside the matrix command also maps to status 1
  json mreq;
  mreq["cmd"] = "matrix";
  mreq["gen"] = "x2";
  mreq["basis"] = "L";
  mreq["degree"] = 3;  // the only proper subspace block of (6,3,2)
  mreq["n"] = 6;
  mreq["k"] = 3;
  mreq["m"] = 2;
  mreq["xi"] = "zero";
  CHECK(eval_request(mreq).status == 1);
}

TEST_CASE("verify all passes on the reference shape") {
  json req;
  req["cmd"] = "verify";
  req["suite"] = "all";
  req["n"] = 6;
  req["k"] = 3;
  req["m"] = 2;
  ServiceResult r = eval_request(req);
  CHECK(r.status == 0);
  json out = json::parse(r.output);
  CHECK(out.at("report").at("failed") == 0);
  CHECK(out.at("report").at("passed").get<int>() > 40);
}

TEST_CASE("render round trip through the service") {
  json req;
  req["cmd"] = "render";
  req["weight"] = "v^^v|^v";
  req["format"] = "json";
  ServiceResult r = eval_request(req);
  CHECK(r.status == 0);
  json diagram = json::parse(r.output);
  CHECK(diagram.at("cups") == json::parse("[[1,2],[4,5]]"));

  json req2;
  req2["cmd"] = "render";
  req2["diagram"] = diagram;
  req2["format"] = "ascii";
  ServiceResult r2 = eval_request(req2);
  CHECK(r2.status == 0);
  json req3 = req2;
  req3["format"] = "tikz";
  CHECK(eval_request(req3).status == 0);

  json req4;
  req4["cmd"] = "render";
  req4["weight"] = "vv^v|^^";
  req4["format"] = "json";
  req4["one_boundary"] = true;
  json ob = json::parse(eval_request(req4).output);
  CHECK(ob.at("half_cups") == json::parse("[1,4]"));
}

TEST_CASE("intersect on the worked pair") {
  json a = json::parse(
      R"({"n":7,"m":2,"cups":[[1,4],[2,3],[5,6]],"rays":[7]})");
  json b = json::parse(
      R"({"n":7,"m":2,"cups":[[1,2],[3,6],[4,5]],"rays":[7]})");
  json req;
  req["cmd"] = "intersect";
  req["a"] = a;
  req["b"] = b;
  ServiceResult r = eval_request(req);
  CHECK(r.status == 0);
  json out = json::parse(r.output);
  CHECK(out.at("intersection").at("ell") == "1");
}

TEST_CASE("tensor subcommands") {
  json req;
  req["cmd"] = "tensor";
  req["sub"] = "p-vector";
  req["diagram"] =
      json::parse(R"({"n":6,"m":2,"cups":[[1,2],[3,6],[4,5]],"rays":[]})");
  ServiceResult r = eval_request(req);
  CHECK(r.status == 0);
  CHECK(json::parse(r.output).at("vector").at("n_v") == 4);

  json vr;
  vr["cmd"] = "tensor";
  vr["sub"] = "commutant";
  vr["n"] = 6;
  vr["k"] = 3;
  vr["m"] = 2;
  vr["degree"] = 2;
  CHECK(eval_request(vr).status == 0);
}

TEST_CASE("fillings request lists the bijection chain") {
  json req;
  req["cmd"] = "fillings";
  req["n"] = 6;
  req["k"] = 3;
  req["m"] = 2;
  ServiceResult r = eval_request(req);
  CHECK(r.status == 0);
  json out = json::parse(r.output);
  REQUIRE(out.at("rows").size() == 3);
  CHECK(out.at("rows")[2].at("full").at("row1") ==
        json::parse("[6,5,2]"));
  CHECK(out.at("rows")[2].at("full").at("row2") ==
        json::parse("[4,3,1]"));
}

TEST_CASE("l-expand tsv format") {
  json req;
  req["cmd"] = "l-expand";
  req["weight"] = "v^^v|^v";
  req["format"] = "tsv";
  ServiceResult r = eval_request(req);
  CHECK(r.status == 0);
  CHECK(r.output == "1,4\t1\n2,4\t-1\n");
}

TEST_CASE("sweep aggregates deterministically") {
  json req;
  req["cmd"] = "sweep";
  req["max_n"] = 4;
  req["suites"] = "hecke,extremal";
  ServiceResult r1 = eval_request(req);
  ServiceResult r2 = eval_request(req);
  CHECK(r1.status == 0);
  CHECK(r1.output == r2.output);
  json out = json::parse(r1.output);
  CHECK(out.at("total_failed") == 0);
}

TEST_CASE("size cap is enforced") {
  json req;
  req["cmd"] = "enumerate";
  req["n"] = max_n_cap() + 1;
  req["k"] = 0;
  req["m"] = 0;
  CHECK(eval_request(req).status == 2);
}
