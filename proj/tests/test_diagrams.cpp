#include <doctest.h>

#include <set>

#include "deltaspringer/diagrams.hpp"
#include "deltaspringer/json_io.hpp"

using namespace ds;

namespace {

CupDiagram diag(int n, int k, int m, std::vector<std::pair<int, int>> cups,
                std::vector<int> rays) {
  return CupDiagram::make(ShapeParams::make(n, k, m, ParamMode::AnyK),
                          std::move(cups), std::move(rays));
}

// Every strict parameter triple with n <= cap.
std::vector<ShapeParams> strict_sweep(int cap) {
  std::vector<ShapeParams> out;
  for (int n = 1; n <= cap; ++n)
    for (int k = 0; k <= n / 2; ++k)
      for (int m = 0; m <= k; ++m)
        out.push_back(ShapeParams::make(n, k, m));
  return out;
}

}  // namespace

TEST_CASE("parameter regimes") {
  CHECK_THROWS_AS(ShapeParams::make(0, 0, 0), ParamError);
  CHECK_THROWS_AS(ShapeParams::make(6, 4, 2), ParamError);  // k > n/2
  CHECK_THROWS_AS(ShapeParams::make(6, 2, 3), ParamError);  // m > k strict
  CHECK_NOTHROW(ShapeParams::make(6, 2, 3, ParamMode::Relaxed));
  CHECK_THROWS_AS(ShapeParams::make(9, 5, 3, ParamMode::Relaxed), ParamError);
  CHECK_NOTHROW(ShapeParams::make(9, 5, 3, ParamMode::AnyK));
}

TEST_CASE("enumerate cup diagrams (6,3,2): the three components") {
  auto ds_ = enumerate_cup_diagrams(ShapeParams::make(6, 3, 2));
  REQUIRE(ds_.size() == 3);
  // canonical order: lexicographic on the canonical weight, down < up
  CHECK(ds_[0].cups == std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {3, 4}});
  CHECK(ds_[1].cups == std::vector<std::pair<int, int>>{{1, 6}, {2, 3}, {4, 5}});
  CHECK(ds_[2].cups == std::vector<std::pair<int, int>>{{1, 2}, {3, 6}, {4, 5}});
  for (const auto& d : ds_) CHECK(d.rays.empty());
}

TEST_CASE("enumerate edge cases") {
  auto one = enumerate_cup_diagrams(ShapeParams::make(5, 0, 0));
  REQUIRE(one.size() == 1);
  CHECK(one[0].rays == std::vector<int>{1, 2, 3, 4, 5});

  auto d732 = enumerate_cup_diagrams(ShapeParams::make(7, 3, 2));
  bool found = false;
  for (const auto& d : d732)
    if (d.cups == std::vector<std::pair<int, int>>{{1, 2}, {3, 6}, {4, 5}} &&
        d.rays == std::vector<int>{7})
      found = true;
  CHECK(found);
}

TEST_CASE("enumerate weights") {
  auto w522 = enumerate_weights(ShapeParams::make(5, 2, 2));
  std::set<std::string> strs;
  for (const auto& w : w522) strs.insert(w.str());
  CHECK(strs.count("v^v|^^") == 1);
  CHECK(strs.count("^v^|v^") == 0);  // down left of up among the last two

  CHECK(enumerate_weights(ShapeParams::make(6, 3, 2)).size() == 14);

  auto allup =
      enumerate_weights(ShapeParams::make(5, 0, 2, ParamMode::Relaxed));
  REQUIRE(allup.size() == 1);
  CHECK(allup[0].str() == "^^^|^^");
}

TEST_CASE("weight -> cup diagram") {
  CHECK(weight_to_cup(weight_from_string("vv^v|^^")).same_arcs(
      diag(6, 3, 2, {{2, 3}, {1, 6}, {4, 5}}, {})));
  CHECK(weight_to_cup(weight_from_string("^^^v|vv")).same_arcs(
      diag(6, 3, 2, {}, {1, 2, 3, 4, 5, 6})));
  CHECK(weight_to_cup(weight_from_string("^vvv|^^")).same_arcs(
      diag(6, 3, 2, {{3, 6}, {4, 5}}, {1, 2})));
}

TEST_CASE("cup -> weight is the canonical preimage of the type") {
  // Example pair: diagram of a degree-2 class inside type (3,3,2).
  CupDiagram a = CupDiagram::make(ShapeParams::make(6, 3, 2),
                                  {{1, 2}, {4, 5}}, {3, 6});
  CHECK(cup_to_weight(a).str() == "v^^v|^v");
  CHECK(weight_to_cup(cup_to_weight(a)).same_arcs(a));

  CupDiagram rays_only =
      CupDiagram::make(ShapeParams::make(4, 0, 0), {}, {1, 2, 3, 4});
  CHECK(cup_to_weight(rays_only).str() == "^^^^");

  // top-degree diagram of the main example
  CupDiagram top = diag(6, 3, 2, {{1, 2}, {3, 6}, {4, 5}}, {});
  CHECK(cup_to_weight(top).str() == "v^vv|^^");
}

TEST_CASE("round trips over every weight, n <= 8") {
  for (const auto& p : strict_sweep(8)) {
    long long matched_sum = 0;
    for (const auto& w : enumerate_weights(p)) {
      CupDiagram d = weight_to_cup(w);
      // C(alpha) always satisfies the diagram invariants (make validates)
      // and the canonical weight of the same type returns to alpha's class
      CHECK(weight_to_cup(cup_to_weight(d)).same_arcs(d));
      ++matched_sum;
    }
    // surjectivity: every budget-k diagram arises from its canonical weight
    for (const auto& d : enumerate_cup_diagrams(p))
      CHECK(weight_to_cup(cup_to_weight(d)).same_arcs(d));
    CHECK(matched_sum ==
          static_cast<long long>(enumerate_weights(p).size()));
  }
}

TEST_CASE("filling chain (6,3,2) matches the component bijection") {
  auto chain = filling_chain(ShapeParams::make(6, 3, 2));
  REQUIRE(chain.size() == 3);
  std::set<std::string> smalls;
  for (const auto& row : chain) {
    smalls.insert(row.small.str());
    // second-row entries of the full filling are the cup left endpoints
    std::set<int> lefts;
    for (auto& [l, r] : row.diagram.cups) lefts.insert(l);
    std::set<int> row2(row.full.row2.begin(), row.full.row2.end());
    CHECK(lefts == row2);
  }
  CHECK(smalls == std::set<std::string>{"[2 / 1]", "[3 / 1]", "[4 / 1]"});

  bool has_a = false;
  for (const auto& row : chain)
    if (row.full.row1 == std::vector<int>{6, 5, 2} &&
        row.full.row2 == std::vector<int>{4, 3, 1})
      has_a = row.diagram.cups ==
              std::vector<std::pair<int, int>>{{1, 2}, {3, 6}, {4, 5}};
  CHECK(has_a);
}

TEST_CASE("filling chain equals enumeration as a set, n <= 8") {
  for (const auto& p : strict_sweep(8)) {
    auto chain = filling_chain(p);
    auto diags = enumerate_cup_diagrams(p);
    REQUIRE(chain.size() == diags.size());
    for (size_t i = 0; i < chain.size(); ++i)
      CHECK(chain[i].diagram.same_arcs(diags[i]));
  }
}

TEST_CASE("filling chain on the trivial shape") {
  auto chain = filling_chain(ShapeParams::make(4, 0, 0));
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].full.row2.empty());
  CHECK(chain[0].diagram.rays == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("circle diagram of the worked pair (n=7, m=2)") {
  CupDiagram a = diag(7, 3, 2, {{1, 4}, {2, 3}, {5, 6}}, {7});
  CupDiagram b = diag(7, 3, 2, {{1, 2}, {3, 6}, {4, 5}}, {7});
  CircleDiagram cd = circle_diagram(a, b);
  REQUIRE(cd.components.size() == 2);
  CHECK(cd.components[0].kind == CircleComponent::Kind::Circle);
  CHECK(cd.components[0].vertices == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(cd.components[1].kind == CircleComponent::Kind::PropagatingLine);
  auto ic = intersection_class(a, b);
  CHECK_FALSE(ic.empty);
  CHECK(ic.ell == 1);  // the intersection is a single 2-sphere
}

TEST_CASE("self-pairing gives ell = k; distinct ray placement kills it") {
  CupDiagram b = diag(7, 3, 2, {{1, 2}, {3, 6}, {4, 5}}, {7});
  auto self = intersection_class(b, b);
  CHECK_FALSE(self.empty);
  CHECK(self.ell == 3);
  CircleDiagram cd = circle_diagram(b, b);
  REQUIRE(cd.components.size() == 4);
  CHECK(cd.components[1].crosses_cut);  // {3,6} closes across the cut

  // two all-rays diagrams: n propagating lines, no circles
  CupDiagram r1 = diag(4, 0, 2, {}, {1, 2, 3, 4});
  CircleDiagram rr = circle_diagram(r1, r1);
  CHECK(rr.components.size() == 4);
  for (const auto& comp : rr.components)
    CHECK(comp.kind == CircleComponent::Kind::PropagatingLine);

  // same-side loose ends entirely left of the cut are non-propagating:
  // here {1,2} joins two lower rays of y
  CupDiagram x = diag(4, 1, 0, {{1, 2}}, {3, 4});
  CupDiagram y = diag(4, 1, 0, {{3, 4}}, {1, 2});
  auto ic = intersection_class(x, y);
  CHECK(ic.empty);
  bool saw_nonprop = false;
  for (const auto& comp : circle_diagram(x, y).components)
    if (comp.kind == CircleComponent::Kind::NonPropagatingLine)
      saw_nonprop = true;
  CHECK(saw_nonprop);

  // opposite-side loose ends propagate even without crossing the cut
  CupDiagram z = diag(4, 1, 0, {{2, 3}}, {1, 4});
  auto icxz = intersection_class(x, z);
  CHECK_FALSE(icxz.empty);
  CHECK(icxz.ell == 0);  // a single point
}

namespace {

// Independent oracle for intersection types: solve the coordinate
// constraints of the sphere model directly. Fully-left cups impose
// x_j = -x_i, left rays pin x_i to the north pole, crossing cups impose
// nothing. Signed union-find detects contradictions (x = -x, or one chain
// pinned to both poles); surviving unpinned chains each contribute one
// sphere.
struct SphereOracle {
  bool empty = false;
  int spheres = 0;
};

SphereOracle solve_sphere_model(const CupDiagram& a, const CupDiagram& b) {
  const int nm = a.params.cut();
  std::vector<int> parent(nm + 1), sign(nm + 1, 1);
  for (int v = 0; v <= nm; ++v) parent[v] = v;
  auto find = [&](auto&& self, int v) -> std::pair<int, int> {
    if (parent[v] == v) return {v, 1};
    auto [root, s] = self(self, parent[v]);
    parent[v] = root;
    sign[v] *= s;
    return {root, sign[v]};
  };
  bool empty = false;
  auto relate = [&](int i, int j, int rel) {  // x_j = rel * x_i
    auto [ri, si] = find(find, i);
    auto [rj, sj] = find(find, j);
    if (ri == rj) {
      if (si * rel != sj) empty = true;  // x = -x on a sphere
      return;
    }
    parent[rj] = ri;
    sign[rj] = si * rel * sj;  // adjust so signs compose through the root
  };
  for (const CupDiagram* d : {&a, &b})
    for (auto& [l, r] : d->cups)
      if (r <= nm) relate(l, r, -1);
  // pins recorded per root: +1 north, -1 south
  std::map<int, int> pin;
  for (const CupDiagram* d : {&a, &b})
    for (int v : d->rays)
      if (v <= nm) {
        auto [root, s] = find(find, v);
        auto [it, fresh] = pin.try_emplace(root, s);
        if (!fresh && it->second != s) empty = true;
      }
  if (empty) return {true, 0};
  int spheres = 0;
  for (int v = 1; v <= nm; ++v) {
    auto [root, s] = find(find, v);
    if (root == v && !pin.count(root)) ++spheres;
  }
  return {false, spheres};
}

}  // namespace

TEST_CASE("intersection class matches the sphere-model oracle, n <= 8") {
  for (const auto& p : strict_sweep(8)) {
    auto diags = enumerate_cup_diagrams(p);
    for (const auto& a : diags)
      for (const auto& b : diags) {
        auto ic = intersection_class(a, b);
        auto oracle = solve_sphere_model(a, b);
        CHECK(ic.empty == oracle.empty);
        if (!ic.empty) CHECK(ic.ell == oracle.spheres);
      }
  }
}

TEST_CASE("intersection class is symmetric and ell(a,a)=k, n <= 9") {
  for (const auto& p : strict_sweep(9)) {
    auto diags = enumerate_cup_diagrams(p);
    for (const auto& a : diags) {
      auto self = intersection_class(a, a);
      CHECK_FALSE(self.empty);
      CHECK(self.ell == p.k);
    }
    if (diags.size() >= 2) {
      auto ab = intersection_class(diags[0], diags[1]);
      auto ba = intersection_class(diags[1], diags[0]);
      CHECK(ab.empty == ba.empty);
      CHECK(ab.ell == ba.ell);
    }
  }
}

TEST_CASE("one-boundary projection") {
  // worked mapping: cups {2-3, 1-6, 4-5} with n=6, m=2
  CupDiagram b = diag(6, 3, 2, {{2, 3}, {1, 6}, {4, 5}}, {});
  OneBoundaryDiagram ob = to_one_boundary(b);
  CHECK(ob.points == 4);
  CHECK(ob.cups == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(ob.half_cups == std::vector<int>{1, 4});
  CHECK(ob.rays.empty());

  CupDiagram rays_only = diag(5, 0, 1, {}, {1, 2, 3, 4, 5});
  OneBoundaryDiagram obr = to_one_boundary(rays_only);
  CHECK(obr.cups.empty());
  CHECK(obr.half_cups.empty());
  CHECK(obr.rays == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("one-boundary projection is injective on components, n <= 9") {
  for (const auto& p : strict_sweep(9)) {
    auto diags = enumerate_cup_diagrams(p);
    std::set<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>>
        seen;
    for (const auto& d : diags) {
      OneBoundaryDiagram ob = to_one_boundary(d);
      seen.insert({ob.cups, ob.half_cups});
    }
    CHECK(seen.size() == diags.size());
  }
}

TEST_CASE("diagram json round trip and error reporting") {
  json j = json::parse(R"({"n":6,"m":2,"cups":[[1,2],[3,6],[4,5]],"rays":[]})");
  CupDiagram a = diagram_from_json(j);
  CHECK(a.cups == std::vector<std::pair<int, int>>{{1, 2}, {3, 6}, {4, 5}});
  CHECK(diagram_to_json(a) == j);

  CHECK_THROWS_WITH_AS(
      diagram_from_json(json::parse(
          R"({"n":6,"m":2,"cups":[[5,6]],"rays":[1,2,3,4]})")),
      doctest::Contains("cut condition violated"), DiagramError);
  CHECK_THROWS_AS(diagram_from_json(json::parse(
                      R"({"n":4,"m":0,"cups":[[1,3],[2,4]],"rays":[]})")),
                  DiagramError);
  CHECK_THROWS_AS(diagram_from_json(json::parse(
                      R"({"n":3,"m":0,"cups":[[1,3]],"rays":[2]})")),
                  DiagramError);
}

TEST_CASE("ascii render re-parses to the same diagram, n <= 8") {
  for (const auto& p : strict_sweep(8))
    for (const auto& d : enumerate_cup_diagrams(p)) {
      CupDiagram re = parse_diagram(render_ascii(d));
      CHECK(re.same_arcs(d));
      CHECK(re.params.m == d.params.m);
    }
}

TEST_CASE("tikz render is stable") {
  CupDiagram a = diag(6, 3, 2, {{1, 2}, {3, 6}, {4, 5}}, {});
  std::string t = render_tikz(a);
  CHECK(t.find("\\begin{tikzpicture}") == 0);
  CHECK(t.find("dashed") != std::string::npos);      // the cut line
  CHECK(t.find("(3.50,-1)") != std::string::npos);   // between vertices 4, 5
  CHECK(t == render_tikz(a));
}

TEST_CASE("weight strings") {
  DeltaWeight w = weight_from_string("v^^v|^v");
  CHECK(w.params.n == 6);
  CHECK(w.params.m == 2);
  CHECK(w.params.k == 3);
  CHECK(w.str() == "v^^v|^v");
  CHECK(weight_from_string("vv^^").params.m == 0);
  CHECK_THROWS_AS(weight_from_string("v^x"), DiagramError);
  CHECK_THROWS_AS(weight_from_string("^^|v^"), DiagramError);  // admissibility
}
