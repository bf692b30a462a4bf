#include <doctest.h>

#include "deltaspringer/tensor.hpp"

using namespace ds;

namespace {

TensorBasisElt elt(const std::string& eps, int i) {
  TensorBasisElt e;
  for (char c : eps) e.eps.push_back(c == '+');
  e.i = i;
  return e;
}

TensorVector unit(int nv, int m, const std::string& eps, int i) {
  TensorVector v;
  v.nv = nv;
  v.m = m;
  v.add(elt(eps, i), 1);
  return v;
}

// Full tensor-space basis, used for exhaustive operator identities.
std::vector<TensorBasisElt> full_basis(int nv, int m) {
  std::vector<TensorBasisElt> out;
  for (int mask = 0; mask < (1 << nv); ++mask)
    for (int i = 0; i <= m; ++i) {
      TensorBasisElt e;
      for (int j = 0; j < nv; ++j) e.eps.push_back(mask >> j & 1);
      e.i = i;
      out.push_back(e);
    }
  return out;
}

}  // namespace

TEST_CASE("single-factor gl2 action") {
  // e kills v_0 in the symmetric factor; f climbs with coefficient m-i
  TensorVector v0 = unit(1, 3, "-", 0);
  CHECK(gl2_apply(Gl2Op::E, 2, v0).zero());
  TensorVector f1 = gl2_apply(Gl2Op::F, 2, unit(1, 3, "-", 1));
  TensorVector expect = tv_scale(2, unit(1, 3, "-", 2));
  CHECK(f1 == expect);
  // h1 + h2 is the identity on a V factor and m*id on the symmetric one
  for (const auto& e : full_basis(2, 2)) {
    TensorVector v;
    v.nv = 2;
    v.m = 2;
    v.add(e, 1);
    CHECK(tv_add(gl2_apply(Gl2Op::H1, 1, v), gl2_apply(Gl2Op::H2, 1, v)) ==
          v);
    CHECK(tv_add(gl2_apply(Gl2Op::H1, 3, v), gl2_apply(Gl2Op::H2, 3, v)) ==
          tv_scale(2, v));
  }
}

TEST_CASE("casimir acts as the transposition on two V factors") {
  for (const auto& e : full_basis(3, 0)) {
    TensorVector v;
    v.nv = 3;
    v.m = 0;
    v.add(e, 1);
    TensorBasisElt swapped = e;
    std::swap(swapped.eps[0], swapped.eps[1]);
    TensorVector sv;
    sv.nv = 3;
    sv.m = 0;
    sv.add(swapped, 1);
    CHECK(casimir(1, 2, v) == sv);
  }
  CHECK(casimir(1, 2, unit(2, 0, "+-", 0)) == unit(2, 0, "-+", 0));
}

TEST_CASE("casimir against the alternating crossing vector") {
  // Omega at (r, r+1) negates w_r: single crossing cup, r = 1
  CupDiagram a = CupDiagram::make(ShapeParams::make(2, 1, 1), {{1, 2}}, {});
  TensorVector w1 = p_vector(a);  // v_- v_0 - v_+ v_1 in V tensor S^1V
  TensorVector expect;
  expect.nv = 1;
  expect.m = 1;
  expect.add(elt("-", 0), 1);
  expect.add(elt("+", 1), -1);
  CHECK(w1 == expect);
  CHECK(casimir(1, 2, w1) == tv_scale(-1, w1));
}

TEST_CASE("p-vector of the worked diagram (n=7, m=3)") {
  CupDiagram a = CupDiagram::make(ShapeParams::make(7, 3, 3),
                                  {{1, 2}, {3, 6}, {4, 5}}, {7});
  TensorVector v = p_vector(a);
  TensorVector expect;
  expect.nv = 4;
  expect.m = 3;
  // (v_- v_+ - v_+ v_-) tensor (v_- v_- v_0 - v_+ v_- v_1 - v_- v_+ v_1
  //                             + v_+ v_+ v_2)
  expect.add(elt("-+--", 0), 1);
  expect.add(elt("-++-", 1), -1);
  expect.add(elt("-+-+", 1), -1);
  expect.add(elt("-+++", 2), 1);
  expect.add(elt("+---", 0), -1);
  expect.add(elt("+-+-", 1), 1);
  expect.add(elt("+--+", 1), 1);
  expect.add(elt("+-++", 2), -1);
  CHECK(v == expect);
  std::string why;
  CHECK(highest_weight_check(v, {Int(4), Int(3)}, &why));
}

TEST_CASE("p-vector simple cases and leading term") {
  CupDiagram rays = CupDiagram::make(ShapeParams::make(3, 0, 0), {}, {1, 2, 3});
  CHECK(p_vector(rays) == unit(3, 0, "+++", 0));

  CupDiagram one_cup =
      CupDiagram::make(ShapeParams::make(2, 1, 0), {{1, 2}}, {});
  TensorVector v = p_vector(one_cup);
  TensorVector expect;
  expect.nv = 2;
  expect.m = 0;
  expect.add(elt("-+", 0), 1);
  expect.add(elt("+-", 0), -1);
  CHECK(v == expect);

  // leading-term unitriangularity across all component diagrams
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= n / 2; ++k)
      for (int m = 0; m <= k; ++m) {
        ShapeParams p = ShapeParams::make(n, k, m);
        for (const auto& a : enumerate_cup_diagrams(p)) {
          TensorVector pv = p_vector(a);
          DeltaWeight w = cup_to_weight(a);
          TensorBasisElt lead;
          for (int v2 = 1; v2 <= p.cut(); ++v2)
            lead.eps.push_back(w.at(v2) == Sym::Up);
          lead.i = 0;
          REQUIRE(!pv.terms.empty());
          CHECK(pv.terms.begin()->first == lead);
          CHECK(pv.terms.begin()->second == 1);
        }
      }
}

TEST_CASE("highest weight property for every component, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n / 2; ++k)
      for (int m = 0; m <= k; ++m) {
        ShapeParams p = ShapeParams::make(n, k, m);
        for (int d = 0; d <= k; ++d) {
          ShapeParams pd = ShapeParams::make(n, d, m, ParamMode::Relaxed);
          for (const auto& a : enumerate_cup_diagrams(pd))
            CHECK(highest_weight_check(p_vector(a),
                                       {Int(n - d), Int(d)}, nullptr));
        }
      }
}

TEST_CASE("highest weight failure is detected") {
  std::string why;
  CHECK_FALSE(highest_weight_check(unit(2, 0, "-+", 0), {Int(1), Int(1)},
                                   &why));
  CHECK(why == "raising operator does not annihilate");
}

TEST_CASE("tensor Hecke action satisfies the defining relations") {
  // exhaustive matrix identities on the full tensor space, small sizes
  for (auto [nv, m] : std::vector<std::pair<int, int>>{{3, 0}, {2, 2}, {3, 1}}) {
    auto basis = full_basis(nv, m);
    auto apply = [&](const GeneratorRef& g, const TensorVector& v) {
      return hecke_tensor(g, v);
    };
    auto sigma = [&](int i, const TensorVector& v) {
      return apply({GeneratorRef::Kind::Sigma, i}, v);
    };
    auto x = [&](int i, const TensorVector& v) {
      return apply({GeneratorRef::Kind::X, i}, v);
    };
    for (const auto& e : basis) {
      TensorVector v;
      v.nv = nv;
      v.m = m;
      v.add(e, 1);
      for (int i = 1; i < nv; ++i) {
        CHECK(sigma(i, sigma(i, v)) == v);
        // cross relation x_{i+1} sigma_i - sigma_i x_i = 1
        TensorVector lhs = tv_add(x(i + 1, sigma(i, v)),
                                  tv_scale(-1, sigma(i, x(i, v))));
        CHECK(lhs == v);
        if (i + 1 < nv)
          CHECK(sigma(i, sigma(i + 1, sigma(i, v))) ==
                sigma(i + 1, sigma(i, sigma(i + 1, v))));
      }
      for (int i = 1; i <= nv; ++i)
        for (int j = i + 1; j <= nv; ++j)
          CHECK(x(i, x(j, v)) == x(j, x(i, v)));
    }
  }
}

TEST_CASE("tensor Hecke action commutes with global gl2") {
  for (auto [nv, m] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}}) {
    auto basis = full_basis(nv, m);
    std::vector<GeneratorRef> gens;
    for (int i = 1; i < nv; ++i)
      gens.push_back({GeneratorRef::Kind::Sigma, i});
    for (int i = 1; i <= nv; ++i) gens.push_back({GeneratorRef::Kind::X, i});
    for (const auto& e : basis) {
      TensorVector v;
      v.nv = nv;
      v.m = m;
      v.add(e, 1);
      for (const auto& g : gens)
        for (Gl2Op op : {Gl2Op::E, Gl2Op::F, Gl2Op::H1, Gl2Op::H2}) {
          TensorVector global_then_g, g_then_global;
          global_then_g.nv = g_then_global.nv = nv;
          global_then_g.m = g_then_global.m = m;
          for (int pos = 1; pos <= nv + 1; ++pos) {
            global_then_g =
                tv_add(global_then_g, hecke_tensor(g, gl2_apply(op, pos, v)));
            g_then_global =
                tv_add(g_then_global, gl2_apply(op, pos, hecke_tensor(g, v)));
          }
          CHECK(global_then_g == g_then_global);
        }
    }
  }
}

TEST_CASE("sigma flips the sign of an antisymmetric pair") {
  CupDiagram one_cup =
      CupDiagram::make(ShapeParams::make(4, 1, 0), {{2, 3}}, {1, 4});
  TensorVector v = p_vector(one_cup);
  CHECK(hecke_tensor({GeneratorRef::Kind::Sigma, 2}, v) == tv_scale(-1, v));
}

TEST_CASE("x_{n-m} kills p-vectors of ray-ended diagrams") {
  CupDiagram a =
      CupDiagram::make(ShapeParams::make(6, 1, 1), {{2, 3}}, {1, 4, 5, 6});
  REQUIRE(a.role(5) == CupDiagram::VertexRole::Ray);
  TensorVector v = hecke_tensor({GeneratorRef::Kind::X, 5}, p_vector(a));
  CHECK(v.zero());
}

TEST_CASE("equivariance and commutant across degrees") {
  ShapeParams p = ShapeParams::make(6, 3, 2);
  for (int d = 0; d <= 3; ++d) {
    CHECK(equivariance_check(p, d).all_pass());
    CHECK(commutant_dimension(p, d) == 1);
  }
  // the symmetric group alone is reducible where the block splits
  CHECK(commutant_dimension(p, 2, true) == 3);
  CHECK(commutant_dimension(p, 1, true) == 2);
  CHECK(commutant_dimension(p, 3, true) == 1);
}

TEST_CASE("tensor vector json round trip") {
  TensorVector v;
  v.nv = 4;
  v.m = 2;
  v.add(elt("-++-", 1), -3);
  v.add(elt("----", 0), 7);
  json j = tensorvector_to_json(v);
  CHECK(tensorvector_from_json(j) == v);
  CHECK(j.at("terms")[0].at("eps") == "----");
}
