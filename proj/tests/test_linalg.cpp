#include <doctest.h>

#include "deltaspringer/linalg.hpp"

using namespace ds;

namespace {

SparseVec vec(std::initializer_list<std::pair<int, int>> entries) {
  SparseVec v;
  for (auto& [i, x] : entries) v.set(i, Rat(x));
  return v;
}

}  // namespace

TEST_CASE("sparse axpy merges and cancels") {
  SparseVec a = vec({{0, 1}, {2, 3}});
  SparseVec b = vec({{0, 1}, {1, 5}, {2, -3}});
  SparseVec r = sv_axpy(a, Rat(1), b);
  CHECK(r == vec({{0, 2}, {1, 5}}));
  CHECK(sv_axpy(a, Rat(-1), a).zero());
}

TEST_CASE("span solver expresses and rejects") {
  SpanSolver s;
  CHECK(s.add(vec({{0, 1}, {1, 1}})));
  CHECK(s.add(vec({{1, 1}, {2, 1}})));
  CHECK_FALSE(s.add(vec({{0, 1}, {2, 1}, {1, 2}})));  // sum of the two
  CHECK(s.dim() == 2);

  auto c = s.express(vec({{0, 2}, {1, 3}, {2, 1}}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rat(2));
  CHECK((*c)[1] == Rat(1));
  CHECK_FALSE(s.express(vec({{3, 1}})).has_value());
  CHECK_FALSE(s.express(vec({{0, 1}})).has_value());
  CHECK(s.express(SparseVec{}).has_value());
}

TEST_CASE("rank and nullspace of a small system") {
  // rows: x0 + x1 = 0, x1 + x2 = 0 over 4 columns
  SparseMatrix a;
  a.ncols = 4;
  a.rows = {vec({{0, 1}, {1, 1}}), vec({{1, 1}, {2, 1}})};
  CHECK(rank(a) == 2);
  auto ns = nullspace(a);
  REQUIRE(ns.size() == 2);
  for (const auto& x : ns)
    for (const auto& row : a.rows) {
      Rat dot(0);
      for (const auto& [i, c] : row.terms) {
        const Rat* xv = x.at(i);
        if (xv) dot += c * (*xv);
      }
      CHECK(dot == Rat(0));
    }
}

TEST_CASE("dense matrix arithmetic") {
  Mat a(2, 2);
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  CHECK(a * a == Mat::identity(2));
  CHECK((a - a).is_zero());
  CHECK(trace(a * a) == Rat(2));
  Mat half = Rat(1, 2) * Mat::identity(2);
  CHECK((half + half) == Mat::identity(2));
}
