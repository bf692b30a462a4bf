#include <doctest.h>

#include <numeric>

#include "deltaspringer/homology.hpp"
#include "deltaspringer/specht.hpp"

using namespace ds;

namespace {

// Independent character oracle for straight two-row shapes: the trace of a
// permutation on the b-subsets of {1..a+b} counts fixed subsets, and the
// irreducible character is the difference of two such permutation traces.
Int permutation_module_character(int a, int b, const CycleType& t) {
  int n = a + b;
  std::vector<int> perm(n + 1);
  int start = 1;
  for (int part : t.parts) {
    for (int i = start; i < start + part; ++i)
      perm[i] = (i + 1 - start) % part + start;
    start += part;
  }
  auto fixed_subsets = [&](int size) {
    long long count = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      bool fixed = true;
      for (int i = 1; i <= n && fixed; ++i)
        if ((mask >> (i - 1) & 1) != (mask >> (perm[i] - 1) & 1))
          fixed = false;
      if (fixed) ++count;
    }
    return count;
  };
  if (b == 0) return 1;
  return Int(static_cast<long>(fixed_subsets(b) - fixed_subsets(b - 1)));
}

}  // namespace

TEST_CASE("cycle types and class sizes") {
  auto types = all_cycle_types(4);
  CHECK(types.size() == 5);
  Int total = 0;
  for (const auto& t : types) total += conjugacy_class_size(t);
  CHECK(total == factorial(4));
  CHECK(conjugacy_class_size(CycleType::make({2, 1, 1})) == 6);
  CHECK(conjugacy_class_size(CycleType::make({4})) == 6);
}

TEST_CASE("tableau counting") {
  CHECK(skew_syt_count(TwoRowShape::straight(3, 0)) == 1);
  CHECK(skew_syt_count(TwoRowShape::straight(2, 1)) == 2);
  CHECK(skew_syt_count(TwoRowShape::straight(2, 2)) == 2);
  CHECK(skew_syt_count(TwoRowShape::skew_shape(3, 3, 2)) == 3);
  CHECK(skew_syt_count(TwoRowShape::skew_shape(5, 1, 2)) == 4);
  CHECK(skew_syt_count(TwoRowShape::skew_shape(4, 2, 2)) == 6);
  CHECK_THROWS_AS(TwoRowShape::straight(1, 2), SpechtError);
  CHECK_THROWS_AS(TwoRowShape::skew_shape(2, 1, 3), SpechtError);
}

TEST_CASE("murnaghan-nakayama basics") {
  CHECK(mn_character(TwoRowShape::straight(4, 0), CycleType::make({3, 1})) ==
        1);
  CHECK(mn_character(TwoRowShape::straight(1, 1), CycleType::make({2})) ==
        -1);
  CHECK(mn_character(TwoRowShape::straight(2, 1),
                     CycleType::make({1, 1, 1})) == 2);
}

TEST_CASE("murnaghan-nakayama agrees with the permutation-module trace") {
  for (int n = 1; n <= 7; ++n)
    for (int b = 0; 2 * b <= n; ++b) {
      TwoRowShape shape = TwoRowShape::straight(n - b, b);
      for (const auto& t : all_cycle_types(n))
        CHECK(mn_character(shape, t) ==
              permutation_module_character(n - b, b, t));
    }
}

TEST_CASE("murnaghan-nakayama at the identity counts tableaux") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= a; ++c) {
        if (a + b - c <= 0) continue;
        TwoRowShape s = c > 0 ? TwoRowShape::skew_shape(a, b, c)
                              : TwoRowShape::straight(a, b);
        std::vector<int> ones(s.cells(), 1);
        CHECK(mn_character(s, CycleType::make(ones)) ==
              Int(static_cast<long>(skew_syt_count(s))));
      }
}

TEST_CASE("decompose the worked block structure") {
  ShapeParams p = ShapeParams::make(6, 3, 2);
  auto d2 = decompose_homology_rep(p, 2);
  REQUIRE(d2.size() == 3);
  CHECK(d2[0].first == TwoRowShape::straight(4, 0));
  CHECK(d2[1].first == TwoRowShape::straight(3, 1));
  CHECK(d2[2].first == TwoRowShape::straight(2, 2));
  for (const auto& [s, m] : d2) CHECK(m == 1);

  auto d0 = decompose_homology_rep(p, 0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].first == TwoRowShape::straight(4, 0));

  // m = 0: a single irreducible summand in every degree
  ShapeParams p0 = ShapeParams::make(7, 3, 0);
  for (int d = 0; d <= 3; ++d) {
    auto dec = decompose_homology_rep(p0, d);
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == TwoRowShape::straight(7 - d, d));
    CHECK(dec[0].second == 1);
  }
}

TEST_CASE("filtration checks") {
  ShapeParams p = ShapeParams::make(6, 3, 2);
  for (int d = 0; d <= 3; ++d) CHECK(verify_filtration(p, d).all_pass());
  ShapeParams p8 = ShapeParams::make(8, 3, 2);
  for (int d = 0; d <= 3; ++d) CHECK(verify_filtration(p8, d).all_pass());
}

TEST_CASE("full character verification at several shapes") {
  for (auto [n, k, m] : std::vector<std::array<int, 3>>{
           {6, 3, 2}, {7, 3, 1}, {8, 4, 4}, {5, 2, 0}})
    CHECK(verify_specht(ShapeParams::make(n, k, m)).all_pass());
}
