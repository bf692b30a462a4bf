#pragma once

#include <compare>
#include <string>
#include <vector>

#include "deltaspringer/actions.hpp"
#include "deltaspringer/rational.hpp"
#include "deltaspringer/report.hpp"

namespace ds {

struct SpechtError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two-row shape, straight (a,b) or skew (a,b)/(c) with the inner strip in
// the first row.
struct TwoRowShape {
  bool skew = false;
  int a = 0, b = 0, c = 0;

  static TwoRowShape straight(int a, int b);
  static TwoRowShape skew_shape(int a, int b, int c);
  int cells() const { return a + b - c; }
  std::string str() const;
  auto operator<=>(const TwoRowShape&) const = default;
};

struct CycleType {
  std::vector<int> parts;  // weakly decreasing positive, sum = group size

  static CycleType make(std::vector<int> parts);
  int size() const;
  std::string str() const;
};

// All partitions of n, deterministic order (descending lexicographic).
std::vector<CycleType> all_cycle_types(int n);
Int factorial(int n);
Int conjugacy_class_size(const CycleType& t);

// Standard tableau count by exhaustive lattice-path counting (no hook or
// determinant formula; this is the independent oracle).
long long skew_syt_count(const TwoRowShape& shape);

// Murnaghan-Nakayama ribbon recursion, memoized per call.
Int mn_character(const TwoRowShape& shape, const CycleType& t);

// Trace of one permutation of each cycle type on the degree-2d block,
// class representatives built from consecutive cycles as products of
// adjacent transpositions. Index order matches all_cycle_types(n-m).
std::vector<Rat> block_traces(const ShapeParams& p, int degree);

// Multiplicities of the straight two-row Specht characters in the
// degree-2d block, by exact character inner products. Throws SpechtError
// on a negative or non-integral multiplicity.
std::vector<std::pair<TwoRowShape, long long>> decompose_homology_rep(
    const ShapeParams& p, int degree);

// Filtration by the number of cut-crossing cups: stability of each layer
// under the skein action, vanishing below max(0, 2d+m-n), fullness at
// min(d,m), and layer dimensions equal to straight-shape tableau counts.
Report verify_filtration(const ShapeParams& p, int degree);

// Character-level verification of the decomposition at every degree, plus
// Betti-number/tableau-count matching and the filtration checks.
Report verify_specht(const ShapeParams& p);

}  // namespace ds
