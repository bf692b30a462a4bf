#pragma once

#include <stdexcept>
#include <string>

namespace ds {

struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameter regimes. Variety-level statements need the strict regime
// (two-row partition shape with m <= k); the plain diagram/weight
// combinatorics makes sense for any 0 <= m <= n, and a few worked cases
// even use more downs than ups, which AnyK admits explicitly.
enum class ParamMode { Strict, Relaxed, AnyK };

// The triple (n, k, m): n vertices, k cups / downs, cut line drawn between
// vertices n-m and n-m+1. Vertices are 1-indexed throughout.
struct ShapeParams {
  int n = 0;
  int k = 0;
  int m = 0;
  ParamMode mode = ParamMode::Strict;

  static ShapeParams make(int n, int k, int m,
                          ParamMode mode = ParamMode::Strict) {
    ShapeParams p{n, k, m, mode};
    p.validate();
    return p;
  }

  void validate() const {
    if (n < 1) throw ParamError("n must be >= 1");
    if (m < 0 || m > n) throw ParamError("m must satisfy 0 <= m <= n");
    if (k < 0) throw ParamError("k must be >= 0");
    switch (mode) {
      case ParamMode::Strict:
        if (k > n / 2) throw ParamError("strict mode requires k <= floor(n/2)");
        if (m > k) throw ParamError("strict mode requires m <= k");
        break;
      case ParamMode::Relaxed:
        if (k > n / 2)
          throw ParamError("relaxed mode requires k <= floor(n/2)");
        break;
      case ParamMode::AnyK:
        if (k > n) throw ParamError("k must be <= n");
        break;
    }
  }

  // Number of vertices left of the cut line; also the ambient rank n-m of
  // the sphere-product model and the size of the acting symmetric group.
  int cut() const { return n - m; }

  bool same_shape(const ShapeParams& o) const {
    return n == o.n && k == o.k && m == o.m;
  }

  std::string str() const {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," +
           std::to_string(m) + ")";
  }
};

}  // namespace ds
