#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "deltaspringer/diagrams.hpp"
#include "deltaspringer/json_io.hpp"
#include "deltaspringer/rational.hpp"

namespace ds {

// Subsets of {1..size} as bitmasks (bit v-1 = vertex v); size <= 63 is the
// documented desk-scale contract.
using Subset = std::uint64_t;

inline Subset subset_of(std::initializer_list<int> vs) {
  Subset u = 0;
  for (int v : vs) u |= Subset(1) << (v - 1);
  return u;
}
std::vector<int> subset_elements(Subset u);
// Order by sorted element tuples, lexicographic; this is the basis order
// for degree blocks and makes the left-endpoint leading term minimal.
bool subset_lex_less(Subset a, Subset b);

struct SubsetLess {
  bool operator()(Subset a, Subset b) const { return subset_lex_less(a, b); }
};

// Exact-integer vector in the line-diagram basis of H_*((S^2)^size).
struct HomVector {
  int size = 0;
  std::map<Subset, Int, SubsetLess> terms;  // zero-free

  static HomVector line(int size, Subset u) {
    HomVector v;
    v.size = size;
    v.terms[u] = 1;
    return v;
  }
  void add(Subset u, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(u, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool zero() const { return terms.empty(); }
  // Degree-homogeneous: every subset has the same cardinality (vacuously
  // true for 0). Returns that cardinality, or nullopt if mixed.
  std::optional<int> homogeneous_degree() const;
  bool operator==(const HomVector& o) const {
    return size == o.size && terms == o.terms;
  }
};

HomVector hv_add(const HomVector& a, const HomVector& b);
HomVector hv_scale(const Int& c, const HomVector& a);

json homvector_to_json(const HomVector& v);
HomVector homvector_from_json(const json& j);

// The signed expansion data of a weight class: subsets and sign exponents.
struct LExpansion {
  DeltaWeight weight;
  CupDiagram diagram;               // C(weight)
  std::vector<Subset> subsets;      // one endpoint per left cup, left ends
                                    // of crossing cups; 2^{#left cups} many
  std::vector<int> sign_exponents;  // right endpoints of cups inside U
  HomVector vector() const;
};

LExpansion l_expansion(const DeltaWeight& w);
// L_alpha = sum over U of (-1)^{Lambda_alpha(U)} l_U.
HomVector l_expand(const DeltaWeight& w);

// All weights of the given type whose diagram has d cups, canonical order,
// paired with their expansions. Strict params, 0 <= d <= k.
std::vector<std::pair<DeltaWeight, HomVector>> homology_basis(
    const ShapeParams& p, int degree);

// b_d = #{alpha : C(alpha) has d cups}, d = 0..k.
std::vector<long long> betti(const ShapeParams& p);

struct LCoordinates {
  bool in_span = false;
  std::map<DeltaWeight, Rat> coords;  // zero coefficients omitted
};

// Exact change of basis into {L_alpha} at one degree. Degree-homogeneity
// of v (at 2*degree) is checked; a nonzero residual yields in_span=false.
LCoordinates to_L_basis(const HomVector& v, const ShapeParams& p, int degree);

// Rational-coefficient working vector over line diagrams; the public
// HomVector stays integral, matrix columns may pick up rational xi.
using QLineVec = std::map<Subset, Rat, SubsetLess>;
void qline_add(QLineVec& v, Subset u, const Rat& c);
QLineVec qline_of(const HomVector& v);

// Cached per-(params,degree) solver handle for repeated expansions.
class LBasis {
 public:
  LBasis(const ShapeParams& p, int degree);
  const std::vector<DeltaWeight>& weights() const { return weights_; }
  const std::vector<HomVector>& vectors() const { return vectors_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  // Coordinates in basis order, or nullopt when not in the span.
  std::optional<std::vector<Rat>> express(const HomVector& v) const;
  std::optional<std::vector<Rat>> express(const QLineVec& v) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::vector<DeltaWeight> weights_;
  std::vector<HomVector> vectors_;
};

}  // namespace ds
