#pragma once

#include <compare>
#include <string>
#include <vector>

#include "deltaspringer/params.hpp"

namespace ds {

struct DiagramError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Weight symbols. Down (v) sorts before Up (^); list orderings throughout
// the project are lexicographic on weight strings with this convention,
// which matches the tensor-space leading-term order.
enum class Sym : unsigned char { Down = 0, Up = 1 };

struct CupDiagram;

// A sequence over {down, up} of length n with k downs such that among the
// last m symbols no down sits left of an up.
struct DeltaWeight {
  ShapeParams params;
  std::vector<Sym> syms;  // 1-indexed vertices -> syms[v-1]

  static DeltaWeight make(const ShapeParams& p, std::vector<Sym> syms);
  Sym at(int v) const { return syms[v - 1]; }
  std::string str() const;  // e.g. "v^^v|^v"

  std::strong_ordering operator<=>(const DeltaWeight& o) const;
  bool operator==(const DeltaWeight& o) const;
};

// Crossingless matching with rays on n vertices. Every vertex right of the
// cut line (i.e. > n-m) must be a ray or the right endpoint of a cup.
struct CupDiagram {
  ShapeParams params;
  std::vector<std::pair<int, int>> cups;  // sorted by left endpoint, l < r
  std::vector<int> rays;                  // sorted

  // Validates all invariants: vertex partition, crossingless (including
  // no ray below a cup), cut condition. Throws DiagramError naming the
  // violated invariant.
  static CupDiagram make(const ShapeParams& p,
                         std::vector<std::pair<int, int>> cups,
                         std::vector<int> rays);

  int cup_count() const { return static_cast<int>(cups.size()); }
  // Cups entirely left of the cut line (both endpoints <= n-m).
  std::vector<std::pair<int, int>> left_cups() const;
  // Cups crossing the cut line, sorted by left endpoint.
  std::vector<std::pair<int, int>> crossing_cups() const;
  // -1 ray, 0 left endpoint, 1 right endpoint markers per vertex.
  enum class VertexRole { Ray, CupLeft, CupRight };
  VertexRole role(int v) const;
  int partner(int v) const;  // other endpoint of the cup at v; 0 for rays

  bool operator==(const CupDiagram& o) const;
  bool same_arcs(const CupDiagram& o) const {
    return cups == o.cups && rays == o.rays;
  }
};

// All delta cup diagrams with exactly k cups, ordered by canonical weight
// (lexicographic, down < up).
std::vector<CupDiagram> enumerate_cup_diagrams(const ShapeParams& p);

// All delta weights of type (n-k,k,m), same ordering.
std::vector<DeltaWeight> enumerate_weights(const ShapeParams& p);

// The cup diagram C(alpha): repeatedly match a down immediately left of an
// up (ignoring matched symbols), then attach rays. Stack-based, O(n). The
// diagram inherits the weight's type as its cup budget.
CupDiagram weight_to_cup(const DeltaWeight& w);

// Canonical preimage of the diagram's own type (budget params.k): down at
// cup left endpoints and on the last k - #cups rays, up everywhere else.
// Satisfies weight_to_cup(cup_to_weight(a)) == a arcwise.
DeltaWeight cup_to_weight(const CupDiagram& a);

// The unique weight with `downs` downs whose cup diagram is `a`: down at
// cup left endpoints, and the last (downs - #cups) rays are downs too.
// Throws if downs is out of range for the diagram.
DeltaWeight diagram_weight_of_type(const CupDiagram& a, int downs);

// Two-row (possibly skew) tableau filling with strictly decreasing rows
// and columns, entries drawn from {1..max_label}.
struct SkewFilling {
  int outer1 = 0, outer2 = 0;  // outer shape (outer1, outer2)
  int inner = 0;               // inner shape (inner) in row 1
  std::vector<int> row1, row2;

  static SkewFilling make(int outer1, int outer2, int inner,
                          std::vector<int> row1, std::vector<int> row2);
  std::string str() const;
};

// One row of the three-step bijection between column-strict fillings and
// delta cup diagrams: (filling of lambda' = (n-k-m, k-m),
// filling of lambda/(m), filling of lambda = (n-k, k), diagram).
struct FillingChainRow {
  SkewFilling small;  // lambda' filling
  SkewFilling skew;   // lambda/(m) filling
  SkewFilling full;   // lambda filling
  CupDiagram diagram;
};

std::vector<FillingChainRow> filling_chain(const ShapeParams& p);

// Connected components of the reflected concatenation bar(a) b.
struct CircleComponent {
  enum class Kind { Circle, PropagatingLine, NonPropagatingLine };
  Kind kind = Kind::Circle;
  std::vector<int> vertices;  // sorted ascending
  bool crosses_cut = false;
  // For lines: how many of the two loose ray ends sit right of the cut.
  int right_endpoints = 0;
};

struct CircleDiagram {
  CupDiagram lower;  // b, cups below
  CupDiagram upper;  // a, reflected on top
  std::vector<CircleComponent> components;  // ordered by smallest vertex
};

CircleDiagram circle_diagram(const CupDiagram& a, const CupDiagram& b);

// Intersection type of the components S_a and S_b of the topological
// model: empty, or a power of the 2-sphere.
struct IntersectionClass {
  bool empty = false;
  int ell = 0;  // S_a cap S_b is homeomorphic to (S^2)^ell when nonempty
};

IntersectionClass intersection_class(const CupDiagram& a, const CupDiagram& b);

// One-boundary diagram on the n-m points left of the cut: cut-crossing
// cups become half-cups keeping their left endpoint, the right part is
// dropped.
struct OneBoundaryDiagram {
  int points = 0;
  std::vector<std::pair<int, int>> cups;
  std::vector<int> rays;
  std::vector<int> half_cups;  // left endpoints, sorted

  bool operator==(const OneBoundaryDiagram& o) const = default;
};

OneBoundaryDiagram to_one_boundary(const CupDiagram& a);

// Weight string format: 'v' = down, '^' = up, optional '|' before the last
// m symbols ("v^^v|^v"). k is the number of downs.
DeltaWeight weight_from_string(const std::string& s,
                               ParamMode mode = ParamMode::AnyK);

}  // namespace ds
