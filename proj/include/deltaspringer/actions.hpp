#pragma once

#include <map>
#include <string>
#include <vector>

#include "deltaspringer/homology.hpp"
#include "deltaspringer/linalg.hpp"
#include "deltaspringer/report.hpp"

namespace ds {

struct IndexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a vector that the theory says should lie in span{L_alpha}
// does not: the mathematically meaningful negative outcome for unstable
// parameter choices, distinct from a crash.
struct InstabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters xi_0..xi_{size} of the Dunkl action; the diagonal term of the
// operator on a degree-d block reads xi_d.
struct HeckeParams {
  int size = 0;  // n - m
  std::vector<Rat> xi;

  static HeckeParams springer(const ShapeParams& p);  // xi_d = n + 1 - d
  static HeckeParams zeros(const ShapeParams& p);
  static HeckeParams from_values(int size, std::vector<Rat> xi);
  bool is_springer(const ShapeParams& p) const;
  bool operator==(const HeckeParams& o) const = default;
};

// Permutation action on line diagrams: relabel each subset by (i, i+1).
HomVector s_line(int i, const HomVector& v);
// Action of an arbitrary transposition (i j), i < j.
HomVector transposition_line(int i, int j, const HomVector& v);

// Dunkl operator D_i on line diagrams; degree preserving.
HomVector dunkl(int i, const HeckeParams& xi, const HomVector& v);

// Formal integer combination of weights (all of one type).
struct WeightSum {
  std::map<DeltaWeight, Int> terms;
  void add(const DeltaWeight& w, const Int& c);
  bool operator==(const WeightSum& o) const { return terms == o.terms; }
};

// Sum of c_alpha * L_alpha as a homology vector.
HomVector weight_sum_expand(const WeightSum& s, int size);

// Transposition s_i acting on the weight class by stacking the crossing on
// the cup diagram and resolving: isotopy, crossing = cup-cap + identity,
// bubble = -2, cap = 0, and diagrams with a cup entirely right of the cut
// line are dropped. Results are re-expressed as weights of the input type.
WeightSum s_skein(int i, const DeltaWeight& w);

// Closed form for x_{n-m} on a weight class (ray -> 0, cup left endpoint
// -> (m+1), cup right endpoint -> the moved-cup sum with coefficients
// -(m-r+i)). Matches dunkl(n-m, springer xi, .) termwise.
WeightSum x_last_closed_form(const DeltaWeight& w);

struct GeneratorRef {
  enum class Kind { Sigma, X, SPrime, J, JTilde };
  Kind kind = Kind::Sigma;
  int index = 0;

  // "s2", "x4", "sprime3", "jm2" (J_2), "jmt2" (Jtilde_2)
  static GeneratorRef parse(const std::string& s);
  std::string str() const;
};

using GeneratorWord = std::vector<GeneratorRef>;

enum class BasisKind { Lines, L };

struct OperatorMatrix {
  GeneratorRef gen;
  BasisKind basis = BasisKind::Lines;
  int degree = 0;
  ShapeParams params;
  std::vector<std::string> labels;  // basis labels, canonical order
  Mat mat;                          // column j = image of basis vector j
};

// Exact matrix of one generator on one degree block. L-basis columns are
// computed through the action followed by the change of basis; when that
// fails (parameters outside the stable range) an InstabilityError carries
// the witness.
OperatorMatrix operator_matrix(const GeneratorRef& g, BasisKind basis,
                               int degree, const ShapeParams& p,
                               const HeckeParams& xi);

Mat evaluate_word(const GeneratorWord& word, BasisKind basis, int degree,
                  const ShapeParams& p, const HeckeParams& xi);

// The six defining relation families as exact matrix identities on every
// degree block of the chosen basis.
Report verify_hecke_relations(const ShapeParams& p, const HeckeParams& xi,
                              BasisKind basis);

// Stability of span{L_alpha} under every Dunkl operator and transposition;
// with the Springer parameters also checks the closed form for x_{n-m}
// against the Dunkl computation column by column.
Report verify_stability(const ShapeParams& p, const HeckeParams& xi);

// The signed-permutation / Jucys-Murphy identity for x_i on the full lines
// basis, degree by degree.
Report verify_typec(const ShapeParams& p, const HeckeParams& xi);

// Extremal cases: m=0 (x_{n} acts by zero, x_i by -Jtilde_i on the weight
// classes) and m=k (Betti numbers are binomial coefficients), plus the
// lines-basis identity of verify_typec.
Report verify_extremal(const ShapeParams& p, const HeckeParams& xi);

}  // namespace ds
