#pragma once

#include <map>
#include <string>
#include <vector>

#include "deltaspringer/actions.hpp"
#include "deltaspringer/diagrams.hpp"
#include "deltaspringer/json_io.hpp"
#include "deltaspringer/rational.hpp"
#include "deltaspringer/report.hpp"

namespace ds {

// Basis element of V^{(n-m) tensor factors} tensor S^m V: a sign pattern
// for the V factors and the symmetric-power index. minus < plus with the
// leftmost disagreement deciding, then the index; p-vectors are
// unitriangular against this order.
struct TensorBasisElt {
  std::vector<unsigned char> eps;  // 0 = minus, 1 = plus
  int i = 0;

  auto operator<=>(const TensorBasisElt&) const = default;
  std::string eps_str() const;
};

struct TensorVector {
  int nv = 0;  // number of V factors (= n - m)
  int m = 0;   // symmetric power
  std::map<TensorBasisElt, Int> terms;

  void add(const TensorBasisElt& e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool zero() const { return terms.empty(); }
  bool operator==(const TensorVector& o) const {
    return nv == o.nv && m == o.m && terms == o.terms;
  }
};

TensorVector tv_add(const TensorVector& a, const TensorVector& b);
TensorVector tv_scale(const Int& c, const TensorVector& a);

json tensorvector_to_json(const TensorVector& v);
TensorVector tensorvector_from_json(const json& j);

enum class Gl2Op { H1, H2, E, F };

// Single-factor action; position nv+1 is the S^m V factor.
TensorVector gl2_apply(Gl2Op op, int pos, const TensorVector& v);

// Casimir h1&h1 + h2&h2 + e&f + f&e applied at the factor pair (p, q);
// on two V factors this is the transposition of the factors.
TensorVector casimir(int p, int q, const TensorVector& v);

// Highest-weight vector attached to a cup diagram: antisymmetric pair per
// cup left of the cut, v_+ per left ray, and the alternating vector w_r
// spanning the crossing-cup left endpoints and the S^m V factor.
TensorVector p_vector(const CupDiagram& a);

struct GL2Weight {
  Int w1, w2;
};

// Global raising operator annihilates v and (h1, h2) eigenvalues match.
bool highest_weight_check(const TensorVector& v, const GL2Weight& expected,
                          std::string* why = nullptr);

// Schur-Weyl action: sigma_i acts by the Casimir at (i, i+1) and x_i by
// m*id minus the sum of Casimirs at (i, j) for j > i including the
// symmetric factor. Only Sigma and X generators are meaningful here.
TensorVector hecke_tensor(const GeneratorRef& g, const TensorVector& v);

// Checks that L_alpha -> p_{C(alpha)} intertwines sigma_1..sigma_{n-m-1}
// and x_{n-m} (homology side at the Springer parameters) on the degree-2d
// basis. A not-expressible right-hand side is reported, never swallowed.
Report equivariance_check(const ShapeParams& p, int degree);

// Dimension of {M : M rho(g) = rho(g) M} on the degree-2d weight-class
// block; generators sigma_1..sigma_{n-m-1} and x_{n-m} (Springer
// parameters), or the symmetric group alone as a reducibility control.
long long commutant_dimension(const ShapeParams& p, int degree,
                              bool symmetric_group_only = false);

}  // namespace ds
