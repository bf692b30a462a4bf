#include "deltaspringer/tensor.hpp"

#include <algorithm>

#include "deltaspringer/homology.hpp"
#include "deltaspringer/linalg.hpp"

namespace ds {

std::string TensorBasisElt::eps_str() const {
  std::string s;
  for (unsigned char e : eps) s.push_back(e ? '+' : '-');
  return s;
}

TensorVector tv_add(const TensorVector& a, const TensorVector& b) {
  if (a.nv != b.nv || a.m != b.m)
    throw DiagramError("tensor vector shape mismatch");
  TensorVector r = a;
  for (const auto& [e, c] : b.terms) r.add(e, c);
  return r;
}

TensorVector tv_scale(const Int& c, const TensorVector& a) {
  TensorVector r;
  r.nv = a.nv;
  r.m = a.m;
  if (c == 0) return r;
  for (const auto& [e, x] : a.terms) r.terms[e] = c * x;
  return r;
}

json tensorvector_to_json(const TensorVector& v) {
  json j;
  j["n_v"] = v.nv;
  j["m"] = v.m;
  json terms = json::array();
  for (const auto& [e, c] : v.terms) {
    json t;
    t["eps"] = e.eps_str();
    t["i"] = e.i;
    t["c"] = int_str(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

TensorVector tensorvector_from_json(const json& j) {
  TensorVector v;
  v.nv = j.at("n_v").get<int>();
  v.m = j.at("m").get<int>();
  for (const auto& t : j.at("terms")) {
    TensorBasisElt e;
    std::string eps = t.at("eps").get<std::string>();
    if (static_cast<int>(eps.size()) != v.nv)
      throw DiagramError("eps length must equal n_v");
    for (char c : eps) {
      if (c != '+' && c != '-') throw DiagramError("eps must be +/- string");
      e.eps.push_back(c == '+');
    }
    e.i = t.at("i").get<int>();
    if (e.i < 0 || e.i > v.m)
      throw DiagramError("symmetric index out of range");
    v.add(e, Int(t.at("c").get<std::string>()));
  }
  return v;
}

TensorVector gl2_apply(Gl2Op op, int pos, const TensorVector& v) {
  if (pos < 1 || pos > v.nv + 1)
    throw IndexError("tensor position out of range");
  TensorVector r;
  r.nv = v.nv;
  r.m = v.m;
  for (const auto& [e, c] : v.terms) {
    if (pos <= v.nv) {
      bool plus = e.eps[pos - 1];
      switch (op) {
        case Gl2Op::H1:
          if (plus) r.add(e, c);
          break;
        case Gl2Op::H2:
          if (!plus) r.add(e, c);
          break;
        case Gl2Op::E:
          if (!plus) {
            TensorBasisElt f = e;
            f.eps[pos - 1] = 1;
            r.add(f, c);
          }
          break;
        case Gl2Op::F:
          if (plus) {
            TensorBasisElt f = e;
            f.eps[pos - 1] = 0;
            r.add(f, c);
          }
          break;
      }
    } else {
      int i = e.i;
      switch (op) {
        case Gl2Op::H1:
          r.add(e, c * (v.m - i));
          break;
        case Gl2Op::H2:
          r.add(e, c * i);
          break;
        case Gl2Op::E:
          if (i > 0) {
            TensorBasisElt f = e;
            f.i = i - 1;
            r.add(f, c * i);
          }
          break;
        case Gl2Op::F:
          if (i < v.m) {
            TensorBasisElt f = e;
            f.i = i + 1;
            r.add(f, c * (v.m - i));
          }
          break;
      }
    }
  }
  return r;
}

TensorVector casimir(int p, int q, const TensorVector& v) {
  if (p < 1 || q <= p || q > v.nv + 1)
    throw IndexError("casimir positions must satisfy 1 <= p < q <= n_v+1");
  TensorVector r = gl2_apply(Gl2Op::H1, p, gl2_apply(Gl2Op::H1, q, v));
  r = tv_add(r, gl2_apply(Gl2Op::H2, p, gl2_apply(Gl2Op::H2, q, v)));
  r = tv_add(r, gl2_apply(Gl2Op::E, p, gl2_apply(Gl2Op::F, q, v)));
  r = tv_add(r, gl2_apply(Gl2Op::F, p, gl2_apply(Gl2Op::E, q, v)));
  return r;
}

TensorVector p_vector(const CupDiagram& a) {
  const int nv = a.params.cut();
  const int m = a.params.m;
  // Expand the product term by term: (assignment of eps on placed
  // positions, symmetric index, sign).
  struct Partial {
    std::vector<signed char> eps;  // -1 unset, 0 minus, 1 plus
    int i = 0;
    Int c = 1;
  };
  std::vector<Partial> acc{Partial{std::vector<signed char>(nv, -1), 0, 1}};
  for (auto& [l, r] : a.left_cups()) {
    std::vector<Partial> next;
    for (const auto& t : acc) {
      Partial t1 = t;
      t1.eps[l - 1] = 0;
      t1.eps[r - 1] = 1;
      next.push_back(t1);  // v_- v_+
      Partial t2 = t;
      t2.eps[l - 1] = 1;
      t2.eps[r - 1] = 0;
      t2.c = -t2.c;  // - v_+ v_-
      next.push_back(t2);
    }
    acc = std::move(next);
  }
  for (int v = 1; v <= nv; ++v)
    if (a.role(v) == CupDiagram::VertexRole::Ray)
      for (auto& t : acc) t.eps[v - 1] = 1;  // v_+
  auto crossing = a.crossing_cups();
  const int r = static_cast<int>(crossing.size());
  if (r > 0) {
    std::vector<Partial> next;
    for (const auto& t : acc)
      for (int mask = 0; mask < (1 << r); ++mask) {
        Partial t2 = t;
        int bits = 0;
        for (int j = 0; j < r; ++j) {
          bool plus = mask >> j & 1;
          t2.eps[crossing[j].first - 1] = plus ? 1 : 0;
          bits += plus;
        }
        t2.i = bits;
        if (bits % 2) t2.c = -t2.c;
        next.push_back(t2);
      }
    acc = std::move(next);
  }
  TensorVector out;
  out.nv = nv;
  out.m = m;
  for (const auto& t : acc) {
    TensorBasisElt e;
    for (signed char s : t.eps) {
      if (s < 0) throw DiagramError("unplaced tensor position");
      e.eps.push_back(static_cast<unsigned char>(s));
    }
    e.i = t.i;
    out.add(e, t.c);
  }
  return out;
}

bool highest_weight_check(const TensorVector& v, const GL2Weight& expected,
                          std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (v.zero()) return fail("zero vector");
  TensorVector e, h1, h2;
  e.nv = h1.nv = h2.nv = v.nv;
  e.m = h1.m = h2.m = v.m;
  for (int pos = 1; pos <= v.nv + 1; ++pos) {
    e = tv_add(e, gl2_apply(Gl2Op::E, pos, v));
    h1 = tv_add(h1, gl2_apply(Gl2Op::H1, pos, v));
    h2 = tv_add(h2, gl2_apply(Gl2Op::H2, pos, v));
  }
  if (!e.zero()) return fail("raising operator does not annihilate");
  if (!(h1 == tv_scale(expected.w1, v)))
    return fail("h1 eigenvalue differs from " + int_str(expected.w1));
  if (!(h2 == tv_scale(expected.w2, v)))
    return fail("h2 eigenvalue differs from " + int_str(expected.w2));
  return true;
}

TensorVector hecke_tensor(const GeneratorRef& g, const TensorVector& v) {
  switch (g.kind) {
    case GeneratorRef::Kind::Sigma:
      if (g.index < 1 || g.index >= v.nv)
        throw IndexError("s_i requires 1 <= i < n_v");
      return casimir(g.index, g.index + 1, v);
    case GeneratorRef::Kind::X: {
      if (g.index < 1 || g.index > v.nv)
        throw IndexError("x_i requires 1 <= i <= n_v");
      TensorVector r = tv_scale(v.m, v);
      for (int j = g.index + 1; j <= v.nv + 1; ++j)
        r = tv_add(r, tv_scale(-1, casimir(g.index, j, v)));
      return r;
    }
    default:
      throw IndexError("tensor action is defined for sigma and x only");
  }
}

namespace {

// Dense coordinate of a basis element inside the full tensor space.
int elt_rank(const TensorBasisElt& e, int m) {
  int enc = 0;
  for (size_t j = 0; j < e.eps.size(); ++j)
    if (e.eps[j]) enc |= 1 << j;
  return enc * (m + 1) + e.i;
}

SparseVec tensor_to_sparse(const TensorVector& v) {
  SparseVec s;
  for (const auto& [e, c] : v.terms) s.set(elt_rank(e, v.m), Rat(c));
  return s;
}

std::vector<GeneratorRef> action_generators(int nm,
                                            bool symmetric_group_only) {
  std::vector<GeneratorRef> gens;
  for (int i = 1; i < nm; ++i)
    gens.push_back({GeneratorRef::Kind::Sigma, i});
  if (!symmetric_group_only) gens.push_back({GeneratorRef::Kind::X, nm});
  return gens;
}

}  // namespace

Report equivariance_check(const ShapeParams& p, int degree) {
  Report rep;
  rep.suite = "equivariance";
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  const int nm = p.cut();
  if (nm > 20)
    throw IndexError("tensor-space checks cap at n-m <= 20");
  HeckeParams xi = HeckeParams::springer(p);
  LBasis lb(p, degree);
  const std::string tag = "equivariance.d" + std::to_string(degree) + ".";

  std::vector<TensorVector> pvecs;
  SpanSolver psolver;
  bool independent = true;
  for (int j = 0; j < lb.dim(); ++j) {
    pvecs.push_back(p_vector(weight_to_cup(lb.weights()[j])));
    if (!psolver.add(tensor_to_sparse(pvecs.back()))) independent = false;
  }
  rep.add(tag + "p_basis_independent", independent,
          "p-vectors are linearly dependent");
  if (!independent) return rep;

  for (const auto& g : action_generators(nm, false)) {
    bool pass = true;
    std::string wit;
    Mat lmat;
    try {
      lmat = operator_matrix(g, BasisKind::L, degree, p, xi).mat;
    } catch (const InstabilityError& e) {
      rep.add(tag + g.str(), false, e.what());
      continue;
    }
    for (int j = 0; j < lb.dim() && pass; ++j) {
      TensorVector rhs = hecke_tensor(g, pvecs[j]);
      auto coords = psolver.express(tensor_to_sparse(rhs));
      if (!coords) {
        pass = false;
        wit = "not expressible: " + g.str() + " on p-vector of " +
              lb.weights()[j].str();
        break;
      }
      for (int i = 0; i < lb.dim(); ++i)
        if ((*coords)[i] != lmat.at(i, j)) {
          pass = false;
          wit = g.str() + " disagrees at column " + lb.weights()[j].str() +
                ", row " + lb.weights()[i].str();
          break;
        }
    }
    rep.add(tag + g.str(), pass, wit);
  }
  return rep;
}

long long commutant_dimension(const ShapeParams& p, int degree,
                              bool symmetric_group_only) {
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  const int nm = p.cut();
  HeckeParams xi = HeckeParams::springer(p);
  const int b = LBasis(p, degree).dim();
  if (b == 0) return 0;
  std::vector<Mat> rho;
  for (const auto& g : action_generators(nm, symmetric_group_only))
    rho.push_back(operator_matrix(g, BasisKind::L, degree, p, xi).mat);
  if (rho.empty()) return static_cast<long long>(b) * b;
  // Unknown M is b x b; constraint rows of M rho(g) - rho(g) M = 0.
  SparseMatrix sys;
  sys.ncols = b * b;
  for (const Mat& r : rho)
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        std::map<int, Rat> row;
        for (int l = 0; l < b; ++l) {
          if (r.at(l, j) != 0) row[i * b + l] += r.at(l, j);
          if (r.at(i, l) != 0) row[l * b + j] -= r.at(i, l);
        }
        SparseVec sv;
        for (const auto& [idx, c] : row)
          if (c != 0) sv.terms.emplace_back(idx, c);
        if (!sv.zero()) sys.rows.push_back(std::move(sv));
      }
  return static_cast<long long>(nullspace(sys).size());
}

}  // namespace ds
