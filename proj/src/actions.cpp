#include "deltaspringer/actions.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

namespace ds {

HeckeParams HeckeParams::springer(const ShapeParams& p) {
  HeckeParams h;
  h.size = p.cut();
  for (int d = 0; d <= h.size; ++d) h.xi.emplace_back(p.n + 1 - d);
  return h;
}

HeckeParams HeckeParams::zeros(const ShapeParams& p) {
  HeckeParams h;
  h.size = p.cut();
  h.xi.assign(h.size + 1, Rat(0));
  return h;
}

HeckeParams HeckeParams::from_values(int size, std::vector<Rat> xi) {
  if (static_cast<int>(xi.size()) != size + 1)
    throw IndexError("xi must have length size+1");
  return HeckeParams{size, std::move(xi)};
}

bool HeckeParams::is_springer(const ShapeParams& p) const {
  return *this == springer(p);
}

namespace {

Subset swap_bits(Subset u, int i, int j) {
  bool bi = u >> (i - 1) & 1, bj = u >> (j - 1) & 1;
  if (bi != bj) u ^= (Subset(1) << (i - 1)) | (Subset(1) << (j - 1));
  return u;
}

}  // namespace

HomVector transposition_line(int i, int j, const HomVector& v) {
  if (i < 1 || j <= i || j > v.size)
    throw IndexError("transposition indices out of range");
  HomVector r;
  r.size = v.size;
  for (const auto& [u, c] : v.terms) r.add(swap_bits(u, i, j), c);
  return r;
}

HomVector s_line(int i, const HomVector& v) {
  if (i < 1 || i >= v.size)
    throw IndexError("s_i requires 1 <= i < size");
  return transposition_line(i, i + 1, v);
}

namespace {

// Shared Dunkl kernel over rational working vectors; the public integral
// interface and the matrix assembly both funnel through here.
QLineVec dunkl_q(int i, const HeckeParams& xi, int nm, const QLineVec& v) {
  if (i < 1 || i > nm) throw IndexError("x_i requires 1 <= i <= size");
  QLineVec r;
  for (const auto& [u, c] : v) {
    int d = std::popcount(u);
    const Rat& xid = xi.xi[d];
    if (u >> (i - 1) & 1) {
      int missing_before = 0;
      for (int j = 1; j < i; ++j) missing_before += !(u >> (j - 1) & 1);
      qline_add(r, u, c * (xid + i - nm - missing_before));
      for (int j = i + 1; j <= nm; ++j)
        if (!(u >> (j - 1) & 1)) qline_add(r, swap_bits(u, i, j), -c);
    } else {
      int present_after = 0;
      for (int j = i + 1; j <= nm; ++j) present_after += (u >> (j - 1) & 1);
      qline_add(r, u, c * (i - nm + present_after));
      for (int j = 1; j < i; ++j)
        if (u >> (j - 1) & 1) qline_add(r, swap_bits(u, j, i), c);
    }
  }
  return r;
}

}  // namespace

HomVector dunkl(int i, const HeckeParams& xi, const HomVector& v) {
  const int nm = xi.size;
  if (v.size != nm) throw IndexError("vector size does not match parameters");
  QLineVec q = dunkl_q(i, xi, nm, qline_of(v));
  HomVector r;
  r.size = nm;
  for (const auto& [u, c] : q) {
    if (c.get_den() != 1)
      throw IndexError(
          "dunkl with non-integral xi leaves the integral span; use the "
          "matrix interface");
    r.add(u, c.get_num());
  }
  return r;
}

void WeightSum::add(const DeltaWeight& w, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

HomVector weight_sum_expand(const WeightSum& s, int size) {
  HomVector r;
  r.size = size;
  for (const auto& [w, c] : s.terms) r = hv_add(r, hv_scale(c, l_expand(w)));
  return r;
}

namespace {

// The cup-cap piece of the crossing at (i, i+1), excluding the bubble case
// (cup exactly at (i, i+1), handled by the caller). Joins the strands at i
// and i+1, inserts the new cup (i, i+1). Returns nullopt when the term
// dies: two joined rays make a removable cap, and a cup entirely right of
// the cut line is set to zero.
std::optional<CupDiagram> tl_cup_cap(const CupDiagram& d, int i) {
  const int cut = d.params.cut();
  int pi = d.partner(i), pj = d.partner(i + 1);
  std::vector<std::pair<int, int>> cups;
  std::vector<int> rays;
  for (auto& c : d.cups)
    if (c.first != i && c.second != i && c.first != i + 1 &&
        c.second != i + 1)
      cups.push_back(c);
  for (int v : d.rays)
    if (v != i && v != i + 1) rays.push_back(v);
  cups.emplace_back(i, i + 1);
  if (pi == 0 && pj == 0) return std::nullopt;  // cap removal
  if (pi != 0 && pj != 0) {
    int l = std::min(pi, pj), r = std::max(pi, pj);
    if (l > cut) return std::nullopt;  // cup entirely right of the cut
    cups.emplace_back(l, r);
  } else {
    rays.push_back(pi + pj);  // the surviving partner becomes a ray
  }
  return CupDiagram::make(d.params, std::move(cups), std::move(rays));
}

}  // namespace

WeightSum s_skein(int i, const DeltaWeight& w) {
  const int nm = w.params.cut();
  if (i < 1 || i >= nm) throw IndexError("s_i requires 1 <= i < n-m");
  CupDiagram d = weight_to_cup(w);
  WeightSum out;
  if (d.partner(i) == i + 1) {  // crossing over a cup: bubble gives -2+1
    out.add(w, -1);
    return out;
  }
  out.add(w, 1);
  if (auto rewired = tl_cup_cap(d, i))
    out.add(diagram_weight_of_type(*rewired, w.params.k), 1);
  return out;
}

WeightSum x_last_closed_form(const DeltaWeight& w) {
  const ShapeParams& p = w.params;
  const int cut = p.cut();
  const int m = p.m;
  CupDiagram d = weight_to_cup(w);
  WeightSum out;
  switch (d.role(cut)) {
    case CupDiagram::VertexRole::Ray:
      return out;  // zero
    case CupDiagram::VertexRole::CupLeft:
      out.add(w, m + 1);
      return out;
    case CupDiagram::VertexRole::CupRight:
      break;
  }
  auto crossing = d.crossing_cups();  // sorted by left endpoint
  const int r = static_cast<int>(crossing.size());
  std::vector<int> a;  // a_1 < ... < a_r and a_{r+1} at index r
  for (auto& c : crossing) a.push_back(c.first);
  a.push_back(d.partner(cut));  // a_{r+1}, left end of the cup closing at n-m
  // The idx-th summand moves the cup closing at n-m: its left endpoint set
  // gains n-m and loses a_{idx+1} (idx >= 1), or loses a_1 which becomes a
  // ray (idx = 0). Rebuilding from the left-endpoint set keeps the part
  // right of the cut consistent; the symbol-level rewrite would let the
  // matching steal an up-ray beyond the cut.
  std::vector<int> lefts0;
  for (auto& c : d.cups) lefts0.push_back(c.first);
  for (int idx = r; idx >= 0; --idx) {
    Int coeff = m - r + idx;
    if (coeff == 0) continue;  // covers the undefined alpha^0 at r = m
    std::vector<Sym> syms(p.n, Sym::Up);
    for (int v : lefts0) syms[v - 1] = Sym::Down;
    syms[a[idx] - 1] = Sym::Up;
    syms[cut - 1] = Sym::Down;
    int dd = d.cup_count();
    DeltaWeight raw = DeltaWeight::make(
        ShapeParams::make(p.n, dd, p.m, ParamMode::AnyK), std::move(syms));
    CupDiagram moved = weight_to_cup(raw);
    if (moved.cup_count() != dd)
      throw IndexError("moved cup diagram lost a cup");
    out.add(diagram_weight_of_type(moved, p.k), -coeff);
  }
  return out;
}

GeneratorRef GeneratorRef::parse(const std::string& s) {
  auto take = [&](const std::string& prefix,
                  GeneratorRef::Kind kind) -> std::optional<GeneratorRef> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = s.substr(prefix.size());
    if (rest.empty() ||
        rest.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return GeneratorRef{kind, std::stoi(rest)};
  };
  // longest prefixes first so "sprime3" is not read as sigma
  if (auto g = take("sprime", Kind::SPrime)) return *g;
  if (auto g = take("jmt", Kind::JTilde)) return *g;
  if (auto g = take("jm", Kind::J)) return *g;
  if (auto g = take("s", Kind::Sigma)) return *g;
  if (auto g = take("x", Kind::X)) return *g;
  throw IndexError("cannot parse generator '" + s +
                   "' (expected s<i>, x<i>, sprime<i>, jm<i>, jmt<i>)");
}

std::string GeneratorRef::str() const {
  switch (kind) {
    case Kind::Sigma:
      return "s" + std::to_string(index);
    case Kind::X:
      return "x" + std::to_string(index);
    case Kind::SPrime:
      return "sprime" + std::to_string(index);
    case Kind::J:
      return "jm" + std::to_string(index);
    case Kind::JTilde:
      return "jmt" + std::to_string(index);
  }
  return "?";
}

namespace {

QLineVec apply_generator(const GeneratorRef& g, const HeckeParams& xi,
                         int nm, const QLineVec& v) {
  QLineVec r;
  switch (g.kind) {
    case GeneratorRef::Kind::Sigma: {
      if (g.index < 1 || g.index >= nm)
        throw IndexError("s_i requires 1 <= i < size");
      for (const auto& [u, c] : v)
        qline_add(r, swap_bits(u, g.index, g.index + 1), c);
      return r;
    }
    case GeneratorRef::Kind::X:
      return dunkl_q(g.index, xi, nm, v);
    case GeneratorRef::Kind::SPrime: {
      if (g.index < 1 || g.index > nm)
        throw IndexError("s'_i requires 1 <= i <= size");
      for (const auto& [u, c] : v)
        qline_add(r, u, (u >> (g.index - 1) & 1) ? -c : c);
      return r;
    }
    case GeneratorRef::Kind::J: {
      if (g.index < 1 || g.index > nm)
        throw IndexError("J_i requires 1 <= i <= size");
      for (const auto& [u, c] : v)
        for (int j = 1; j < g.index; ++j)
          qline_add(r, swap_bits(u, j, g.index), c);
      return r;
    }
    case GeneratorRef::Kind::JTilde: {
      if (g.index < 1 || g.index > nm)
        throw IndexError("Jtilde_i requires 1 <= i <= size");
      for (const auto& [u, c] : v)
        for (int j = g.index + 1; j <= nm; ++j)
          qline_add(r, swap_bits(u, g.index, j), c);
      return r;
    }
  }
  throw IndexError("unknown generator");
}

std::vector<Subset> lines_block(int nm, int degree) {
  std::vector<Subset> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == degree) {
      Subset u = 0;
      for (int v : pick) u |= Subset(1) << (v - 1);
      out.push_back(u);
      return;
    }
    for (int v = from; v <= nm; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

std::string subset_label(Subset u) {
  std::string s = "{";
  bool first = true;
  for (int v : subset_elements(u)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace

OperatorMatrix operator_matrix(const GeneratorRef& g, BasisKind basis,
                               int degree, const ShapeParams& p,
                               const HeckeParams& xi) {
  p.validate();
  const int nm = p.cut();
  if (xi.size != nm) throw IndexError("xi size does not match params");
  OperatorMatrix out{g, basis, degree, p, {}, {}};
  if (basis == BasisKind::Lines) {
    if (degree < 0 || degree > nm) throw IndexError("degree out of range");
    auto block = lines_block(nm, degree);
    std::map<Subset, int, SubsetLess> index;
    for (size_t j = 0; j < block.size(); ++j)
      index[block[j]] = static_cast<int>(j);
    int dim = static_cast<int>(block.size());
    out.mat = Mat(dim, dim);
    for (int j = 0; j < dim; ++j) {
      out.labels.push_back(subset_label(block[j]));
      QLineVec unit;
      unit[block[j]] = 1;
      QLineVec img = apply_generator(g, xi, nm, unit);
      for (const auto& [u, c] : img) out.mat.at(index.at(u), j) = c;
    }
  } else {
    LBasis lb(p, degree);
    int dim = lb.dim();
    out.mat = Mat(dim, dim);
    for (int j = 0; j < dim; ++j) {
      out.labels.push_back(lb.weights()[j].str());
      QLineVec img =
          apply_generator(g, xi, nm, qline_of(lb.vectors()[j]));
      auto coords = lb.express(img);
      if (!coords)
        throw InstabilityError(
            "image of " + lb.weights()[j].str() + " under " + g.str() +
            " leaves span{L_alpha} (degree " + std::to_string(degree) + ")");
      for (int i = 0; i < dim; ++i) out.mat.at(i, j) = (*coords)[i];
    }
  }
  return out;
}

Mat evaluate_word(const GeneratorWord& word, BasisKind basis, int degree,
                  const ShapeParams& p, const HeckeParams& xi) {
  Mat acc;
  bool first = true;
  for (const auto& g : word) {
    Mat m = operator_matrix(g, basis, degree, p, xi).mat;
    acc = first ? m : acc * m;
    first = false;
  }
  if (first) {
    int dim = operator_matrix(GeneratorRef{GeneratorRef::Kind::X, 1}, basis,
                              degree, p, xi)
                  .mat.n;
    acc = Mat::identity(dim);
  }
  return acc;
}

namespace {

struct Block {
  int degree;
  std::vector<Mat> sigma;  // sigma[i-1], i = 1..nm-1
  std::vector<Mat> x;      // x[i-1], i = 1..nm
  int dim;
};

std::vector<Block> build_blocks(const ShapeParams& p, const HeckeParams& xi,
                                BasisKind basis, Report& report,
                                const std::string& prefix) {
  const int nm = p.cut();
  int dmax = (basis == BasisKind::L) ? p.k : nm;
  std::vector<Block> blocks;
  for (int d = 0; d <= dmax; ++d) {
    Block b;
    b.degree = d;
    bool ok = true;
    try {
      for (int i = 1; i < nm; ++i)
        b.sigma.push_back(operator_matrix({GeneratorRef::Kind::Sigma, i},
                                          basis, d, p, xi)
                              .mat);
      for (int i = 1; i <= nm; ++i)
        b.x.push_back(
            operator_matrix({GeneratorRef::Kind::X, i}, basis, d, p, xi).mat);
    } catch (const InstabilityError& e) {
      report.add(prefix + ".d" + std::to_string(d) + ".block", false,
                 e.what());
      ok = false;
    }
    if (!ok) continue;
    b.dim = b.x.empty() ? 0 : b.x[0].n;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

Report verify_hecke_relations(const ShapeParams& p, const HeckeParams& xi,
                              BasisKind basis) {
  Report rep;
  rep.suite = "hecke";
  const int nm = p.cut();
  auto blocks = build_blocks(p, xi, basis, rep, "hecke");
  for (const auto& b : blocks) {
    const std::string tag = "hecke.d" + std::to_string(b.degree) + ".";
    Mat id = Mat::identity(b.dim);
    bool pass = true;
    std::string wit;
    auto fail = [&](const std::string& w) {
      if (pass) wit = w;
      pass = false;
    };
    // sigma_i^2 = 1
    for (int i = 1; i < nm; ++i)
      if (!(b.sigma[i - 1] * b.sigma[i - 1] == id))
        fail("sigma_" + std::to_string(i) + "^2 != 1");
    rep.add(tag + "involution", pass, wit);

    pass = true;
    wit.clear();
    for (int i = 1; i < nm; ++i)
      for (int j = i + 2; j < nm; ++j)
        if (!(b.sigma[i - 1] * b.sigma[j - 1] ==
              b.sigma[j - 1] * b.sigma[i - 1]))
          fail("sigma_" + std::to_string(i) + " sigma_" + std::to_string(j));
    rep.add(tag + "sigma_commute", pass, wit);

    pass = true;
    wit.clear();
    for (int i = 1; i + 1 < nm; ++i)
      if (!(b.sigma[i - 1] * b.sigma[i] * b.sigma[i - 1] ==
            b.sigma[i] * b.sigma[i - 1] * b.sigma[i]))
        fail("braid at i=" + std::to_string(i));
    rep.add(tag + "braid", pass, wit);

    pass = true;
    wit.clear();
    for (int i = 1; i <= nm; ++i)
      for (int j = i + 1; j <= nm; ++j)
        if (!(b.x[i - 1] * b.x[j - 1] == b.x[j - 1] * b.x[i - 1]))
          fail("x_" + std::to_string(i) + " x_" + std::to_string(j));
    rep.add(tag + "x_commute", pass, wit);

    pass = true;
    wit.clear();
    for (int i = 1; i < nm; ++i)
      for (int j = 1; j <= nm; ++j) {
        if (j == i || j == i + 1) continue;
        if (!(b.sigma[i - 1] * b.x[j - 1] == b.x[j - 1] * b.sigma[i - 1]))
          fail("sigma_" + std::to_string(i) + " x_" + std::to_string(j));
      }
    rep.add(tag + "sigma_x_commute", pass, wit);

    pass = true;
    wit.clear();
    for (int i = 1; i < nm; ++i)
      if (!(b.x[i] * b.sigma[i - 1] - b.sigma[i - 1] * b.x[i - 1] == id))
        fail("x_{i+1} sigma_i - sigma_i x_i != 1 at i=" + std::to_string(i));
    rep.add(tag + "cross_relation", pass, wit);
  }
  return rep;
}

Report verify_stability(const ShapeParams& p, const HeckeParams& xi) {
  Report rep;
  rep.suite = "stability";
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  const int nm = p.cut();
  bool springer = xi.is_springer(p);
  for (int d = 0; d <= p.k; ++d) {
    LBasis lb(p, d);
    const std::string tag = "stability.d" + std::to_string(d) + ".";
    bool pass = true;
    std::string wit;
    for (int idx = 0; idx < lb.dim() && pass; ++idx)
      for (int i = 1; i < nm && pass; ++i)
        if (!lb.express(s_line(i, lb.vectors()[idx]))) {
          pass = false;
          wit = "s_" + std::to_string(i) + " on " +
                lb.weights()[idx].str() + " leaves the span";
        }
    rep.add(tag + "symmetric_group", pass, wit);

    pass = true;
    wit.clear();
    for (int idx = 0; idx < lb.dim() && pass; ++idx)
      for (int i = 1; i <= nm && pass; ++i)
        if (!lb.express(dunkl(i, xi, lb.vectors()[idx]))) {
          pass = false;
          wit = "x_" + std::to_string(i) + " on " + lb.weights()[idx].str() +
                " leaves the span";
        }
    rep.add(tag + "dunkl", pass, wit);

    if (springer) {
      pass = true;
      wit.clear();
      for (int idx = 0; idx < lb.dim() && pass; ++idx) {
        HomVector lhs =
            weight_sum_expand(x_last_closed_form(lb.weights()[idx]), nm);
        HomVector rhs = dunkl(nm, xi, lb.vectors()[idx]);
        if (!(lhs == rhs)) {
          pass = false;
          wit = "closed form differs from Dunkl on " +
                lb.weights()[idx].str();
        }
      }
      rep.add(tag + "closed_form_matches_dunkl", pass, wit);
    }
  }
  return rep;
}

Report verify_typec(const ShapeParams& p, const HeckeParams& xi) {
  Report rep;
  rep.suite = "typec";
  const int nm = p.cut();
  for (int d = 0; d <= nm; ++d) {
    bool pass = true;
    std::string wit;
    Mat id = Mat::identity(
        operator_matrix({GeneratorRef::Kind::SPrime, 1}, BasisKind::Lines, d,
                        p, xi)
            .mat.n);
    for (int i = 1; i <= nm; ++i) {
      Mat x =
          operator_matrix({GeneratorRef::Kind::X, i}, BasisKind::Lines, d, p,
                          xi)
              .mat;
      Mat sp = operator_matrix({GeneratorRef::Kind::SPrime, i},
                               BasisKind::Lines, d, p, xi)
                   .mat;
      Mat jm =
          operator_matrix({GeneratorRef::Kind::J, i}, BasisKind::Lines, d, p,
                          xi)
              .mat;
      Mat jmt = operator_matrix({GeneratorRef::Kind::JTilde, i},
                                BasisKind::Lines, d, p, xi)
                    .mat;
      Rat half(1, 2);
      Rat shift = xi.xi[d] - p.n + p.m + 1;
      Mat lhs = half * (id - sp) * (shift * id + jm) - half * (id + sp) * jmt;
      if (!(x == lhs)) {
        pass = false;
        wit = "identity fails for x_" + std::to_string(i) + " at degree " +
              std::to_string(d);
        break;
      }
    }
    rep.add("typec.d" + std::to_string(d), pass, wit);
  }
  return rep;
}

Report verify_extremal(const ShapeParams& p, const HeckeParams& xi) {
  Report rep;
  rep.suite = "extremal";
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  const int nm = p.cut();
  if (p.m == 0) {
    for (int d = 0; d <= p.k; ++d) {
      std::string tag = "extremal.m0.d" + std::to_string(d) + ".";
      try {
        Mat xn =
            operator_matrix({GeneratorRef::Kind::X, nm}, BasisKind::L, d, p,
                            xi)
                .mat;
        rep.add(tag + "x_n_zero", xn.is_zero(), "x_n is nonzero");
        bool pass = true;
        std::string wit;
        for (int i = 1; i <= nm; ++i) {
          Mat x = operator_matrix({GeneratorRef::Kind::X, i}, BasisKind::L,
                                  d, p, xi)
                      .mat;
          Mat jmt = operator_matrix({GeneratorRef::Kind::JTilde, i},
                                    BasisKind::L, d, p, xi)
                        .mat;
          if (!(x == Rat(-1) * jmt)) {
            pass = false;
            wit = "x_" + std::to_string(i) + " != -Jtilde_" +
                  std::to_string(i);
            break;
          }
        }
        rep.add(tag + "x_equals_minus_jmt", pass, wit);
      } catch (const InstabilityError& e) {
        rep.add(tag + "block", false, e.what());
      }
    }
  }
  if (p.m == p.k) {
    auto b = betti(p);
    bool pass = true;
    std::string wit;
    Int binom = 1;
    for (int d = 0; d <= p.k; ++d) {
      if (Int(static_cast<long>(b[d])) != binom) {
        pass = false;
        wit = "b_" + std::to_string(d) + " = " + std::to_string(b[d]) +
              " != C(n-k," + std::to_string(d) + ")";
        break;
      }
      binom = binom * (p.n - p.k - d) / (d + 1);
    }
    rep.add("extremal.mk.betti_binomial", pass, wit);
  }
  rep.merge(verify_typec(p, xi));
  return rep;
}

}  // namespace ds
