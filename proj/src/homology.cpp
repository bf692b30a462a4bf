#include "deltaspringer/homology.hpp"

#include <bit>
#include <memory>

#include "deltaspringer/linalg.hpp"

namespace ds {

std::vector<int> subset_elements(Subset u) {
  std::vector<int> out;
  while (u) {
    int b = std::countr_zero(u);
    out.push_back(b + 1);
    u &= u - 1;
  }
  return out;
}

bool subset_lex_less(Subset a, Subset b) {
  while (a && b) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::optional<int> HomVector::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [u, c] : terms) {
    int k = std::popcount(u);
    if (!d)
      d = k;
    else if (*d != k)
      return std::nullopt;
  }
  return d ? d : std::optional<int>(0);
}

HomVector hv_add(const HomVector& a, const HomVector& b) {
  if (a.size != b.size) throw DiagramError("homology vector size mismatch");
  HomVector r = a;
  for (const auto& [u, c] : b.terms) r.add(u, c);
  return r;
}

HomVector hv_scale(const Int& c, const HomVector& a) {
  HomVector r;
  r.size = a.size;
  if (c == 0) return r;
  for (const auto& [u, x] : a.terms) r.terms[u] = c * x;
  return r;
}

json homvector_to_json(const HomVector& v) {
  json j;
  j["size"] = v.size;
  json terms = json::array();
  for (const auto& [u, c] : v.terms) {
    json t;
    t["U"] = subset_elements(u);
    t["c"] = int_str(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

HomVector homvector_from_json(const json& j) {
  HomVector v;
  v.size = j.at("size").get<int>();
  for (const auto& t : j.at("terms")) {
    Subset u = 0;
    for (const auto& e : t.at("U")) {
      int x = e.get<int>();
      if (x < 1 || x > v.size)
        throw DiagramError("subset element out of range");
      u |= Subset(1) << (x - 1);
    }
    v.add(u, Int(t.at("c").get<std::string>()));
  }
  return v;
}

LExpansion l_expansion(const DeltaWeight& w) {
  CupDiagram diag = weight_to_cup(w);
  const int cut = w.params.cut();
  auto left = diag.left_cups();
  auto crossing = diag.crossing_cups();
  Subset base = 0;
  for (auto& [l, r] : crossing) base |= Subset(1) << (l - 1);
  Subset rights = 0;  // right endpoints of cups, for the sign exponent
  for (auto& [l, r] : diag.cups)
    if (r <= cut) rights |= Subset(1) << (r - 1);
  LExpansion e{w, diag, {}, {}};
  const int f = static_cast<int>(left.size());
  for (int mask = 0; mask < (1 << f); ++mask) {
    Subset u = base;
    for (int i = 0; i < f; ++i) {
      int v = (mask >> i & 1) ? left[i].second : left[i].first;
      u |= Subset(1) << (v - 1);
    }
    e.subsets.push_back(u);
    e.sign_exponents.push_back(std::popcount(u & rights));
  }
  return e;
}

HomVector LExpansion::vector() const {
  HomVector v;
  v.size = weight.params.cut();
  for (size_t i = 0; i < subsets.size(); ++i)
    v.add(subsets[i], (sign_exponents[i] % 2 == 0) ? Int(1) : Int(-1));
  return v;
}

HomVector l_expand(const DeltaWeight& w) { return l_expansion(w).vector(); }

std::vector<long long> betti(const ShapeParams& p) {
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  std::vector<long long> b(p.k + 1, 0);
  for (const auto& w : enumerate_weights(p)) {
    int d = weight_to_cup(w).cup_count();
    if (d > p.k) throw DiagramError("weight with more than k cups");
    ++b[d];
  }
  return b;
}

std::vector<std::pair<DeltaWeight, HomVector>> homology_basis(
    const ShapeParams& p, int degree) {
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  if (degree < 0 || degree > p.k)
    throw DiagramError("degree must satisfy 0 <= d <= k");
  std::vector<std::pair<DeltaWeight, HomVector>> out;
  for (const auto& w : enumerate_weights(p))
    if (weight_to_cup(w).cup_count() == degree)
      out.emplace_back(w, l_expand(w));
  return out;
}

namespace {

// Degree blocks are tiny, so indices are dense per block: a subset maps to
// its rank among the size-d subsets in the canonical order.
SparseVec hom_to_sparse(const HomVector& v,
                        const std::map<Subset, int, SubsetLess>& index) {
  SparseVec s;
  for (const auto& [u, c] : v.terms) {
    auto it = index.find(u);
    if (it == index.end()) throw DiagramError("subset outside degree block");
    s.set(it->second, Rat(c));
  }
  return s;
}

}  // namespace

struct LBasis::Impl {
  std::map<Subset, int, SubsetLess> index;
  SpanSolver solver;
};

LBasis::LBasis(const ShapeParams& p, int degree) : impl_(new Impl) {
  // Basis construction works for any k (the ambient combinatorics is not
  // variety-level); degree must make sense for the type.
  p.validate();
  if (degree < 0 || degree > p.cut())
    throw DiagramError("degree out of range for the ambient space");
  for (const auto& w : enumerate_weights(p)) {
    if (weight_to_cup(w).cup_count() != degree) continue;
    weights_.push_back(w);
    vectors_.push_back(l_expand(w));
  }
  for (const auto& v : vectors_)
    for (const auto& [u, c] : v.terms)
      impl_->index.try_emplace(u, 0);
  // Dense indices in canonical subset order; subsets outside this reach
  // make express() fail fast (they cannot lie in the span).
  int idx = 0;
  for (auto& [u, i] : impl_->index) i = idx++;
  for (const auto& v : vectors_)
    if (!impl_->solver.add(hom_to_sparse(v, impl_->index)))
      throw DiagramError("L-expansion vectors are not independent");
}

std::optional<std::vector<Rat>> LBasis::express(const HomVector& v) const {
  return express(qline_of(v));
}

std::optional<std::vector<Rat>> LBasis::express(const QLineVec& v) const {
  SparseVec s;
  for (const auto& [u, c] : v) {
    if (c == 0) continue;
    auto it = impl_->index.find(u);
    if (it == impl_->index.end())
      return std::nullopt;  // touches a subset no basis vector reaches
    s.set(it->second, c);
  }
  return impl_->solver.express(s);
}

void qline_add(QLineVec& v, Subset u, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = v.try_emplace(u, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

QLineVec qline_of(const HomVector& v) {
  QLineVec q;
  for (const auto& [u, c] : v.terms) q.emplace(u, Rat(c));
  return q;
}

LCoordinates to_L_basis(const HomVector& v, const ShapeParams& p,
                        int degree) {
  auto d = v.homogeneous_degree();
  if (!d || (*d != degree && !v.zero()))
    throw DiagramError("vector is not homogeneous of the requested degree");
  LBasis basis(p, degree);
  LCoordinates out;
  auto coords = basis.express(v);
  if (!coords) return out;
  out.in_span = true;
  for (size_t i = 0; i < coords->size(); ++i)
    if ((*coords)[i] != 0) out.coords[basis.weights()[i]] = (*coords)[i];
  return out;
}

}  // namespace ds
