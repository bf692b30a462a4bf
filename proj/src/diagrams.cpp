#include "deltaspringer/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ds {

DeltaWeight DeltaWeight::make(const ShapeParams& p, std::vector<Sym> syms) {
  p.validate();
  if (static_cast<int>(syms.size()) != p.n)
    throw DiagramError("weight length must equal n");
  int downs = 0;
  for (Sym s : syms) downs += (s == Sym::Down) ? 1 : 0;
  if (downs != p.k)
    throw DiagramError("weight must contain exactly k downs, got " +
                       std::to_string(downs));
  // Among the last m symbols no down may sit (strictly) left of an up.
  bool seen_down = false;
  for (int v = p.n - p.m + 1; v <= p.n; ++v) {
    if (syms[v - 1] == Sym::Down) seen_down = true;
    else if (seen_down)
      throw DiagramError("cut admissibility violated: down left of up "
                         "among the last m symbols");
  }
  return DeltaWeight{p, std::move(syms)};
}

std::string DeltaWeight::str() const {
  std::string s;
  for (int v = 1; v <= params.n; ++v) {
    if (params.m > 0 && v == params.n - params.m + 1) s.push_back('|');
    s.push_back(at(v) == Sym::Down ? 'v' : '^');
  }
  return s;
}

std::strong_ordering DeltaWeight::operator<=>(const DeltaWeight& o) const {
  if (auto c = params.n <=> o.params.n; c != 0) return c;
  if (auto c = params.m <=> o.params.m; c != 0) return c;
  return syms <=> o.syms;  // Down < Up, leftmost disagreement decides
}

bool DeltaWeight::operator==(const DeltaWeight& o) const {
  return params.n == o.params.n && params.m == o.params.m && syms == o.syms;
}

CupDiagram CupDiagram::make(const ShapeParams& p,
                            std::vector<std::pair<int, int>> cups,
                            std::vector<int> rays) {
  p.validate();
  std::sort(cups.begin(), cups.end());
  std::sort(rays.begin(), rays.end());
  std::vector<int> used(p.n + 1, 0);
  for (auto& [l, r] : cups) {
    if (l < 1 || r > p.n || l >= r)
      throw DiagramError("cup endpoints must satisfy 1 <= l < r <= n");
    used[l]++;
    used[r]++;
  }
  for (int v : rays) {
    if (v < 1 || v > p.n) throw DiagramError("ray vertex out of range");
    used[v]++;
  }
  for (int v = 1; v <= p.n; ++v)
    if (used[v] != 1)
      throw DiagramError("vertices must be used exactly once (vertex " +
                         std::to_string(v) + ")");
  // Crossingless: no interleaved cups, no ray below a cup.
  for (size_t i = 0; i < cups.size(); ++i)
    for (size_t j = i + 1; j < cups.size(); ++j) {
      auto [a, c] = cups[i];
      auto [b, d] = cups[j];
      if (a < b && b < c && c < d)
        throw DiagramError("crossing cups " + std::to_string(a) + "-" +
                           std::to_string(c) + " and " + std::to_string(b) +
                           "-" + std::to_string(d));
    }
  for (int v : rays)
    for (auto& [l, r] : cups)
      if (l < v && v < r)
        throw DiagramError("ray at " + std::to_string(v) +
                           " below cup " + std::to_string(l) + "-" +
                           std::to_string(r));
  // Cut condition: only rays and right endpoints right of the cut line.
  for (auto& [l, r] : cups)
    if (l > p.n - p.m)
      throw DiagramError("cut condition violated: cup " + std::to_string(l) +
                         "-" + std::to_string(r) +
                         " lies entirely right of the cut line");
  // params.k is the cup budget; diagrams arising from lower homology
  // degrees carry fewer cups than the budget, never more.
  if (static_cast<int>(cups.size()) > p.k)
    throw DiagramError("more cups than the budget k");
  return CupDiagram{p, std::move(cups), std::move(rays)};
}

std::vector<std::pair<int, int>> CupDiagram::left_cups() const {
  std::vector<std::pair<int, int>> out;
  for (auto& c : cups)
    if (c.second <= params.cut()) out.push_back(c);
  return out;
}

std::vector<std::pair<int, int>> CupDiagram::crossing_cups() const {
  std::vector<std::pair<int, int>> out;
  for (auto& c : cups)
    if (c.second > params.cut()) out.push_back(c);
  return out;
}

CupDiagram::VertexRole CupDiagram::role(int v) const {
  for (auto& [l, r] : cups) {
    if (l == v) return VertexRole::CupLeft;
    if (r == v) return VertexRole::CupRight;
  }
  return VertexRole::Ray;
}

int CupDiagram::partner(int v) const {
  for (auto& [l, r] : cups) {
    if (l == v) return r;
    if (r == v) return l;
  }
  return 0;
}

bool CupDiagram::operator==(const CupDiagram& o) const {
  return params.n == o.params.n && params.m == o.params.m && cups == o.cups &&
         rays == o.rays;
}

CupDiagram weight_to_cup(const DeltaWeight& w) {
  const int n = w.params.n;
  std::vector<std::pair<int, int>> cups;
  std::vector<int> rays;
  std::vector<int> stack;  // open downs
  for (int v = 1; v <= n; ++v) {
    if (w.at(v) == Sym::Down) {
      stack.push_back(v);
    } else if (!stack.empty()) {
      cups.emplace_back(stack.back(), v);
      stack.pop_back();
    } else {
      rays.push_back(v);  // unmatched up
    }
  }
  for (int v : stack) rays.push_back(v);  // unmatched downs
  // The diagram keeps the weight's type as its cup budget, so that the
  // canonical preimage below restores the type.
  ShapeParams dp{n, w.params.k, w.params.m, ParamMode::AnyK};
  return CupDiagram::make(dp, std::move(cups), std::move(rays));
}

DeltaWeight cup_to_weight(const CupDiagram& a) {
  return diagram_weight_of_type(a, a.params.k);
}

DeltaWeight diagram_weight_of_type(const CupDiagram& a, int downs) {
  const int d = a.cup_count();
  const int extra = downs - d;
  if (extra < 0 || extra > static_cast<int>(a.rays.size()))
    throw DiagramError("no weight with " + std::to_string(downs) +
                       " downs has this cup diagram");
  std::vector<Sym> syms(a.params.n, Sym::Up);
  for (auto& [l, r] : a.cups) syms[l - 1] = Sym::Down;
  // Downs on rays must form a positional suffix of the rays, otherwise the
  // matching would pair them; the type pins how many there are.
  for (int i = 0; i < extra; ++i)
    syms[a.rays[a.rays.size() - 1 - i] - 1] = Sym::Down;
  ShapeParams wp{a.params.n, downs, a.params.m, ParamMode::AnyK};
  return DeltaWeight::make(wp, std::move(syms));
}

std::vector<DeltaWeight> enumerate_weights(const ShapeParams& p) {
  p.validate();
  std::vector<DeltaWeight> out;
  std::vector<Sym> syms(p.n, Sym::Up);
  auto admissible = [&]() {
    bool seen_down = false;
    for (int v = p.n - p.m + 1; v <= p.n; ++v) {
      if (syms[v - 1] == Sym::Down) seen_down = true;
      else if (seen_down)
        return false;
    }
    return true;
  };
  // Depth-first over positions, emitting downs before ups yields
  // lexicographic order (down < up) for free.
  auto rec = [&](auto&& self, int pos, int downs_left) -> void {
    if (p.n - pos < downs_left) return;
    if (pos == p.n) {
      if (downs_left == 0 && admissible())
        out.push_back(DeltaWeight{p, syms});
      return;
    }
    if (downs_left > 0) {
      syms[pos] = Sym::Down;
      self(self, pos + 1, downs_left - 1);
    }
    syms[pos] = Sym::Up;
    self(self, pos + 1, downs_left);
  };
  rec(rec, 0, p.k);
  return out;
}

std::vector<CupDiagram> enumerate_cup_diagrams(const ShapeParams& p) {
  p.validate();
  // Diagrams with exactly k cups correspond to their canonical weights:
  // k downs, all matched, all left of the cut line. Enumerating weights in
  // lexicographic order yields the documented diagram order directly.
  std::vector<CupDiagram> out;
  std::vector<Sym> syms(p.n, Sym::Up);
  auto all_matched = [&]() {
    int open = 0;
    for (int v = p.n; v >= 1; --v) {
      if (syms[v - 1] == Sym::Up) ++open;
      else if (open > 0) --open;
      else return false;  // a down with no up to absorb it
    }
    return true;
  };
  auto rec = [&](auto&& self, int pos, int downs_left) -> void {
    if (p.n - pos < downs_left) return;
    if (pos == p.n) {
      if (downs_left == 0 && all_matched()) {
        DeltaWeight w =
            DeltaWeight::make({p.n, p.k, p.m, ParamMode::AnyK}, syms);
        out.push_back(weight_to_cup(w));
      }
      return;
    }
    if (downs_left > 0 && pos < p.cut()) {  // cups open left of the cut only
      syms[pos] = Sym::Down;
      self(self, pos + 1, downs_left - 1);
    }
    syms[pos] = Sym::Up;
    self(self, pos + 1, downs_left);
  };
  rec(rec, 0, p.k);
  return out;
}

SkewFilling SkewFilling::make(int outer1, int outer2, int inner,
                              std::vector<int> row1, std::vector<int> row2) {
  if (outer1 < outer2 || outer2 < 0 || inner < 0 || inner > outer1)
    throw DiagramError("invalid two-row shape");
  if (static_cast<int>(row1.size()) != outer1 - inner ||
      static_cast<int>(row2.size()) != outer2)
    throw DiagramError("filling size does not match shape");
  auto strictly_decreasing = [](const std::vector<int>& r) {
    for (size_t i = 1; i < r.size(); ++i)
      if (r[i - 1] <= r[i]) return false;
    return true;
  };
  if (!strictly_decreasing(row1) || !strictly_decreasing(row2))
    throw DiagramError("filling rows must strictly decrease left to right");
  // Column condition: row1 occupies columns inner+1..outer1, row2 columns
  // 1..outer2; where they overlap the upper entry must be larger.
  for (int col = inner + 1; col <= std::min(outer1, outer2); ++col) {
    int top = row1[col - inner - 1];
    int bot = row2[col - 1];
    if (top <= bot)
      throw DiagramError("filling columns must strictly decrease downwards");
  }
  return SkewFilling{outer1, outer2, inner, std::move(row1), std::move(row2)};
}

std::string SkewFilling::str() const {
  auto row_str = [](const std::vector<int>& r) {
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(r[i]);
    }
    return s;
  };
  std::string s = "[";
  for (int i = 0; i < inner; ++i) s += ".,";
  s += row_str(row1) + " / " + row_str(row2) + "]";
  return s;
}

std::vector<FillingChainRow> filling_chain(const ShapeParams& p) {
  if (p.mode != ParamMode::Strict)
    ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);  // throws if not
  const int n = p.n, k = p.k, m = p.m;
  const int labels = n - m;
  // Fillings of lambda' = (n-k-m, k-m) with labels from {1..n-m}, strictly
  // decreasing along rows and columns, restricted to those indexing
  // irreducible components: the smallest absent label i_S must come after
  // a fully-filled row of lambda' inside {1,...,i_S-1}.
  const int a1 = n - k - m, a2 = k - m;
  std::vector<FillingChainRow> out;
  // iterate over all (a1+a2)-subsets and their splits into the two rows
  std::vector<std::vector<int>> selections;
  {
    std::vector<int> sel;
    auto rec = [&](auto&& self, int from, int need) -> void {
      if (need == 0) {
        selections.push_back(sel);
        return;
      }
      for (int v = from; v <= labels - need + 1; ++v) {
        sel.push_back(v);
        self(self, v + 1, need - 1);
        sel.pop_back();
      }
    };
    rec(rec, 1, a1 + a2);
  }
  for (const auto& sel : selections) {
    // split sel into row1 (a1 entries) and row2 (a2 entries)
    std::vector<bool> inrow1(sel.size(), false);
    std::fill(inrow1.begin(), inrow1.begin() + a1, true);
    std::sort(inrow1.begin(), inrow1.end());
    do {
      std::vector<int> r1, r2;
      for (size_t i = 0; i < sel.size(); ++i)
        (inrow1[i] ? r1 : r2).push_back(sel[i]);
      std::reverse(r1.begin(), r1.end());
      std::reverse(r2.begin(), r2.end());
      SkewFilling small;
      try {
        small = SkewFilling::make(a1, a2, 0, r1, r2);
      } catch (const DiagramError&) {
        continue;
      }
      if (m < k) {
        // component condition on the smallest absent label
        std::vector<bool> present(labels + 1, false);
        for (int v : sel) present[v] = true;
        int i_s = 1;
        while (i_s <= labels && present[i_s]) ++i_s;
        auto row_filled_below = [&](const std::vector<int>& row) {
          if (row.empty()) return false;
          for (int v : row)
            if (v >= i_s) return false;
          return true;
        };
        bool ok = row_filled_below(r1) || row_filled_below(r2);
        if (a1 == 0 || a2 == 0) ok = true;  // an empty row is trivially filled
        if (!ok) continue;
      }
      // lambda/(m) filling: row1 entries stay; row2 gets the unused labels
      // in decreasing order, then the lambda' second row.
      std::vector<int> unused;
      {
        std::vector<bool> present(labels + 1, false);
        for (int v : sel) present[v] = true;
        for (int v = labels; v >= 1; --v)
          if (!present[v]) unused.push_back(v);
      }
      std::vector<int> skew_r2 = unused;
      skew_r2.insert(skew_r2.end(), r2.begin(), r2.end());
      SkewFilling skew = SkewFilling::make(n - k, k, m, r1, skew_r2);
      // lambda filling: prepend n, n-1, ..., n-m+1 to the first row.
      std::vector<int> full_r1;
      for (int v = n; v > n - m; --v) full_r1.push_back(v);
      full_r1.insert(full_r1.end(), r1.begin(), r1.end());
      SkewFilling full = SkewFilling::make(n - k, k, 0, full_r1, skew_r2);
      // Diagram: second-row entries are the cup left endpoints.
      std::vector<Sym> syms(n, Sym::Up);
      for (int v : skew_r2) syms[v - 1] = Sym::Down;
      DeltaWeight w = DeltaWeight::make({n, k, m, ParamMode::AnyK}, syms);
      CupDiagram diag = weight_to_cup(w);
      if (diag.cup_count() != k)
        throw DiagramError("filling does not close to k cups");
      out.push_back({small, skew, full, CupDiagram::make(
                                            {n, k, m, p.mode}, diag.cups,
                                            diag.rays)});
    } while (std::next_permutation(inrow1.begin(), inrow1.end()));
  }
  std::sort(out.begin(), out.end(),
            [](const FillingChainRow& x, const FillingChainRow& y) {
              return cup_to_weight(x.diagram) < cup_to_weight(y.diagram);
            });
  return out;
}

CircleDiagram circle_diagram(const CupDiagram& a, const CupDiagram& b) {
  if (!a.params.same_shape(b.params))
    throw DiagramError("circle diagram requires diagrams of the same shape");
  const int n = a.params.n;
  const int cut = a.params.cut();
  // Each vertex carries an upper slot (reflected a) and a lower slot (b);
  // cups pair slots of neighbouring vertices, rays leave a slot open. The
  // resulting degree-at-most-2 graph splits into circles and open lines,
  // found here by union-find over shared endpoints.
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (auto& [l, r] : a.cups) unite(l, r);
  for (auto& [l, r] : b.cups) unite(l, r);

  std::map<int, CircleComponent> by_root;
  std::map<int, std::pair<int, int>> ends;  // root -> (upper ends, lower ends)
  for (int v = 1; v <= n; ++v) {
    int root = find(v);
    by_root[root].vertices.push_back(v);
    auto& [up_ends, low_ends] = ends[root];
    if (a.role(v) == CupDiagram::VertexRole::Ray) {
      ++up_ends;
      if (v > cut) ++by_root[root].right_endpoints;
    }
    if (b.role(v) == CupDiagram::VertexRole::Ray) {
      ++low_ends;
      if (v > cut) ++by_root[root].right_endpoints;
    }
  }
  std::vector<CircleComponent> comps;
  for (auto& [root, comp] : by_root) {
    auto [up_ends, low_ends] = ends[root];
    comp.crosses_cut =
        comp.vertices.front() <= cut && comp.vertices.back() > cut;
    if (up_ends + low_ends == 0) {
      comp.kind = CircleComponent::Kind::Circle;
      comp.right_endpoints = 0;
    } else {
      bool same_side = (up_ends == 2) || (low_ends == 2);
      bool entirely_left = comp.vertices.back() <= cut;
      comp.kind = (same_side && entirely_left)
                      ? CircleComponent::Kind::NonPropagatingLine
                      : CircleComponent::Kind::PropagatingLine;
    }
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const CircleComponent& x, const CircleComponent& y) {
              return x.vertices.front() < y.vertices.front();
            });
  return CircleDiagram{b, a, std::move(comps)};
}

IntersectionClass intersection_class(const CupDiagram& a,
                                     const CupDiagram& b) {
  CircleDiagram cd = circle_diagram(a, b);
  IntersectionClass out;
  for (const auto& c : cd.components) {
    switch (c.kind) {
      case CircleComponent::Kind::NonPropagatingLine:
        out.empty = true;
        out.ell = 0;
        return out;
      case CircleComponent::Kind::Circle:
        ++out.ell;
        break;
      case CircleComponent::Kind::PropagatingLine:
        if (c.crosses_cut && c.right_endpoints == 2) ++out.ell;
        break;
    }
  }
  return out;
}

OneBoundaryDiagram to_one_boundary(const CupDiagram& a) {
  OneBoundaryDiagram out;
  out.points = a.params.cut();
  for (auto& [l, r] : a.cups) {
    if (r <= out.points)
      out.cups.emplace_back(l, r);
    else
      out.half_cups.push_back(l);
  }
  for (int v : a.rays)
    if (v <= out.points) out.rays.push_back(v);
  return out;
}

DeltaWeight weight_from_string(const std::string& s, ParamMode mode) {
  std::vector<Sym> syms;
  int bar_at = -1;
  for (char c : s) {
    switch (c) {
      case 'v':
        syms.push_back(Sym::Down);
        break;
      case '^':
        syms.push_back(Sym::Up);
        break;
      case '|':
        if (bar_at >= 0)
          throw DiagramError("weight string has more than one '|'");
        bar_at = static_cast<int>(syms.size());
        break;
      default:
        throw DiagramError(std::string("bad weight character '") + c + "'");
    }
  }
  if (syms.empty()) throw DiagramError("empty weight string");
  int n = static_cast<int>(syms.size());
  int m = bar_at < 0 ? 0 : n - bar_at;
  int k = 0;
  for (Sym x : syms) k += (x == Sym::Down) ? 1 : 0;
  return DeltaWeight::make(ShapeParams::make(n, k, m, mode), std::move(syms));
}

}  // namespace ds
