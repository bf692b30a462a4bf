#include "deltaspringer/specht.hpp"

#include <algorithm>
#include <map>

#include "deltaspringer/homology.hpp"

namespace ds {

TwoRowShape TwoRowShape::straight(int a, int b) {
  if (a < b || b < 0) throw SpechtError("shape rows must satisfy a >= b >= 0");
  return TwoRowShape{false, a, b, 0};
}

TwoRowShape TwoRowShape::skew_shape(int a, int b, int c) {
  if (a < b || b < 0) throw SpechtError("shape rows must satisfy a >= b >= 0");
  if (c < 0 || c > a) throw SpechtError("inner row must fit inside the outer");
  return TwoRowShape{true, a, b, c};
}

std::string TwoRowShape::str() const {
  std::string s = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (skew) s += "/(" + std::to_string(c) + ")";
  return s;
}

CycleType CycleType::make(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  for (int p : parts)
    if (p <= 0) throw SpechtError("cycle type parts must be positive");
  return CycleType{std::move(parts)};
}

int CycleType::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string CycleType::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<CycleType> all_cycle_types(int n) {
  std::vector<CycleType> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(CycleType{cur});
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int conjugacy_class_size(const CycleType& t) {
  // n! / prod_j j^{m_j} m_j!  with m_j the multiplicity of part j.
  Int z = 1;
  std::map<int, int> mult;
  for (int p : t.parts) ++mult[p];
  for (const auto& [p, m] : mult) {
    for (int i = 0; i < m; ++i) z *= p;
    z *= factorial(m);
  }
  return factorial(t.size()) / z;
}

long long skew_syt_count(const TwoRowShape& s) {
  // Fill cells one label at a time; states are (cells used in row 1,
  // cells used in row 2). Row 2 column j needs the row-1 cell above it
  // (when that cell exists, i.e. outside the inner strip) already placed,
  // which reads j <= c + r1.
  const int len1 = s.a - s.c, len2 = s.b;
  std::map<std::pair<int, int>, long long> memo;
  auto count = [&](auto&& self, int r1, int r2) -> long long {
    if (r1 == len1 && r2 == len2) return 1;
    auto it = memo.find({r1, r2});
    if (it != memo.end()) return it->second;
    long long total = 0;
    if (r1 < len1) total += self(self, r1 + 1, r2);
    if (r2 < len2 && r2 + 1 <= s.c + r1) total += self(self, r1, r2 + 1);
    return memo[{r1, r2}] = total;
  };
  return count(count, 0, 0);
}

namespace {

struct StripRemoval {
  TwoRowShape rest;
  int sign;  // (-1)^{height-1}
};

// All border strips of the given size removable from a two-row shape such
// that the remainder is again a valid two-row (skew) shape.
std::vector<StripRemoval> strip_removals(const TwoRowShape& s, int size) {
  std::vector<StripRemoval> out;
  // entirely in row 2: the last `size` cells
  if (size <= s.b)
    out.push_back({TwoRowShape{s.skew || s.c > 0, s.a, s.b - size, s.c}, +1});
  // entirely in row 1: keeps the shape a partition only if the remainder
  // still covers row 2 and the inner strip
  if (s.a - size >= std::max(s.b, s.c))
    out.push_back({TwoRowShape{s.skew || s.c > 0, s.a - size, s.b, s.c}, +1});
  // spanning both rows: row 1 from column b to a, row 2 from z+1 to b
  if (s.b >= 1 && s.b >= s.c + 1) {
    int z = s.a + 1 - size;
    if (z >= 0 && z <= s.b - 1 && s.b - 1 >= s.c && s.b - 1 >= z)
      out.push_back({TwoRowShape{s.skew || s.c > 0, s.b - 1, z, s.c}, -1});
  }
  return out;
}

Int mn_rec(const TwoRowShape& s, const std::vector<int>& parts, size_t idx,
           std::map<std::tuple<int, int, int, size_t>, Int>& memo) {
  if (idx == parts.size()) {
    if (s.cells() != 0) throw SpechtError("size mismatch in recursion");
    return 1;
  }
  auto key = std::make_tuple(s.a, s.b, s.c, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (const auto& rem : strip_removals(s, parts[idx]))
    total += rem.sign * mn_rec(rem.rest, parts, idx + 1, memo);
  return memo[key] = total;
}

}  // namespace

Int mn_character(const TwoRowShape& shape, const CycleType& t) {
  if (shape.cells() != t.size())
    throw SpechtError("cycle type size must equal the number of cells");
  std::map<std::tuple<int, int, int, size_t>, Int> memo;
  return mn_rec(shape, t.parts, 0, memo);
}

std::vector<Rat> block_traces(const ShapeParams& p, int degree) {
  const int nm = p.cut();
  HeckeParams xi = HeckeParams::springer(p);
  std::vector<Mat> sigma;
  for (int i = 1; i < nm; ++i)
    sigma.push_back(
        operator_matrix({GeneratorRef::Kind::Sigma, i}, BasisKind::L, degree,
                        p, xi)
            .mat);
  int dim = LBasis(p, degree).dim();
  std::vector<Rat> traces;
  for (const auto& t : all_cycle_types(nm)) {
    Mat rep = Mat::identity(dim);
    int start = 1;
    for (int part : t.parts) {
      for (int i = start; i < start + part - 1; ++i) rep = rep * sigma[i - 1];
      start += part;
    }
    traces.push_back(trace(rep));
  }
  return traces;
}

std::vector<std::pair<TwoRowShape, long long>> decompose_homology_rep(
    const ShapeParams& p, int degree) {
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  const int nm = p.cut();
  auto types = all_cycle_types(nm);
  auto traces = block_traces(p, degree);
  Int order = factorial(nm);
  std::vector<std::pair<TwoRowShape, long long>> out;
  for (int c = 0; c * 2 <= nm; ++c) {
    TwoRowShape shape = TwoRowShape::straight(nm - c, c);
    Rat inner(0);
    for (size_t t = 0; t < types.size(); ++t)
      inner += Rat(conjugacy_class_size(types[t]) *
                   mn_character(shape, types[t])) *
               traces[t];
    Rat mult = inner / Rat(order);
    if (mult.get_den() != 1)
      throw SpechtError("non-integral multiplicity for " + shape.str());
    if (mult < 0)
      throw SpechtError("negative multiplicity for " + shape.str());
    if (mult != 0) out.emplace_back(shape, mult.get_num().get_si());
  }
  return out;
}

namespace {

int crossing_count(const DeltaWeight& w) {
  return static_cast<int>(weight_to_cup(w).crossing_cups().size());
}

}  // namespace

Report verify_filtration(const ShapeParams& p, int degree) {
  Report rep;
  rep.suite = "filtration";
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  const int nm = p.cut();
  const int d = degree;
  const std::string tag = "filtration.d" + std::to_string(d) + ".";
  std::vector<DeltaWeight> block;
  for (const auto& w : enumerate_weights(p))
    if (weight_to_cup(w).cup_count() == d) block.push_back(w);

  const int lo = std::max(0, 2 * d + p.m - p.n);
  const int hi = std::min(d, p.m);
  std::map<int, long long> layer;
  for (const auto& w : block) ++layer[crossing_count(w)];

  bool pass = true;
  std::string wit;
  for (const auto& [j, cnt] : layer)
    if (j < lo || j > hi) {
      pass = false;
      wit = "class with " + std::to_string(j) + " crossing cups outside [" +
            std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
  rep.add(tag + "layer_range", pass, wit);

  pass = true;
  wit.clear();
  for (int j = lo; j <= hi; ++j) {
    long long expect =
        skew_syt_count(TwoRowShape::straight(nm - d + j, d - j));
    long long got = layer.count(j) ? layer[j] : 0;
    if (got != expect) {
      pass = false;
      wit = "layer " + std::to_string(j) + " has dimension " +
            std::to_string(got) + ", expected " + std::to_string(expect);
      break;
    }
  }
  rep.add(tag + "layer_dimensions", pass, wit);

  // Skein stability: s_i never increases the crossing-cup count, so each
  // W_j = span{classes with <= j crossing cups} is invariant.
  pass = true;
  wit.clear();
  for (const auto& w : block) {
    int j = crossing_count(w);
    for (int i = 1; i < nm && pass; ++i)
      for (const auto& [w2, c] : s_skein(i, w).terms)
        if (crossing_count(w2) > j) {
          pass = false;
          wit = "s_" + std::to_string(i) + " on " + w.str() +
                " raises the crossing count";
          break;
        }
    if (!pass) break;
  }
  rep.add(tag + "skein_stable", pass, wit);
  return rep;
}

Report verify_specht(const ShapeParams& p) {
  Report rep;
  rep.suite = "specht";
  ShapeParams::make(p.n, p.k, p.m, ParamMode::Strict);
  const int nm = p.cut();
  auto types = all_cycle_types(nm);
  auto b = betti(p);
  for (int d = 0; d <= p.k; ++d) {
    const std::string tag = "specht.d" + std::to_string(d) + ".";
    long long syt = skew_syt_count(TwoRowShape::skew_shape(p.n - d, d, p.m));
    rep.add(tag + "betti_equals_skew_syt", b[d] == syt,
            "b_" + std::to_string(d) + " = " + std::to_string(b[d]) +
                " but the skew tableau count is " + std::to_string(syt));

    const int lo = std::max(0, 2 * d + p.m - p.n);
    const int hi = std::min(d, p.m);
    auto traces = block_traces(p, d);
    bool pass = true;
    std::string wit;
    for (size_t t = 0; t < types.size(); ++t) {
      Int want = 0;
      for (int j = lo; j <= hi; ++j)
        want += mn_character(TwoRowShape::straight(nm - d + j, d - j),
                             types[t]);
      if (traces[t] != Rat(want)) {
        pass = false;
        wit = "trace at cycle type " + types[t].str() + " is " +
              rat_str(traces[t]) + ", expected " + int_str(want);
        break;
      }
    }
    rep.add(tag + "character_match", pass, wit);

    auto decomp = decompose_homology_rep(p, d);
    pass = true;
    wit.clear();
    std::map<TwoRowShape, long long> got;
    for (const auto& [shape, mult] : decomp) got[shape] = mult;
    for (int c = 0; 2 * c <= nm; ++c) {
      TwoRowShape shape = TwoRowShape::straight(nm - c, c);
      long long expect = (c >= d - hi && c <= d - lo) ? 1 : 0;
      long long have = got.count(shape) ? got[shape] : 0;
      if (have != expect) {
        pass = false;
        wit = shape.str() + " has multiplicity " + std::to_string(have) +
              ", expected " + std::to_string(expect);
        break;
      }
    }
    rep.add(tag + "multiplicities", pass, wit);

    rep.merge(verify_filtration(p, d));
  }
  return rep;
}

}  // namespace ds
