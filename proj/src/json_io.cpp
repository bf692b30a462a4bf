#include "deltaspringer/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace ds {

json diagram_to_json(const CupDiagram& a) {
  json j;
  j["n"] = a.params.n;
  j["m"] = a.params.m;
  json cups = json::array();
  for (auto& [l, r] : a.cups) cups.push_back(json::array({l, r}));
  j["cups"] = cups;
  j["rays"] = a.rays;
  return j;
}

CupDiagram diagram_from_json(const json& j, ParamMode mode) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m"))
    throw DiagramError("diagram JSON must contain \"n\" and \"m\"");
  int n = j.at("n").get<int>();
  int m = j.at("m").get<int>();
  std::vector<std::pair<int, int>> cups;
  if (j.contains("cups"))
    for (const auto& c : j.at("cups")) {
      if (!c.is_array() || c.size() != 2)
        throw DiagramError("each cup must be a pair [l, r]");
      cups.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  std::vector<int> rays;
  if (j.contains("rays"))
    for (const auto& r : j.at("rays")) rays.push_back(r.get<int>());
  ShapeParams p =
      ShapeParams::make(n, static_cast<int>(cups.size()), m, mode);
  return CupDiagram::make(p, std::move(cups), std::move(rays));
}

json one_boundary_to_json(const OneBoundaryDiagram& d) {
  json j;
  j["points"] = d.points;
  json cups = json::array();
  for (auto& [l, r] : d.cups) cups.push_back(json::array({l, r}));
  j["cups"] = cups;
  j["rays"] = d.rays;
  j["half_cups"] = d.half_cups;
  return j;
}

json circle_diagram_to_json(const CircleDiagram& cd) {
  json j;
  j["lower"] = diagram_to_json(cd.lower);
  j["upper"] = diagram_to_json(cd.upper);
  json comps = json::array();
  for (const auto& c : cd.components) {
    json cj;
    switch (c.kind) {
      case CircleComponent::Kind::Circle:
        cj["kind"] = "circle";
        break;
      case CircleComponent::Kind::PropagatingLine:
        cj["kind"] = "propagating-line";
        break;
      case CircleComponent::Kind::NonPropagatingLine:
        cj["kind"] = "non-propagating-line";
        break;
    }
    cj["vertices"] = c.vertices;
    cj["crosses_cut"] = c.crosses_cut;
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

json filling_to_json(const SkewFilling& f) {
  json j;
  j["outer"] = json::array({f.outer1, f.outer2});
  j["inner"] = f.inner;
  j["row1"] = f.row1;
  j["row2"] = f.row2;
  return j;
}

namespace {

int digits(int v) { return static_cast<int>(std::to_string(v).size()); }

// Nesting height: 0 for cups containing no other cup, else 1 + max height
// of the cups nested below. Determines the drawing row.
std::map<std::pair<int, int>, int> cup_heights(const CupDiagram& a) {
  std::map<std::pair<int, int>, int> h;
  auto height = [&](auto&& self, const std::pair<int, int>& c) -> int {
    auto it = h.find(c);
    if (it != h.end()) return it->second;
    int best = -1;
    for (auto& d : a.cups)
      if (c.first < d.first && d.second < c.second)
        best = std::max(best, self(self, d));
    return h[c] = best + 1;
  };
  for (auto& c : a.cups) height(height, c);
  return h;
}

}  // namespace

std::string render_ascii(const CupDiagram& a) {
  const int n = a.params.n;
  const int w = digits(n) + 1;
  auto col = [&](int v) { return v * w - 1; };
  std::string header(n * w, ' ');
  for (int v = 1; v <= n; ++v) {
    std::string s = std::to_string(v);
    for (size_t i = 0; i < s.size(); ++i)
      header[col(v) - s.size() + 1 + i] = s[i];
  }
  if (a.params.m > 0) header[col(a.params.cut()) + 1] = '|';
  auto h = cup_heights(a);
  int rows = a.rays.empty() && a.cups.empty() ? 0 : 1;
  for (auto& [c, hh] : h) rows = std::max(rows, hh + 1);
  std::vector<std::string> grid(rows, std::string(n * w, ' '));
  for (auto& [c, hh] : h) {
    grid[hh][col(c.first)] = '\\';
    grid[hh][col(c.second)] = '/';
    for (int x = col(c.first) + 1; x < col(c.second); ++x) grid[hh][x] = '_';
    for (int r = 0; r < hh; ++r) {
      grid[r][col(c.first)] = '|';
      grid[r][col(c.second)] = '|';
    }
  }
  for (int v : a.rays)
    for (int r = 0; r < rows; ++r) grid[r][col(v)] = '|';
  std::string out = header;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += "\n" + line;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += "\n";
  return out;
}

std::string render_ascii(const OneBoundaryDiagram& d) {
  // Reuse the cup-diagram renderer by completing the half-cups past the
  // boundary, then marking the boundary with the cut line glyph.
  std::vector<std::pair<int, int>> cups = d.cups;
  int extra = d.points + static_cast<int>(d.half_cups.size());
  std::vector<int> hc = d.half_cups;
  std::sort(hc.begin(), hc.end());
  int right = extra;
  for (int l : hc) cups.emplace_back(l, right--);
  CupDiagram full = CupDiagram::make(
      ShapeParams::make(extra, static_cast<int>(cups.size()),
                        extra - d.points, ParamMode::AnyK),
      cups, d.rays);
  return render_ascii(full);
}

std::string render_tikz(const CupDiagram& a) {
  const int n = a.params.n;
  std::ostringstream os;
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return std::string(buf);
  };
  os << "\\begin{tikzpicture}[scale=0.65]\n";
  os << "\\draw[thick,densely dotted] (-0.50,1) to (" << num(n - 0.5)
     << ",1);\n";
  for (int v = 1; v <= n; ++v)
    os << "\\draw[black,fill=black] (" << (v - 1) << ",1) circle (2.0pt);\n";
  auto h = cup_heights(a);
  for (auto& [c, hh] : h) {
    double mid = (c.first + c.second) / 2.0 - 1.0;
    double dip = 0.5 - 0.45 * hh;
    os << "\\draw[very thick] (" << (c.first - 1)
       << ",1) to[out=-70,in=180] (" << num(mid) << "," << num(dip)
       << ") to[out=0,in=-110] (" << (c.second - 1) << ",1);\n";
  }
  for (int v : a.rays)
    os << "\\draw[very thick] (" << (v - 1) << ",1) -- (" << (v - 1)
       << ",-1);\n";
  if (a.params.m > 0) {
    double x = a.params.cut() - 0.5;
    os << "\\draw[red,dashed,thick] (" << num(x) << ",-1) to (" << num(x)
       << ",1.15);\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

namespace {

CupDiagram parse_ascii(const std::string& text, ParamMode mode) {
  std::istringstream is(text);
  std::string header;
  while (std::getline(is, header))
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  // header: vertex numbers, optional '|' cut marker after the cut vertex
  std::map<int, int> col_to_vertex;
  int n = 0, cut_vertex = -1;
  for (size_t i = 0; i < header.size();) {
    char c = header[i];
    if (c == '|') {
      cut_vertex = n;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < header.size() &&
             std::isdigit(static_cast<unsigned char>(header[j])))
        ++j;
      int v = std::stoi(header.substr(i, j - i));
      col_to_vertex[static_cast<int>(j) - 1] = v;
      n = std::max(n, v);
      i = j;
    } else {
      ++i;
    }
  }
  if (n == 0) throw DiagramError("ascii diagram: no vertex indices found");
  int m = cut_vertex < 0 ? 0 : n - cut_vertex;
  std::vector<std::pair<int, int>> cups;
  std::vector<bool> in_cup(n + 1, false);
  std::vector<bool> touched(n + 1, false);
  std::string line;
  while (std::getline(is, line)) {
    int open = -1;
    for (size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (c != '\\' && c != '/' && c != '|') continue;
      auto it = col_to_vertex.find(static_cast<int>(i));
      if (it == col_to_vertex.end())
        throw DiagramError("ascii diagram: arc glyph between vertex columns");
      if (c == '\\') {
        if (open >= 0) throw DiagramError("ascii diagram: nested arcs in row");
        open = it->second;
      } else if (c == '/') {
        if (open < 0) throw DiagramError("ascii diagram: unmatched '/'");
        cups.emplace_back(open, it->second);
        in_cup[open] = in_cup[it->second] = true;
        touched[open] = touched[it->second] = true;
        open = -1;
      } else {
        touched[it->second] = true;
      }
    }
    if (open >= 0) throw DiagramError("ascii diagram: unmatched '\\'");
  }
  std::vector<int> rays;
  for (int v = 1; v <= n; ++v)
    if (touched[v] && !in_cup[v]) rays.push_back(v);
  ShapeParams p =
      ShapeParams::make(n, static_cast<int>(cups.size()), m, mode);
  return CupDiagram::make(p, std::move(cups), std::move(rays));
}

}  // namespace

CupDiagram parse_diagram(const std::string& text, ParamMode mode) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw DiagramError("empty diagram text");
  if (text[i] == '{') {
    json j = json::parse(text, nullptr, true);
    return diagram_from_json(j, mode);
  }
  return parse_ascii(text, mode);
}

}  // namespace ds
