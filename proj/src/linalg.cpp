#include "deltaspringer/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ds {

const Rat* SparseVec::at(int idx) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), idx,
      [](const std::pair<int, Rat>& t, int i) { return t.first < i; });
  if (it != terms.end() && it->first == idx) return &it->second;
  return nullptr;
}

void SparseVec::set(int idx, const Rat& v) {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), idx,
      [](const std::pair<int, Rat>& t, int i) { return t.first < i; });
  if (it != terms.end() && it->first == idx) {
    if (v == 0)
      terms.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    terms.insert(it, {idx, v});
  }
}

SparseVec sv_scale(const SparseVec& v, const Rat& c) {
  SparseVec r;
  if (c == 0) return r;
  r.terms.reserve(v.terms.size());
  for (const auto& [i, x] : v.terms) r.terms.emplace_back(i, x * c);
  return r;
}

SparseVec sv_axpy(const SparseVec& v, const Rat& c, const SparseVec& w) {
  SparseVec r;
  r.terms.reserve(v.terms.size() + w.terms.size());
  size_t i = 0, j = 0;
  while (i < v.terms.size() || j < w.terms.size()) {
    if (j == w.terms.size() ||
        (i < v.terms.size() && v.terms[i].first < w.terms[j].first)) {
      r.terms.push_back(v.terms[i++]);
    } else if (i == v.terms.size() || w.terms[j].first < v.terms[i].first) {
      Rat x = c * w.terms[j].second;
      if (x != 0) r.terms.emplace_back(w.terms[j].first, x);
      ++j;
    } else {
      Rat x = v.terms[i].second + c * w.terms[j].second;
      if (x != 0) r.terms.emplace_back(v.terms[i].first, x);
      ++i;
      ++j;
    }
  }
  return r;
}

int SpanSolver::find_pivot_row(int pivot) const {
  for (size_t t = 0; t < rows_.size(); ++t)
    if (rows_[t].pivot == pivot) return static_cast<int>(t);
  return -1;
}

bool SpanSolver::add(const SparseVec& v) {
  SparseVec r = v;
  std::vector<Rat> combo(added_ + 1, Rat(0));
  combo[added_] = 1;
  ++added_;
  while (!r.zero()) {
    int t = find_pivot_row(r.pivot());
    if (t < 0) break;
    Rat c = -r.terms.front().second;  // rows_[t] has pivot value 1
    r = sv_axpy(r, c, rows_[t].reduced);
    for (size_t j = 0; j < rows_[t].combo.size(); ++j)
      combo[j] += c * rows_[t].combo[j];
  }
  if (r.zero()) return false;
  Rat inv = 1 / r.terms.front().second;
  r = sv_scale(r, inv);
  for (auto& c : combo) c *= inv;
  int p = r.pivot();
  rows_.push_back({std::move(r), std::move(combo), p});
  return true;
}

std::optional<std::vector<Rat>> SpanSolver::express(const SparseVec& v) const {
  SparseVec r = v;
  std::vector<Rat> coords(added_, Rat(0));
  while (!r.zero()) {
    int t = find_pivot_row(r.pivot());
    if (t < 0) return std::nullopt;
    Rat c = r.terms.front().second;
    r = sv_axpy(r, -c, rows_[t].reduced);
    for (size_t j = 0; j < rows_[t].combo.size(); ++j)
      coords[j] += c * rows_[t].combo[j];
  }
  return coords;
}

namespace {

// Reduced row echelon form: returns reduced rows keyed by pivot column.
std::map<int, SparseVec> rref_rows(const SparseMatrix& a) {
  std::map<int, SparseVec> piv;  // pivot column -> normalized row
  for (const auto& row : a.rows) {
    SparseVec r = row;
    while (!r.zero()) {
      auto it = piv.find(r.pivot());
      if (it == piv.end()) break;
      r = sv_axpy(r, -r.terms.front().second, it->second);
    }
    if (r.zero()) continue;
    r = sv_scale(r, 1 / r.terms.front().second);
    int p = r.pivot();
    // Back-substitute the new pivot into the existing rows.
    for (auto& [q, pr] : piv) {
      const Rat* c = pr.at(p);
      if (c) pr = sv_axpy(pr, -(*c), r);
    }
    piv.emplace(p, std::move(r));
  }
  return piv;
}

}  // namespace

int rank(const SparseMatrix& a) { return static_cast<int>(rref_rows(a).size()); }

std::vector<SparseVec> nullspace(const SparseMatrix& a) {
  auto piv = rref_rows(a);
  std::vector<SparseVec> basis;
  for (int f = 0; f < a.ncols; ++f) {
    if (piv.count(f)) continue;
    SparseVec x;
    for (const auto& [p, row] : piv) {
      const Rat* c = row.at(f);
      if (c) x.set(p, -(*c));
    }
    x.set(f, Rat(1));
    basis.push_back(std::move(x));
  }
  return basis;
}

Mat Mat::identity(int k) {
  Mat r(k, k);
  for (int i = 0; i < k; ++i) r.at(i, i) = 1;
  return r;
}

bool Mat::is_zero() const {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.m != y.n) throw std::invalid_argument("matrix shape mismatch");
  Mat r(x.n, y.m);
  for (int i = 0; i < x.n; ++i)
    for (int l = 0; l < x.m; ++l) {
      const Rat& c = x.at(i, l);
      if (c == 0) continue;
      for (int j = 0; j < y.m; ++j) {
        const Rat& d = y.at(l, j);
        if (d != 0) r.at(i, j) += c * d;
      }
    }
  return r;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.n != y.n || x.m != y.m)
    throw std::invalid_argument("matrix shape mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.n != y.n || x.m != y.m)
    throw std::invalid_argument("matrix shape mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

Mat operator*(const Rat& c, const Mat& x) {
  Mat r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

Rat trace(const Mat& x) {
  Rat t(0);
  for (int i = 0; i < std::min(x.n, x.m); ++i) t += x.at(i, i);
  return t;
}

}  // namespace ds
