#pragma once

#include <optional>
#include <vector>

#include "deltaspringer/rational.hpp"

namespace ds {

// Sparse vector: (index, value) pairs sorted by index, values nonzero.
struct SparseVec {
  std::vector<std::pair<int, Rat>> terms;

  bool zero() const { return terms.empty(); }
  int pivot() const { return terms.empty() ? -1 : terms.front().first; }
  const Rat* at(int idx) const;
  void set(int idx, const Rat& v);
  bool operator==(const SparseVec& o) const { return terms == o.terms; }
};

SparseVec sv_scale(const SparseVec& v, const Rat& c);
// v + c*w, merged termwise with exact cancellation.
SparseVec sv_axpy(const SparseVec& v, const Rat& c, const SparseVec& w);

// Incremental exact solver for "is v in the span of these vectors, and if
// so with which coordinates".  Vectors are reduced on insertion; every
// stored row keeps the combination that produced it, so express() returns
// coordinates in terms of the original insertion order.
class SpanSolver {
 public:
  // Returns true if v was linearly independent of the rows so far (and was
  // added); false if v is dependent (nothing stored).
  bool add(const SparseVec& v);
  int dim() const { return static_cast<int>(rows_.size()); }
  int added() const { return added_; }

  // Coordinates of v in terms of the *added* vectors, or nullopt if v is
  // not in their span. The returned vector has length added(); positions of
  // vectors that were rejected as dependent are still present (zero).
  std::optional<std::vector<Rat>> express(const SparseVec& v) const;

 private:
  struct Row {
    SparseVec reduced;       // pivot entry normalized to 1
    std::vector<Rat> combo;  // reduced = sum combo[j] * original_j
    int pivot = -1;
  };
  std::vector<Row> rows_;
  int added_ = 0;
  int find_pivot_row(int pivot) const;
};

// Row-major sparse matrix as a list of sparse rows over ncols columns.
struct SparseMatrix {
  int ncols = 0;
  std::vector<SparseVec> rows;
};

int rank(const SparseMatrix& a);
// Basis of the right nullspace {x : A x = 0}, deterministic order (one
// vector per free column, free columns ascending).
std::vector<SparseVec> nullspace(const SparseMatrix& a);

// Dense exact matrix, row-major. Used for the operator blocks, which are
// small (dimension = one homology degree block).
struct Mat {
  int n = 0, m = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int rows, int cols) : n(rows), m(cols), a(rows * cols, Rat(0)) {}
  static Mat identity(int k);
  Rat& at(int i, int j) { return a[i * m + j]; }
  const Rat& at(int i, int j) const { return a[i * m + j]; }
  bool operator==(const Mat& o) const = default;
  bool is_zero() const;
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Rat& c, const Mat& x);
Rat trace(const Mat& x);

}  // namespace ds
