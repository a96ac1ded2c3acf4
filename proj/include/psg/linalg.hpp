#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "psg/scalar.hpp"

namespace psg {

using Vec = std::vector<Scalar>;
using SparseVec = std::map<int, Scalar>;  // no stored zeros

Vec zero_vec(int n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
Vec to_dense(const SparseVec& s, int n);
SparseVec to_sparse(const Vec& v);
void sparse_add_scaled(SparseVec& dst, const Scalar& c, const SparseVec& src);

// Dense matrix acting on row vectors: (v * M) composes left to right, so a
// product m(a)m(b) applied to v reads (v.a).b, matching the module convention.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  Vec apply(const Vec& row) const;  // row * M
  Vec flatten() const { return a_; }
  static Mat unflatten(const Vec& v, int rows, int cols);

 private:
  int rows_, cols_;
  Vec a_;
};

// Sparse matrix with explicit shape; absent entries are zero, stored entries nonzero.
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Scalar> entries;

  void set(int r, int c, const Scalar& v);
  Scalar get(int r, int c) const;
  static SparseMatrix from_dense(const Mat& m);
  Mat to_dense() const;
};

struct SolveResult {
  std::optional<Vec> particular;  // empty when A x = b is inconsistent
  std::vector<Vec> nullspace;     // deterministic basis of ker A
  int rank = 0;
};

// Exact elimination, leftmost pivot column first, lowest eligible row as pivot.
SolveResult solve_linear(const SparseMatrix& a, const Vec& b);
std::vector<Vec> kernel(const SparseMatrix& a);
int rank_of(const SparseMatrix& a);

// Incremental row-reduced basis of a subspace of F^n. insert() returns true when
// the vector enlarged the span. Deterministic for a fixed insertion order.
class EchelonBasis {
 public:
  explicit EchelonBasis(int ncols) : ncols_(ncols) {}
  bool insert(Vec v);
  bool contains(const Vec& v) const;
  // Coordinates of v in the span's *original* inserted vectors are not tracked;
  // reduce() returns the residual after projection onto the span.
  Vec reduce(const Vec& v) const;
  int dim() const { return int(rows_.size()); }
  int ncols() const { return ncols_; }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  int ncols_;
  std::vector<Vec> rows_;    // RREF rows
  std::vector<int> pivots_;  // pivot column of each row
};

// Smallest unital matrix algebra containing the seeds: starts from the identity,
// closes the span under right products by every seed. Deterministic order.
std::vector<Mat> span_closure(const std::vector<Mat>& seeds);

std::optional<Mat> inverse(const Mat& m);

// Basis of { v : v * m = 0 }, the kernel on the row-vector side modules act on.
std::vector<Vec> left_kernel(const Mat& m);

}  // namespace psg
