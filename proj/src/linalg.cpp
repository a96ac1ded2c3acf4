#include "psg/linalg.hpp"

#include <algorithm>
#include <deque>

namespace psg {

Vec zero_vec(int n) { return Vec(size_t(n)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("vec: size mismatch in add");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("vec: size mismatch in sub");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec to_dense(const SparseVec& s, int n) {
  Vec r = zero_vec(n);
  for (const auto& [i, c] : s) {
    if (i < 0 || i >= n) throw error("vec: sparse index out of range");
    r[size_t(i)] = c;
  }
  return r;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[int(i)] = v[i];
  return r;
}

void sparse_add_scaled(SparseVec& dst, const Scalar& c, const SparseVec& src) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : src) {
    Scalar nv = dst.count(i) ? dst[i] + c * x : c * x;
    if (nv.is_zero())
      dst.erase(i);
    else
      dst[i] = nv;
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("mat: shape mismatch in add");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("mat: shape mismatch in sub");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw error("mat: shape mismatch in mul");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Mat::apply(const Vec& row) const {
  if (int(row.size()) != rows_) throw error("mat: row vector length mismatch");
  Vec r = zero_vec(cols_);
  for (int i = 0; i < rows_; ++i) {
    if (row[size_t(i)].is_zero()) continue;
    const Scalar& c = row[size_t(i)];
    for (int j = 0; j < cols_; ++j) {
      const Scalar& y = at(i, j);
      if (!y.is_zero()) r[size_t(j)] += c * y;
    }
  }
  return r;
}

Mat Mat::unflatten(const Vec& v, int rows, int cols) {
  if (int(v.size()) != rows * cols) throw error("mat: unflatten size mismatch");
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = v[size_t(r) * cols + c];
  return m;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw error("sparse: index out of range");
  if (v.is_zero())
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

Scalar SparseMatrix::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Scalar(0) : it->second;
}

SparseMatrix SparseMatrix::from_dense(const Mat& m) {
  SparseMatrix s;
  s.rows = m.rows();
  s.cols = m.cols();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) s.entries[{r, c}] = m.at(r, c);
  return s;
}

Mat SparseMatrix::to_dense() const {
  Mat m(rows, cols);
  for (const auto& [rc, v] : entries) m.at(rc.first, rc.second) = v;
  return m;
}

namespace {

// Shared elimination core: rows are sparse maps over columns 0..cols-1, with the
// right-hand side (if any) held at column index `cols`. Produces RREF in place;
// returns pivot (column -> row-slot) assignments in elimination order.
struct Elim {
  int cols;
  std::vector<SparseVec> rows;
  std::vector<std::pair<int, int>> pivots;  // (col, row index into rows)

  void run() {
    std::vector<bool> used(rows.size(), false);
    for (int c = 0; c < cols; ++c) {
      int pr = -1;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        auto it = rows[r].begin();
        if (it != rows[r].end() && it->first == c) {
          pr = int(r);
          break;
        }
      }
      if (pr < 0) continue;
      used[size_t(pr)] = true;
      Scalar inv = rows[size_t(pr)][c].inverse();
      SparseVec norm;
      for (const auto& [j, v] : rows[size_t(pr)]) norm[j] = inv * v;
      rows[size_t(pr)] = norm;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (int(r) == pr) continue;
        auto it = rows[r].find(c);
        if (it == rows[r].end()) continue;
        Scalar f = -it->second;
        sparse_add_scaled(rows[r], f, rows[size_t(pr)]);
      }
      pivots.emplace_back(c, pr);
    }
  }
};

}  // namespace

SolveResult solve_linear(const SparseMatrix& a, const Vec& b) {
  if (int(b.size()) != a.rows) throw error("solve: rhs length mismatch");
  Elim e;
  e.cols = a.cols;
  e.rows.assign(size_t(a.rows), {});
  for (const auto& [rc, v] : a.entries) e.rows[size_t(rc.first)][rc.second] = v;
  for (int r = 0; r < a.rows; ++r)
    if (!b[size_t(r)].is_zero()) e.rows[size_t(r)][a.cols] = b[size_t(r)];
  e.run();

  SolveResult res;
  res.rank = int(e.pivots.size());

  bool consistent = true;
  for (const auto& row : e.rows) {
    if (row.size() == 1 && row.begin()->first == a.cols) {
      consistent = false;
      break;
    }
  }

  std::vector<int> pivot_of_col(size_t(a.cols), -1);
  for (const auto& [c, r] : e.pivots) pivot_of_col[size_t(c)] = r;

  if (consistent) {
    Vec x = zero_vec(a.cols);
    for (const auto& [c, r] : e.pivots) {
      auto it = e.rows[size_t(r)].find(a.cols);
      if (it != e.rows[size_t(r)].end()) x[size_t(c)] = it->second;
    }
    res.particular = x;
  }

  for (int c = 0; c < a.cols; ++c) {
    if (pivot_of_col[size_t(c)] >= 0) continue;
    Vec v = zero_vec(a.cols);
    v[size_t(c)] = Scalar(1);
    for (const auto& [pc, pr] : e.pivots) {
      auto it = e.rows[size_t(pr)].find(c);
      if (it != e.rows[size_t(pr)].end()) v[size_t(pc)] = -it->second;
    }
    res.nullspace.push_back(std::move(v));
  }
  return res;
}

std::vector<Vec> kernel(const SparseMatrix& a) {
  return solve_linear(a, zero_vec(a.rows)).nullspace;
}

int rank_of(const SparseMatrix& a) {
  return solve_linear(a, zero_vec(a.rows)).rank;
}

bool EchelonBasis::insert(Vec v) {
  if (int(v.size()) != ncols_) throw error("echelon: size mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[size_t(pivots_[r])];
    if (!c.is_zero()) {
      Scalar f = -c;
      for (int j = 0; j < ncols_; ++j)
        if (!rows_[r][size_t(j)].is_zero()) v[size_t(j)] += f * rows_[r][size_t(j)];
    }
  }
  int p = -1;
  for (int j = 0; j < ncols_; ++j)
    if (!v[size_t(j)].is_zero()) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Scalar inv = v[size_t(p)].inverse();
  for (int j = 0; j < ncols_; ++j) v[size_t(j)] = inv * v[size_t(j)];
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][size_t(p)];
    if (!c.is_zero()) {
      Scalar f = -c;
      for (int j = 0; j < ncols_; ++j)
        if (!v[size_t(j)].is_zero()) rows_[r][size_t(j)] += f * v[size_t(j)];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Vec EchelonBasis::reduce(const Vec& v) const {
  if (int(v.size()) != ncols_) throw error("echelon: size mismatch");
  Vec w = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = w[size_t(pivots_[r])];
    if (!c.is_zero()) {
      Scalar f = -c;
      for (int j = 0; j < ncols_; ++j)
        if (!rows_[r][size_t(j)].is_zero()) w[size_t(j)] += f * rows_[r][size_t(j)];
    }
  }
  return w;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

std::vector<Mat> span_closure(const std::vector<Mat>& seeds) {
  if (seeds.empty()) throw error("closure: no seed matrices");
  int n = seeds[0].rows();
  for (const auto& s : seeds)
    if (s.rows() != n || s.cols() != n) throw error("closure: seeds must be square, same size");

  EchelonBasis basis(n * n);
  std::vector<Mat> out;
  std::deque<Mat> work;
  auto offer = [&](const Mat& m) {
    if (basis.insert(m.flatten())) {
      out.push_back(m);
      work.push_back(m);
    }
  };
  offer(Mat::identity(n));
  for (const auto& s : seeds) offer(s);
  while (!work.empty()) {
    Mat m = work.front();
    work.pop_front();
    for (const auto& s : seeds) offer(m * s);
  }
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  // Gauss-Jordan on [m | I]; only the first n columns are eliminated. The pivot
  // row that ends as e_c in the left block carries row c of the (two-sided)
  // inverse in the augmented block.
  Elim e;
  e.cols = n;
  e.rows.assign(size_t(n), {});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!m.at(r, c).is_zero()) e.rows[size_t(r)][c] = m.at(r, c);
  for (int r = 0; r < n; ++r) e.rows[size_t(r)][n + r] = Scalar(1);
  e.run();
  if (int(e.pivots.size()) != n) return std::nullopt;
  Mat inv(n, n);
  for (const auto& [c, r] : e.pivots)
    for (int j = 0; j < n; ++j) {
      auto it = e.rows[size_t(r)].find(n + j);
      if (it != e.rows[size_t(r)].end()) inv.at(c, j) = it->second;
    }
  return inv;
}

std::vector<Vec> left_kernel(const Mat& m) {
  SparseMatrix s;
  s.rows = m.cols();
  s.cols = m.rows();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) s.entries[{c, r}] = m.at(r, c);
  return kernel(s);
}

}  // namespace psg
