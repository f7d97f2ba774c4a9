#include "voa/qlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace voa {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        out.at(i, j) += x * rhs.at(k, j);
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  out += rhs;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Vec Matrix::apply(const Vec& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  Vec out(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) out[i] += at(i, j) * x[j];
  return out;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::pair<Matrix, std::vector<int>> rref(Matrix m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

void SubspaceBasis::recanonicalize() {
  Matrix m(int(rows_.size()), ambient_);
  for (int i = 0; i < int(rows_.size()); ++i)
    for (int j = 0; j < ambient_; ++j) m.at(i, j) = rows_[i][j];
  auto [r, piv] = rref(std::move(m));
  rows_.clear();
  pivots_ = piv;
  for (int i = 0; i < int(piv.size()); ++i) {
    Vec row(ambient_);
    for (int j = 0; j < ambient_; ++j) row[j] = r.at(i, j);
    rows_.push_back(std::move(row));
  }
}

SubspaceBasis SubspaceBasis::from_vectors(int ambient_dim, const std::vector<Vec>& vectors) {
  SubspaceBasis b(ambient_dim);
  for (const auto& v : vectors)
    if (int(v.size()) != ambient_dim) throw std::invalid_argument("ambient mismatch");
  b.rows_ = vectors;
  b.recanonicalize();
  return b;
}

Vec SubspaceBasis::reduce(Vec v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("ambient mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c == 0) continue;
    Rat f = c;  // pivot entry is 1
    for (int j = 0; j < ambient_; ++j)
      if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool SubspaceBasis::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

bool SubspaceBasis::grow(const Vec& v) {
  Vec r = reduce(v);
  auto nz = std::find_if(r.begin(), r.end(), [](const Rat& x) { return x != 0; });
  if (nz == r.end()) return false;
  rows_.push_back(std::move(r));
  recanonicalize();
  return true;
}

SubspaceBasis kernel(const Matrix& m) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int col = 0; col < m.cols(); ++col) {
    if (is_pivot[col]) continue;
    Vec v(m.cols(), Rat(0));
    v[col] = 1;
    for (int i = 0; i < int(piv.size()); ++i) v[piv[i]] = -r.at(i, col);
    basis.push_back(std::move(v));
  }
  return SubspaceBasis::from_vectors(m.cols(), basis);
}

SubspaceBasis row_space(const Matrix& m) {
  std::vector<Vec> rows;
  for (int i = 0; i < m.rows(); ++i) {
    Vec v(m.cols());
    for (int j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
    rows.push_back(std::move(v));
  }
  return SubspaceBasis::from_vectors(m.cols(), rows);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  std::vector<Vec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return SubspaceBasis::from_vectors(a.ambient_dim(), rows);
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  const int n = a.ambient_dim();
  const int k = a.dim(), l = b.dim();
  // Kernel of the stacked system: (x, y) with sum_i x_i a_i + sum_j y_j b_j = 0
  // gives sum_i x_i a_i = -sum_j y_j b_j, an element of the intersection.
  Matrix m(n, k + l);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) m.at(j, i) = a.rows()[i][j];
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < n; ++j) m.at(j, k + i) = b.rows()[i][j];
  SubspaceBasis ker = kernel(m);
  std::vector<Vec> vecs;
  for (const auto& xy : ker.rows()) {
    Vec v(n, Rat(0));
    for (int i = 0; i < k; ++i)
      if (xy[i] != 0)
        for (int j = 0; j < n; ++j) v[j] += xy[i] * a.rows()[i][j];
    vecs.push_back(std::move(v));
  }
  return SubspaceBasis::from_vectors(n, vecs);
}

SubspaceBasis algebra_closure(const std::vector<Matrix>& gens, int d, bool include_identity) {
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("algebra_closure: generators must be d x d");
  SubspaceBasis span(d * d);
  std::vector<Matrix> frontier;
  auto add = [&](const Matrix& m) {
    if (span.grow(m.flat())) frontier.push_back(m);
  };
  if (include_identity) add(Matrix::identity(d));
  for (const auto& g : gens) add(g);
  // Breadth-first: multiply the current frontier by every generator on both
  // sides and re-span. Terminates since dim <= d^2 strictly increases.
  while (!frontier.empty()) {
    std::vector<Matrix> next = std::move(frontier);
    frontier.clear();
    for (const auto& m : next)
      for (const auto& g : gens) {
        add(m * g);
        add(g * m);
      }
  }
  return span;
}

}  // namespace voa
