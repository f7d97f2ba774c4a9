#pragma once

#include <utility>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

using Vec = std::vector<Rat>;

// Dense matrix over exact rationals. Desk-scale dimensions only.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix& operator+=(const Matrix& rhs);
  bool operator==(const Matrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }
  bool is_zero() const;

  Vec apply(const Vec& x) const;  // matrix * column vector
  Matrix scaled(const Rat& c) const;
  Matrix transposed() const;
  Vec flat() const { return a_; }  // row-major entries

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Reduced row-echelon form via exact Gauss-Jordan; returns pivot columns.
std::pair<Matrix, std::vector<int>> rref(Matrix m);

// Canonical (RREF) basis of a subspace of Q^n. Equality of subspaces is
// literal row-wise equality. The common currency of all span computations.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(int ambient_dim) : ambient_(ambient_dim) {}
  static SubspaceBasis from_vectors(int ambient_dim, const std::vector<Vec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return int(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }

  bool contains(const Vec& v) const;
  bool contains(const SubspaceBasis& other) const;
  bool operator==(const SubspaceBasis& rhs) const { return ambient_ == rhs.ambient_ && rows_ == rhs.rows_; }

  // Canonical coset representative: v minus the pivot-coordinate
  // elimination against this basis. reduce(v) == 0 iff contains(v).
  Vec reduce(Vec v) const;

  // Adds v to the span; returns true if the dimension grew.
  bool grow(const Vec& v);

 private:
  int ambient_;
  std::vector<Vec> rows_;        // RREF rows
  std::vector<int> pivots_;      // pivot column per row
  void recanonicalize();
};

SubspaceBasis kernel(const Matrix& m);
SubspaceBasis row_space(const Matrix& m);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// RREF basis, inside the d^2-dimensional space of d x d matrices, of the
// algebra generated by `gens` (optionally unital): breadth-first
// multiplication and re-span until the dimension stabilizes.
SubspaceBasis algebra_closure(const std::vector<Matrix>& gens, int d, bool include_identity);

}  // namespace voa
