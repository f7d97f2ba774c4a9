#pragma once

#include <map>
#include <vector>

#include "voa/qlinalg.hpp"
#include "voa/rational.hpp"

namespace voa {

// The honesty contract for all infinite-dimensional objects.
//   D: max V-weight retained, N: max module degree retained,
//   P: generator-weight bound for span computations.
struct TruncationWindow {
  int D = 4;
  Rat N = 6;
  int P = 4;

  void validate() const {
    if (D < 0 || N < 0 || P < 0)
      throw std::invalid_argument("window: need D >= 0, N >= 0, P >= 0");
  }
};

// Finitely supported map degree -> coordinate row over that degree's
// partition basis. Zero rows are pruned. Which basis each row refers to is
// carried by context (the fixture owning the space).
class GradedVector {
 public:
  GradedVector() = default;

  bool is_zero() const { return comp_.empty(); }
  const std::map<Rat, Vec>& components() const { return comp_; }

  Vec& row(const Rat& degree, int dim);           // creates a zero row if absent
  const Vec* row_if(const Rat& degree) const;     // nullptr if absent

  void add_term(const Rat& degree, int index, int dim, const Rat& coeff);
  GradedVector& operator+=(const GradedVector& rhs);
  GradedVector& operator*=(const Rat& c);
  GradedVector operator+(const GradedVector& rhs) const;
  GradedVector operator-(const GradedVector& rhs) const;
  GradedVector scaled(const Rat& c) const;
  bool operator==(const GradedVector& rhs) const;

  void axpy(const Rat& c, const GradedVector& rhs);  // *this += c * rhs
  void prune();

 private:
  std::map<Rat, Vec> comp_;
};

// Fixed flattening of degrees <= bound into one ambient coordinate space:
// blocks ordered by increasing degree, each block in basis order. Needed
// because the key subspaces of the theory ((L(0)+L(-1))V, O_n(V), radicals)
// mix weights.
class SpaceLayout {
 public:
  SpaceLayout() = default;
  // degrees must be strictly increasing; dims positive.
  SpaceLayout(std::vector<std::pair<Rat, int>> degree_dims);

  int total_dim() const { return total_; }
  const std::vector<std::pair<Rat, int>>& blocks() const { return blocks_; }
  // offset of a degree block; throws WindowExceeded for unknown degrees.
  int offset_of(const Rat& degree) const;
  bool has_degree(const Rat& degree) const { return offsets_.count(degree) > 0; }

  Vec flatten(const GradedVector& v) const;
  GradedVector unflatten(const Vec& flat) const;

 private:
  std::vector<std::pair<Rat, int>> blocks_;
  std::map<Rat, int> offsets_;
  int total_ = 0;
};

// Graded linear map with a fixed degree shift: the block at degree d maps
// degree-d coordinates to degree d+shift. Missing block = zero. Houses
// operators like o(v) (shift 0) and L(-1) (shift +1).
struct DegreeMap {
  Rat shift;
  std::map<Rat, Matrix> blocks;

  GradedVector apply(const GradedVector& v) const;
  DegreeMap compose(const DegreeMap& inner) const;  // this after inner
  DegreeMap operator+(const DegreeMap& rhs) const;
  DegreeMap operator-(const DegreeMap& rhs) const;
  DegreeMap scaled(const Rat& c) const;
  bool is_zero() const;

  // Concatenated entries of all blocks for the layout's degrees, in layout
  // order; absent blocks contribute zeros. Operator coordinates for
  // dedup/kernel computations. Only valid for shift-0 maps.
  Vec flatten_on(const SpaceLayout& layout) const;
};

}  // namespace voa
