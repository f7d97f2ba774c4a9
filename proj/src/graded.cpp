#include "voa/graded.hpp"

#include <algorithm>

namespace voa {

Vec& GradedVector::row(const Rat& degree, int dim) {
  auto it = comp_.find(degree);
  if (it == comp_.end()) it = comp_.emplace(degree, Vec(dim, Rat(0))).first;
  if (int(it->second.size()) != dim) throw std::invalid_argument("graded row dim mismatch");
  return it->second;
}

const Vec* GradedVector::row_if(const Rat& degree) const {
  auto it = comp_.find(degree);
  return it == comp_.end() ? nullptr : &it->second;
}

void GradedVector::add_term(const Rat& degree, int index, int dim, const Rat& coeff) {
  if (coeff == 0) return;
  Vec& r = row(degree, dim);
  r[index] += coeff;
  prune();
}

GradedVector& GradedVector::operator+=(const GradedVector& rhs) {
  axpy(Rat(1), rhs);
  return *this;
}

void GradedVector::axpy(const Rat& c, const GradedVector& rhs) {
  if (c == 0) return;
  for (const auto& [deg, rrow] : rhs.comp_) {
    Vec& mine = row(deg, int(rrow.size()));
    for (size_t i = 0; i < rrow.size(); ++i)
      if (rrow[i] != 0) mine[i] += c * rrow[i];
  }
  prune();
}

GradedVector& GradedVector::operator*=(const Rat& c) {
  if (c == 0) {
    comp_.clear();
    return *this;
  }
  for (auto& [deg, row] : comp_)
    for (auto& x : row) x *= c;
  return *this;
}

GradedVector GradedVector::operator+(const GradedVector& rhs) const {
  GradedVector out = *this;
  out += rhs;
  return out;
}

GradedVector GradedVector::operator-(const GradedVector& rhs) const {
  GradedVector out = *this;
  out.axpy(Rat(-1), rhs);
  return out;
}

GradedVector GradedVector::scaled(const Rat& c) const {
  GradedVector out = *this;
  out *= c;
  return out;
}

bool GradedVector::operator==(const GradedVector& rhs) const { return comp_ == rhs.comp_; }

void GradedVector::prune() {
  for (auto it = comp_.begin(); it != comp_.end();) {
    bool zero = std::all_of(it->second.begin(), it->second.end(),
                            [](const Rat& x) { return x == 0; });
    it = zero ? comp_.erase(it) : std::next(it);
  }
}

SpaceLayout::SpaceLayout(std::vector<std::pair<Rat, int>> degree_dims)
    : blocks_(std::move(degree_dims)) {
  for (const auto& [deg, dim] : blocks_) {
    if (dim <= 0) throw std::invalid_argument("layout block dim must be positive");
    if (offsets_.count(deg)) throw std::invalid_argument("duplicate layout degree");
    offsets_[deg] = total_;
    total_ += dim;
  }
}

int SpaceLayout::offset_of(const Rat& degree) const {
  auto it = offsets_.find(degree);
  if (it == offsets_.end())
    throw WindowExceeded("degree " + rat_str(degree) + " outside layout window");
  return it->second;
}

Vec SpaceLayout::flatten(const GradedVector& v) const {
  Vec out(total_, Rat(0));
  for (const auto& [deg, row] : v.components()) {
    int off = offset_of(deg);
    for (size_t i = 0; i < row.size(); ++i) out[off + i] = row[i];
  }
  return out;
}

GradedVector SpaceLayout::unflatten(const Vec& flat) const {
  if (int(flat.size()) != total_) throw std::invalid_argument("unflatten size mismatch");
  GradedVector out;
  int off = 0;
  for (const auto& [deg, dim] : blocks_) {
    for (int i = 0; i < dim; ++i)
      if (flat[off + i] != 0) out.row(deg, dim)[i] = flat[off + i];
    off += dim;
  }
  out.prune();
  return out;
}

GradedVector DegreeMap::apply(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [deg, row] : v.components()) {
    auto it = blocks.find(deg);
    if (it == blocks.end()) continue;  // missing block = zero
    const Matrix& m = it->second;
    Vec img = m.apply(row);
    Vec& target = out.row(deg + shift, m.rows());
    for (size_t i = 0; i < img.size(); ++i) target[i] += img[i];
  }
  out.prune();
  return out;
}

DegreeMap DegreeMap::compose(const DegreeMap& inner) const {
  DegreeMap out;
  out.shift = shift + inner.shift;
  for (const auto& [deg, m_in] : inner.blocks) {
    auto it = blocks.find(deg + inner.shift);
    if (it == blocks.end()) continue;
    out.blocks[deg] = it->second * m_in;
  }
  return out;
}

DegreeMap DegreeMap::operator+(const DegreeMap& rhs) const {
  if (shift != rhs.shift) throw std::invalid_argument("degree map shift mismatch");
  DegreeMap out = *this;
  for (const auto& [deg, m] : rhs.blocks) {
    auto it = out.blocks.find(deg);
    if (it == out.blocks.end())
      out.blocks[deg] = m;
    else
      it->second += m;
  }
  return out;
}

DegreeMap DegreeMap::operator-(const DegreeMap& rhs) const { return *this + rhs.scaled(Rat(-1)); }

DegreeMap DegreeMap::scaled(const Rat& c) const {
  DegreeMap out;
  out.shift = shift;
  for (const auto& [deg, m] : blocks) out.blocks[deg] = m.scaled(c);
  return out;
}

bool DegreeMap::is_zero() const {
  for (const auto& [deg, m] : blocks)
    if (!m.is_zero()) return false;
  return true;
}

Vec DegreeMap::flatten_on(const SpaceLayout& layout) const {
  if (shift != 0) throw std::invalid_argument("flatten_on requires a shift-0 map");
  Vec out;
  for (const auto& [deg, dim] : layout.blocks()) {
    auto it = blocks.find(deg);
    if (it == blocks.end()) {
      out.insert(out.end(), size_t(dim) * dim, Rat(0));
    } else {
      if (it->second.rows() != dim || it->second.cols() != dim)
        throw std::invalid_argument("block dim mismatch in flatten_on");
      Vec f = it->second.flat();
      out.insert(out.end(), f.begin(), f.end());
    }
  }
  return out;
}

}  // namespace voa
