#include "voa/fixtures.hpp"

#include <algorithm>
#include <tuple>

#include "voa/series.hpp"

namespace voa {

namespace {

// Insert a creation part (positive) keeping parts weakly decreasing.
Partition with_part(const Partition& p, const Rat& part) {
  Partition out = p;
  auto it = std::lower_bound(out.parts.begin(), out.parts.end(), part,
                             [](const Rat& a, const Rat& b) { return a > b; });
  out.parts.insert(it, part);
  return out;
}

Partition without_index(const Partition& p, size_t i) {
  Partition out = p;
  out.parts.erase(out.parts.begin() + i);
  return out;
}

}  // namespace

// Exact oscillator engine for one Fock space: basis labels are partitions on
// the T-lattice, [alpha(m), alpha(n)] = m delta_{m+n,0}, alpha(0) = lambda
// (untwisted only). Twisted vertex operators are W(exp(Delta_z)v, z) with W
// the naive twisted normal ordering.
class FockEngine {
 public:
  using Sparse = std::map<Partition, Rat>;

  FockEngine(int T, Rat lambda, Rat depth, bool use_cache)
      : T_(T), lambda_(std::move(lambda)), depth_(std::move(depth)), cache_on_(use_cache) {}

  const std::vector<Partition>& basis(const Rat& deg) const {
    auto it = basis_.find(deg);
    if (it == basis_.end()) it = basis_.emplace(deg, enumerate_partitions(deg, T_)).first;
    return it->second;
  }

  int dim(const Rat& deg) const { return int(basis(deg).size()); }

  int index_of(const Rat& deg, const Partition& p) const {
    auto it = index_.find(deg);
    if (it == index_.end()) {
      std::map<Partition, int> m;
      const auto& b = basis(deg);
      for (int i = 0; i < int(b.size()); ++i) m[b[i]] = i;
      it = index_.emplace(deg, std::move(m)).first;
    }
    auto jt = it->second.find(p);
    if (jt == it->second.end()) throw std::logic_error("partition not in basis");
    return jt->second;
  }

  const Rat& depth() const { return depth_; }
  int T() const { return T_; }

  // v_m w for a V-basis partition v and module-basis partition w.
  // Untwisted fixtures use the naive normal ordering directly; twisted
  // fixtures first expand exp(Delta_z)v.
  Sparse mode(const Partition& v, const Rat& m, const Partition& w) const {
    if (T_ == 1) return naive_mode(v, m, w);
    if (!is_integer(m - (Rat(v.parity()) / 2)))
      throw LatticeMismatch("twisted mode " + rat_str(m) + " off the V^" +
                            std::to_string(v.parity()) + " lattice");
    if (cache_on_) {
      auto it = tw_memo_.find(std::tie(v, m, w));
      if (it != tw_memo_.end()) return it->second;
    }
    Sparse out;
    for (const auto& [s, terms] : exp_delta(v))
      for (const auto& [vp, c] : terms)
        accumulate(out, c, naive_mode(vp, m - s, w));
    if (cache_on_) tw_memo_[std::make_tuple(v, m, w)] = out;
    return out;
  }

  Rat delta_coefficient(long a, long b) const {
    ensure_delta(int(a + b));
    auto it = delta_.find({a, b});
    return it == delta_.end() ? Rat(0) : it->second;
  }

 private:
  int T_;
  Rat lambda_;
  Rat depth_;
  bool cache_on_;
  mutable std::map<Rat, std::vector<Partition>> basis_;
  mutable std::map<Rat, std::map<Partition, int>> index_;
  mutable std::map<std::tuple<Partition, Rat, Partition>, Sparse> memo_, tw_memo_;
  mutable std::map<std::pair<long, long>, Rat> delta_;
  mutable int delta_cutoff_ = -1;
  mutable std::map<Partition, std::map<long, Sparse>> expdelta_;

  static void accumulate(Sparse& into, const Rat& c, const Sparse& terms) {
    if (c == 0) return;
    for (const auto& [p, x] : terms) {
      Rat& slot = into[p];
      slot += c * x;
      if (slot == 0) into.erase(p);
    }
  }

  // alpha(q), q > 0, on a module/V partition: q * multiplicity, one part removed.
  static Sparse annihilate(const Partition& p, const Rat& q) {
    Sparse out;
    for (size_t i = 0; i < p.parts.size(); ++i) {
      if (p.parts[i] != q) continue;
      Partition rem = without_index(p, i);
      Rat& slot = out[rem];
      slot += q;
    }
    return out;
  }

  // Modes of W(v, z) via the recursion
  //   W(alpha(-n)u, z) = (1/(n-1)!) : d^{n-1}alpha(z) W(u, z) :
  // on the module lattice (integers, or half-odds when twisted):
  //   (alpha(-n)u)_m = sum_{q<0} C(q) alpha(q) u_{m-q-n}
  //                  + sum_{q>=0} C(q) u_{m-q-n} alpha(q),
  //   C(q) = (-1)^{n-1} binom(q+n-1, n-1).
  Sparse naive_mode(const Partition& v, const Rat& m, const Partition& w) const {
    Rat res_deg = w.weight() + v.weight() - m - 1;
    if (res_deg < 0) return {};
    if (res_deg > depth_)
      throw WindowExceeded("mode action lands at module degree " + rat_str(res_deg) +
                           " beyond depth " + rat_str(depth_));
    if (v.parts.empty()) {  // vacuum: Y(1,z) = id
      Sparse out;
      if (m == -1) out[w] = 1;
      return out;
    }
    if (cache_on_) {
      auto it = memo_.find(std::tie(v, m, w));
      if (it != memo_.end()) return it->second;
    }
    const Rat n = v.parts.front();  // V partitions have integer parts
    Partition u = without_index(v, 0);
    long nn = to_long(n);
    Sparse out;
    // Creation side: q < 0 on the module lattice. For the integer lattice
    // C(q) vanishes on -n < q < 0, so start at -n.
    Rat q_start = (T_ == 1) ? Rat(-nn) : Rat(-1, 2);
    Rat q_min = m - n + 1 - w.weight() - u.weight();  // below this u_{m-q-n}w = 0
    for (Rat q = q_start; q >= q_min; q -= 1) {
      Rat c = binom(q + n - 1, nn - 1);
      if (nn % 2 == 0) c = -c;
      if (c == 0) continue;
      Sparse inner = naive_mode(u, m - q - n, w);
      for (const auto& [p, x] : inner) {
        Partition created = with_part(p, -q);
        Rat& slot = out[created];
        slot += c * x;
        if (slot == 0) out.erase(created);
      }
    }
    // Annihilation side: q >= 0; alpha(q)w is nonzero only for q = 0
    // (zero mode, untwisted) and for q a part of w.
    if (T_ == 1) {
      Rat c = binom(n - 1, nn - 1);  // q = 0
      if (nn % 2 == 0) c = -c;
      if (c != 0 && lambda_ != 0)
        accumulate(out, c * lambda_, naive_mode(u, m - n, w));
    }
    std::vector<Rat> seen;
    for (const Rat& q : w.parts) {
      if (std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
      seen.push_back(q);
      Rat c = binom(q + n - 1, nn - 1);
      if (nn % 2 == 0) c = -c;
      if (c == 0) continue;
      for (const auto& [wp, cw] : annihilate(w, q))
        accumulate(out, c * cw, naive_mode(u, m - q - n, wp));
    }
    if (cache_on_) memo_[std::make_tuple(v, m, w)] = out;
    return out;
  }

  void ensure_delta(int cutoff) const {
    if (cutoff <= delta_cutoff_) return;
    delta_ = delta_correction_table(cutoff);
    delta_cutoff_ = cutoff;
  }

  // Delta_z v = sum_{a,b>=1} c(a,b) z^{-a-b} alpha(a) alpha(b) v, collected
  // as shift -> sparse V-vector.
  std::map<long, Sparse> apply_delta(const Partition& p) const {
    ensure_delta(int(to_long(p.weight())));
    std::map<long, Sparse> out;
    for (const auto& [ab, c] : delta_) {
      auto [a, b] = ab;
      if (Rat(a + b) > p.weight()) continue;
      for (const auto& [p1, c1] : annihilate(p, Rat(b)))
        for (const auto& [p2, c2] : annihilate(p1, Rat(a)))
          accumulate(out[a + b], c * c1 * c2, Sparse{{p2, Rat(1)}});
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
  }

  const std::map<long, Sparse>& exp_delta(const Partition& v) const {
    auto it = expdelta_.find(v);
    if (it != expdelta_.end()) return it->second;
    std::map<long, Sparse> total{{0, Sparse{{v, Rat(1)}}}};
    std::map<long, Sparse> cur = total;
    for (long k = 1; !cur.empty(); ++k) {
      std::map<long, Sparse> next;
      for (const auto& [s, terms] : cur)
        for (const auto& [p, c] : terms)
          for (const auto& [s2, terms2] : apply_delta(p))
            accumulate(next[s + s2], c / k, terms2);
      for (auto jt = next.begin(); jt != next.end();)
        jt = jt->second.empty() ? next.erase(jt) : std::next(jt);
      for (const auto& [s, terms] : next) accumulate(total[s], Rat(1), terms);
      cur = std::move(next);
    }
    for (auto jt = total.begin(); jt != total.end();)
      jt = jt->second.empty() ? total.erase(jt) : std::next(jt);
    return expdelta_.emplace(v, std::move(total)).first->second;
  }
};

Fixture::Fixture(VoaKind voa, ModuleDesc mod, Rat module_depth, CacheMode cache)
    : voa_(voa), mod_(std::move(mod)), depth_(std::move(module_depth)), cache_(cache) {
  bool use_cache = cache_ == CacheMode::Private;
  // The trivial VOA is its own adjoint module.
  if (voa_ == VoaKind::Trivial && mod_.kind == ModuleKind::Adjoint)
    mod_ = ModuleDesc::trivial();
  switch (mod_.kind) {
    case ModuleKind::Adjoint:
      eng_ = std::make_unique<FockEngine>(1, Rat(0), depth_, use_cache);
      break;
    case ModuleKind::Fock:
      eng_ = std::make_unique<FockEngine>(1, mod_.lambda, depth_, use_cache);
      break;
    case ModuleKind::TwistedFock:
      if (voa_ != VoaKind::Heisenberg) throw std::invalid_argument("twisted module needs the heisenberg VOA");
      eng_ = std::make_unique<FockEngine>(2, Rat(0), depth_, use_cache);
      break;
    case ModuleKind::DirectSum:
      eng_ = std::make_unique<FockEngine>(1, mod_.lambda, depth_, use_cache);
      eng2_ = std::make_unique<FockEngine>(1, mod_.lambda2, depth_, use_cache);
      break;
    case ModuleKind::TrivialModule:
      if (voa_ != VoaKind::Trivial) throw std::invalid_argument("trivial module needs the trivial VOA");
      break;
  }
  if (voa_ == VoaKind::Trivial && mod_.kind != ModuleKind::TrivialModule)
    throw std::invalid_argument("the trivial VOA only carries the trivial module fixture");
}

Fixture::~Fixture() = default;
Fixture::Fixture(Fixture&&) noexcept = default;
Fixture& Fixture::operator=(Fixture&&) noexcept = default;

const std::vector<Partition>& Fixture::v_basis(int weight) const {
  auto it = v_basis_cache_.find(weight);
  if (it == v_basis_cache_.end()) {
    std::vector<Partition> b;
    if (voa_ == VoaKind::Heisenberg)
      b = enumerate_partitions(Rat(weight), 1);
    else if (weight == 0)
      b = {Partition{}};
    it = v_basis_cache_.emplace(weight, std::move(b)).first;
  }
  return it->second;
}

int Fixture::v_dim(int weight) const { return int(v_basis(weight).size()); }

int Fixture::m_dim(const Rat& degree) const {
  if (degree < 0 || degree > depth_) throw WindowExceeded("module degree outside depth");
  switch (mod_.kind) {
    case ModuleKind::TrivialModule:
      return is_integer(degree) ? 1 : 0;
    case ModuleKind::DirectSum:
      return eng_->dim(degree) + eng2_->dim(degree);
    default:
      return eng_->dim(degree);
  }
}

std::vector<Rat> Fixture::m_degrees(const Rat& up_to) const {
  std::vector<Rat> out;
  Rat step(1, T());
  for (Rat d(0); d <= up_to && d <= depth_; d += step) out.push_back(d);
  return out;
}

SpaceLayout Fixture::v_layout(int max_weight) const {
  std::vector<std::pair<Rat, int>> blocks;
  for (int k = 0; k <= max_weight; ++k)
    if (v_dim(k) > 0) blocks.emplace_back(Rat(k), v_dim(k));
  return SpaceLayout(std::move(blocks));
}

std::vector<int> Fixture::v_even_indices(int weight) const {
  std::vector<int> out;
  const auto& b = v_basis(weight);
  for (int i = 0; i < int(b.size()); ++i)
    if (b[i].parity() == 0) out.push_back(i);
  return out;
}

SpaceLayout Fixture::v_even_layout(int max_weight) const {
  std::vector<std::pair<Rat, int>> blocks;
  for (int k = 0; k <= max_weight; ++k) {
    int d = int(v_even_indices(k).size());
    if (d > 0) blocks.emplace_back(Rat(k), d);
  }
  return SpaceLayout(std::move(blocks));
}

SpaceLayout Fixture::m_layout(const Rat& max_degree) const {
  std::vector<std::pair<Rat, int>> blocks;
  for (const Rat& d : m_degrees(max_degree))
    if (m_dim(d) > 0) blocks.emplace_back(d, m_dim(d));
  return SpaceLayout(std::move(blocks));
}

GradedVector Fixture::v_basis_vector(int weight, int index) const {
  if (index < 0 || index >= v_dim(weight)) throw std::invalid_argument("v basis index out of range");
  GradedVector v;
  v.row(Rat(weight), v_dim(weight))[index] = 1;
  return v;
}

GradedVector Fixture::m_basis_vector(const Rat& degree, int index) const {
  if (index < 0 || index >= m_dim(degree)) throw std::invalid_argument("m basis index out of range");
  GradedVector v;
  v.row(degree, m_dim(degree))[index] = 1;
  return v;
}

GradedVector Fixture::omega() const {
  if (voa_ == VoaKind::Trivial) return GradedVector{};
  // Weight-2 basis in descending lex order is [[2], [1,1]]; omega = 1/2 [1,1].
  GradedVector w;
  w.row(Rat(2), v_dim(2))[1] = Rat(1, 2);
  return w;
}

GradedVector Fixture::mode_action_basis(int weight, int index, const Rat& m,
                                        const GradedVector& w) const {
  const Partition& vp = v_basis(weight)[index];
  Rat shift = Rat(weight) - m - 1;
  GradedVector out;
  if (mod_.kind == ModuleKind::TrivialModule) {
    // V = C1, Y(c1, z) = c id.
    if (!is_integer(m)) throw LatticeMismatch("integer mode required");
    if (m == -1) out = w;
    return out;
  }
  if (!twisted() && !is_integer(m))
    throw LatticeMismatch("integer mode required on an untwisted module");
  for (const auto& [wdeg, wrow] : w.components()) {
    Rat target = wdeg + shift;
    if (target < 0) continue;
    if (target > depth_)
      throw WindowExceeded("mode action lands at module degree " + rat_str(target) +
                           " beyond depth " + rat_str(depth_));
    for (int wi = 0; wi < int(wrow.size()); ++wi) {
      if (wrow[wi] == 0) continue;
      const FockEngine* eng = eng_.get();
      int base_in = 0, base_out = 0, local = wi;
      if (mod_.kind == ModuleKind::DirectSum) {
        int d1 = eng_->dim(wdeg);
        if (wi >= d1) {
          eng = eng2_.get();
          local = wi - d1;
          base_out = eng_->dim(target);
        }
      }
      (void)base_in;
      const auto& wb = eng->basis(wdeg)[local];
      auto sparse = eng->mode(vp, m, wb);
      if (sparse.empty()) continue;
      Vec& row = out.row(target, m_dim(target));
      for (const auto& [p, c] : sparse)
        row[base_out + eng->index_of(target, p)] += wrow[wi] * c;
    }
  }
  out.prune();
  return out;
}

GradedVector Fixture::mode_action(const GradedVector& v, const Rat& m,
                                  const GradedVector& w) const {
  GradedVector out;
  for (const auto& [vw, vrow] : v.components()) {
    int k = int(to_long(vw));
    for (int i = 0; i < int(vrow.size()); ++i) {
      if (vrow[i] == 0) continue;
      out.axpy(vrow[i], mode_action_basis(k, i, m, w));
    }
  }
  return out;
}

DegreeMap Fixture::mode_map(const GradedVector& v, const Rat& m) const {
  if (v.components().size() > 1)
    throw std::invalid_argument("mode_map requires homogeneous v");
  DegreeMap out;
  if (v.is_zero()) {
    out.shift = 0;
    return out;
  }
  Rat wt = v.components().begin()->first;
  out.shift = wt - m - 1;
  for (const Rat& d : m_degrees(depth_)) {
    Rat target = d + out.shift;
    if (target < 0 || target > depth_) continue;
    int cols = m_dim(d), rows = m_dim(target);
    if (cols == 0 || rows == 0) continue;
    Matrix block(rows, cols);
    for (int j = 0; j < cols; ++j) {
      GradedVector img = mode_action(v, m, m_basis_vector(d, j));
      if (const Vec* r = img.row_if(target))
        for (int i = 0; i < rows; ++i) block.at(i, j) = (*r)[i];
    }
    out.blocks[d] = std::move(block);
  }
  return out;
}

DegreeMap Fixture::L(long k) const {
  GradedVector om = omega();
  if (om.is_zero()) {
    DegreeMap z;
    z.shift = Rat(-k);
    return z;
  }
  return mode_map(om, Rat(k + 1));
}

DegreeMap Fixture::o_map(const GradedVector& v) const {
  DegreeMap out;
  out.shift = 0;
  for (const auto& [vw, vrow] : v.components()) {
    int k = int(to_long(vw));
    Rat m = vw - 1;
    if (twisted()) {
      // o vanishes on the odd sector: keep even-parity basis terms only.
      GradedVector even;
      const auto& basis = v_basis(k);
      for (int i = 0; i < int(vrow.size()); ++i)
        if (vrow[i] != 0 && basis[i].parity() == 0)
          even.row(vw, int(vrow.size()))[i] = vrow[i];
      even.prune();
      if (!even.is_zero()) out = out + mode_map(even, m);
    } else {
      GradedVector comp;
      comp.row(vw, int(vrow.size())) = vrow;
      out = out + mode_map(comp, m);
    }
  }
  return out;
}

Rat Fixture::delta_coefficient(long m, long n) const {
  if (!twisted()) throw std::invalid_argument("delta correction is a twisted-fixture notion");
  return eng_->delta_coefficient(m, n);
}

GradedVector product_in_v(const Fixture& adjoint_fixture, const GradedVector& u, const Rat& n,
                          const GradedVector& v) {
  if (adjoint_fixture.module_desc().kind != ModuleKind::Adjoint &&
      adjoint_fixture.module_desc().kind != ModuleKind::TrivialModule)
    throw std::invalid_argument("product_in_v needs an adjoint fixture");
  return adjoint_fixture.mode_action(u, n, v);
}

}  // namespace voa
