#include "voa/radical.hpp"

#include <stdexcept>

namespace voa {

namespace {

// Basis vectors of the ambient space in layout order: the full V_{<= D}
// basis, or only the even-parity partitions for a twisted module.
std::vector<GradedVector> ambient_basis(const Fixture& f, int D, bool even_only) {
  std::vector<GradedVector> out;
  for (int wt = 0; wt <= D; ++wt) {
    if (even_only) {
      for (int i : f.v_even_indices(wt)) out.push_back(f.v_basis_vector(wt, i));
    } else {
      for (int i = 0; i < f.v_dim(wt); ++i) out.push_back(f.v_basis_vector(wt, i));
    }
  }
  return out;
}

// Flatten onto the ambient layout; in the even-only case the vector must
// have no odd-parity coordinates.
Vec flatten_ambient(const Fixture& f, const SpaceLayout& layout, const GradedVector& v,
                    bool even_only) {
  if (!even_only) return layout.flatten(v);
  GradedVector proj;
  for (const auto& [deg, row] : v.components()) {
    if (!is_integer(deg) || deg < 0) throw std::invalid_argument("non-V degree in even flatten");
    int wt = int(to_long(deg));
    auto idx = f.v_even_indices(wt);
    Vec sub(idx.size(), Rat(0));
    std::vector<bool> keep(row.size(), false);
    for (size_t j = 0; j < idx.size(); ++j) {
      sub[j] = row[idx[j]];
      keep[idx[j]] = true;
    }
    for (size_t j = 0; j < row.size(); ++j)
      if (!keep[j] && row[j] != 0)
        throw std::invalid_argument("odd-parity component in even-sector flatten");
    if (!idx.empty()) proj.row(deg, int(idx.size())) = sub;
  }
  return layout.flatten(proj);
}

// Kernel of v -> stacked o(v) blocks over module degrees <= cap.
SubspaceBasis radical_kernel(const Fixture& mod, const std::vector<GradedVector>& basis,
                             const Rat& cap) {
  SpaceLayout op_layout = mod.m_layout(cap);
  std::vector<Vec> cols;
  cols.reserve(basis.size());
  for (const auto& v : basis) cols.push_back(mod.o_map(v).flatten_on(op_layout));
  int rows = cols.empty() ? 0 : int(cols.front().size());
  Matrix A(rows, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    for (int i = 0; i < rows; ++i) A.at(i, j) = cols[j][i];
  return kernel(A);
}

// Coordinate subspace of the ambient layout spanned by the blocks whose
// degree satisfies deg <= top.
SubspaceBasis low_weight_subspace(const SpaceLayout& layout, const Rat& top) {
  std::vector<Vec> vecs;
  int off = 0;
  for (const auto& [deg, dim] : layout.blocks()) {
    if (deg <= top) {
      for (int i = 0; i < dim; ++i) {
        Vec e(layout.total_dim(), Rat(0));
        e[off + i] = 1;
        vecs.push_back(std::move(e));
      }
    }
    off += dim;
  }
  return SubspaceBasis::from_vectors(layout.total_dim(), vecs);
}

}  // namespace

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "inconclusive";
  }
}

RadicalResult compute_radical(const Fixture& mod, const TruncationWindow& window) {
  window.validate();
  if (mod.depth() < window.N + 1)
    throw WindowExceeded("compute_radical needs module depth >= N+1 for stabilization");
  bool even = mod.twisted();
  RadicalResult r;
  r.window = window;
  r.ambient = even ? mod.v_even_layout(window.D) : mod.v_layout(window.D);
  auto basis = ambient_basis(mod, window.D, even);
  SubspaceBasis at_n = radical_kernel(mod, basis, window.N);
  SubspaceBasis at_n1 = radical_kernel(mod, basis, window.N + 1);
  r.J = at_n1;
  r.stabilized = (at_n == at_n1);
  if (r.stabilized) r.stabilized_at = window.N;
  return r;
}

RadicalTheoremReport verify_radical_theorem(const Fixture& mod, const Fixture& adj_mod,
                                            const TruncationWindow& window) {
  window.validate();
  if (window.D < 2) throw std::invalid_argument("verify_radical_theorem needs D >= 2");
  RadicalTheoremReport rep;
  rep.radical = compute_radical(mod, window);
  bool even = mod.twisted();
  const SpaceLayout& layout = rep.radical.ambient;

  // Span of (L(0) + L(-1))u for u running over the (even) basis of V_{<= D-1}.
  std::vector<Vec> ideal_gens;
  for (const GradedVector& u : ambient_basis(mod, window.D - 1, even)) {
    Rat wt = u.components().begin()->first;
    GradedVector x = u.scaled(wt) + product_in_v(adj_mod, adj_mod.omega(), Rat(0), u);
    ideal_gens.push_back(flatten_ambient(mod, layout, x, even));
  }
  SubspaceBasis ideal = SubspaceBasis::from_vectors(layout.total_dim(), ideal_gens);
  rep.ideal_dim = ideal.dim();
  rep.easy_inclusion = rep.radical.J.contains(ideal);

  SubspaceBasis low = low_weight_subspace(layout, Rat(1));
  SubspaceBasis j_low = subspace_intersect(rep.radical.J, low);
  rep.decomposition = (subspace_sum(ideal, j_low) == rep.radical.J);

  // Refinement: project J cap (V_0 + V_1) onto V_1 and compare against the
  // adjoint radical. Weight-1 partitions are odd, so for a twisted module
  // the even ambient has no V_1 block and the check is vacuous.
  RadicalResult adj_rad = compute_radical(adj_mod, window);
  rep.v1_projection = true;
  if (!even && layout.has_degree(Rat(1))) {
    int off1 = layout.offset_of(Rat(1));
    int dim1 = mod.v_dim(1);
    const SpaceLayout& adj_layout = adj_rad.ambient;
    for (const Vec& row : j_low.rows()) {
      Vec embedded(adj_layout.total_dim(), Rat(0));
      for (int i = 0; i < dim1; ++i)
        embedded[adj_layout.offset_of(Rat(1)) + i] = row[off1 + i];
      if (!adj_rad.J.contains(embedded)) {
        rep.v1_projection = false;
        break;
      }
    }
  }

  bool stab = rep.radical.stabilized && adj_rad.stabilized;
  if (!stab) {
    rep.verdict = Verdict::Inconclusive;
    rep.detail = "radical kernel not stabilized within N";
  } else if (rep.decomposition && rep.v1_projection && rep.easy_inclusion) {
    rep.verdict = Verdict::Holds;
  } else {
    rep.verdict = Verdict::Fails;
    rep.detail = "subspace identity failed at this window";
  }
  return rep;
}

ConstantZeroModeReport check_constant_zero_mode(const Fixture& mod, const Fixture& adj_mod,
                                                const GradedVector& v,
                                                const TruncationWindow& window) {
  ConstantZeroModeReport rep;
  if (v.is_zero() || v.components().size() != 1 || v.components().begin()->first != 1) {
    rep.detail = "v must be homogeneous of weight 1";
    return rep;
  }
  RadicalResult adj_rad = compute_radical(adj_mod, window);
  if (!adj_rad.J.contains(adj_rad.ambient.flatten(v))) {
    rep.detail = "v is not in the adjoint radical";
    return rep;
  }
  rep.precondition_ok = true;

  DegreeMap o = mod.o_map(v);
  SpaceLayout m_layout = mod.m_layout(window.N);
  bool first = true;
  rep.constant = true;
  for (const auto& [deg, dim] : m_layout.blocks()) {
    auto it = o.blocks.find(deg);
    Matrix block = (it == o.blocks.end()) ? Matrix(dim, dim) : it->second;
    // Must be scalar * identity with one scalar across all degrees.
    Rat s = block.at(0, 0);
    if (!(block == Matrix::identity(dim).scaled(s))) {
      rep.constant = false;
      rep.detail = "o(v) is not scalar on some degree";
      break;
    }
    if (first) {
      rep.scalar = s;
      first = false;
    } else if (s != rep.scalar) {
      rep.constant = false;
      rep.detail = "o(v) scalar varies across degrees";
      break;
    }
  }
  return rep;
}

}  // namespace voa
