#include "voa/liehat.hpp"

#include <stdexcept>

namespace voa {

namespace {

Rat single_weight(const GradedVector& v) {
  if (v.components().size() != 1)
    throw std::invalid_argument("expected a homogeneous vector");
  return v.components().begin()->first;
}

}  // namespace

void HatElement::add(GradedVector v, long m) {
  v.prune();
  if (v.is_zero()) return;
  terms.push_back({std::move(v), m});
}

HatElement hat_atom(GradedVector v, long m) {
  HatElement e;
  e.add(std::move(v), m);
  return e;
}

HatElement hat_bracket(const Fixture& adj, const GradedVector& a, long m,
                       const GradedVector& b, long n) {
  Rat wa = single_weight(a), wb = single_weight(b);
  if (!is_integer(wa) || !is_integer(wb))
    throw std::invalid_argument("hat_bracket: integer weights required");
  HatElement out;
  // a_i b vanishes once its weight wa + wb - i - 1 drops below zero.
  long imax = to_long(wa + wb) - 1;
  for (long i = 0; i <= imax; ++i) {
    Rat c = binom(Rat(m), i);
    if (c == 0) continue;
    GradedVector prod = product_in_v(adj, a, Rat(i), b);
    out.add(prod.scaled(c), m + n - i);
  }
  return out;
}

GradedVector zero_bracket(const Fixture& adj, const GradedVector& a,
                          const GradedVector& b) {
  GradedVector out;
  for (const auto& [wt, row] : a.components()) {
    if (!is_integer(wt) || wt < 0)
      throw std::invalid_argument("zero_bracket: nonneg integer weights required");
    GradedVector piece;
    Vec& r = piece.row(wt, int(row.size()));
    r = row;
    long top = to_long(wt) - 1;
    for (long n = 0; n <= top; ++n)
      out.axpy(binom(wt - 1, n), product_in_v(adj, piece, Rat(n), b));
  }
  out.prune();
  return out;
}

std::vector<DegreeMap> evaluate_hat(const Fixture& mod, const HatElement& e) {
  std::map<Rat, DegreeMap> by_shift;
  for (const HatTerm& t : e.terms) {
    Rat shift = single_weight(t.v) - t.m - 1;
    DegreeMap op = mod.mode_map(t.v, Rat(t.m));
    auto it = by_shift.find(shift);
    if (it == by_shift.end())
      by_shift.emplace(shift, std::move(op));
    else
      it->second = it->second + op;
  }
  std::vector<DegreeMap> out;
  out.reserve(by_shift.size());
  for (auto& [s, op] : by_shift) out.push_back(std::move(op));
  return out;
}

DegreeMap evaluate_hat_single(const Fixture& mod, const HatElement& e) {
  auto maps = evaluate_hat(mod, e);
  if (maps.size() > 1)
    throw std::invalid_argument("evaluate_hat_single: element mixes degree shifts");
  if (maps.empty()) return DegreeMap{Rat(0), {}};
  return std::move(maps.front());
}

V0hatQuotient build_v0hat_quotient(const Fixture& adj) {
  int D = to_long(adj.depth());
  V0hatQuotient q;
  q.layout = adj.v_layout(D);
  std::vector<Vec> gens;
  for (int wt = 0; wt <= D - 1; ++wt) {
    for (int i = 0; i < adj.v_dim(wt); ++i) {
      GradedVector u = adj.v_basis_vector(wt, i);
      // (L(0) + L(-1)) u = wt*u + omega_0 u.
      GradedVector x = u.scaled(wt) + product_in_v(adj, adj.omega(), Rat(0), u);
      gens.push_back(q.layout.flatten(x));
    }
  }
  q.ideal = SubspaceBasis::from_vectors(q.layout.total_dim(), gens);
  return q;
}

ZeroModeImage zero_mode_image(const Fixture& mod, const Rat& weight_bound) {
  SpaceLayout op_layout = mod.m_layout(mod.depth());
  int amb = 0;  // flatten_on packs one dim(d)^2 block per degree
  for (const auto& [deg, dim] : op_layout.blocks()) amb += dim * dim;
  ZeroModeImage img{{}, SubspaceBasis(amb)};
  for (int wt = 0; Rat(wt) <= weight_bound; ++wt) {
    for (int i = 0; i < mod.v_dim(wt); ++i) {
      DegreeMap op = mod.o_map(mod.v_basis_vector(wt, i));
      if (img.span.grow(op.flatten_on(op_layout)))
        img.generators.push_back(std::move(op));
    }
  }
  return img;
}

}  // namespace voa
