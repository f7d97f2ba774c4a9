#include "doctest.h"
#include "voa/fixtures.hpp"

using namespace voa;

namespace {

// Commutator [a_m, b_n] w computed from the two compositions.
GradedVector commutator(const Fixture& f, const GradedVector& a, const Rat& m,
                        const GradedVector& b, const Rat& n, const GradedVector& w) {
  return f.mode_action(a, m, f.mode_action(b, n, w)) -
         f.mode_action(b, n, f.mode_action(a, m, w));
}

}  // namespace

TEST_CASE("graded dimensions of the Heisenberg VOA") {
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(6));
  const int p[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) CHECK(adj.v_dim(n) == p[n]);
  CHECK(adj.m_dim(Rat(3)) == 3);
  CHECK(adj.v_layout(4).total_dim() == 12);
}

TEST_CASE("vacuum axioms") {
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(5));
  GradedVector one = adj.vacuum();
  GradedVector h = adj.heisenberg_h();
  // 1_{-1} is the identity, all other vacuum modes vanish.
  CHECK(adj.mode_action(one, Rat(-1), h) == h);
  CHECK(adj.mode_action(one, Rat(0), h).is_zero());
  CHECK(adj.mode_action(one, Rat(1), h).is_zero());
  // h_m 1 = 0 for m >= 0; h_{-1} 1 = h.
  CHECK(adj.mode_action(h, Rat(0), one).is_zero());
  CHECK(adj.mode_action(h, Rat(1), one).is_zero());
  CHECK(adj.mode_action(h, Rat(-1), one) == h);
}

TEST_CASE("Heisenberg commutators [h_m, h_n] = m delta_{m+n,0}") {
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(8));
  GradedVector h = adj.heisenberg_h();
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      for (int wt = 0; wt <= 2; ++wt)
        for (int i = 0; i < adj.v_dim(wt); ++i) {
          GradedVector w = adj.v_basis_vector(wt, i);
          GradedVector c = commutator(adj, h, Rat(m), h, Rat(n), w);
          GradedVector expect = (m + n == 0) ? w.scaled(Rat(m)) : GradedVector{};
          CHECK(c == expect);
        }
    }
}

TEST_CASE("h_{-1} h = 2 omega") {
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(4));
  GradedVector h = adj.heisenberg_h();
  CHECK(adj.mode_action(h, Rat(-1), h) == adj.omega().scaled(Rat(2)));
}

TEST_CASE("Virasoro relations at central charge 1") {
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(9));
  for (long m = -2; m <= 2; ++m)
    for (long n = -2; n <= 2; ++n) {
      for (int wt = 0; wt <= 2; ++wt)
        for (int i = 0; i < adj.v_dim(wt); ++i) {
          GradedVector w = adj.v_basis_vector(wt, i);
          GradedVector lhs = commutator(adj, adj.omega(), Rat(m + 1), adj.omega(), Rat(n + 1), w);
          GradedVector rhs = adj.mode_action(adj.omega(), Rat(m + n + 1), w).scaled(Rat(m - n));
          if (m + n == 0) rhs += w.scaled(Rat(m * m * m - m) / 12);  // c = 1
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("L(0) grades and L(-1) translates") {
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(5));
  for (int wt = 0; wt <= 4; ++wt)
    for (int i = 0; i < adj.v_dim(wt); ++i) {
      GradedVector v = adj.v_basis_vector(wt, i);
      CHECK(adj.L(0).apply(v) == v.scaled(Rat(wt)));
    }
  // Translation covariance: (L(-1)v)_m = -m v_{m-1} on a test vector.
  GradedVector h = adj.heisenberg_h();
  GradedVector dh = adj.L(-1).apply(h);
  for (long m = -2; m <= 2; ++m) {
    GradedVector lhs = adj.mode_action(dh, Rat(m), h);
    GradedVector rhs = adj.mode_action(h, Rat(m - 1), h).scaled(Rat(-m));
    CHECK(lhs == rhs);
  }
  // L(-1) is injective off the vacuum line at retained weights.
  for (int wt = 1; wt <= 3; ++wt)
    for (int i = 0; i < adj.v_dim(wt); ++i)
      CHECK(!adj.L(-1).apply(adj.v_basis_vector(wt, i)).is_zero());
  CHECK(adj.L(-1).apply(adj.vacuum()).is_zero());
}

TEST_CASE("zero mode of h is the scalar lambda on Fock modules") {
  for (int lam = -2; lam <= 2; ++lam) {
    Fixture mod(VoaKind::Heisenberg, ModuleDesc::fock(Rat(lam)), Rat(3));
    GradedVector h = mod.heisenberg_h();
    for (const Rat& d : mod.m_degrees(Rat(3)))
      for (int i = 0; i < mod.m_dim(d); ++i) {
        GradedVector w = mod.m_basis_vector(d, i);
        CHECK(mod.mode_action(h, Rat(0), w) == w.scaled(Rat(lam)));
      }
  }
}

TEST_CASE("twisted module: o(odd sector) = 0 and lowest weight 1/16") {
  Fixture tw(VoaKind::Heisenberg, ModuleDesc::twisted_fock(), Rat(3));
  CHECK(tw.T() == 2);
  CHECK(tw.twisted());
  // Degrees are the half-integer lattice with nontrivial dimensions.
  CHECK(tw.m_dim(Rat(0)) == 1);
  CHECK(tw.m_dim(Rat(1) / 2) == 1);
  CHECK(tw.m_dim(Rat(3) / 2) == 2);
  // o(h) = 0: h lies in the odd sector.
  CHECK(tw.o_map(tw.heisenberg_h()).is_zero());
  // L(0) on the twisted vacuum is exactly 1/16 (degree + 1/16 in general),
  // produced by the quadratic correction, not hard-coded.
  DegreeMap L0 = tw.L(0);
  CHECK(L0.blocks.at(Rat(0)).at(0, 0) == Rat(1) / 16);
  CHECK(L0.blocks.at(Rat(1) / 2).at(0, 0) == Rat(1) / 2 + Rat(1) / 16);
  CHECK(tw.delta_coefficient(1, 1) == Rat(1) / 16);
}

TEST_CASE("twisted modes live on the shifted lattice") {
  Fixture tw(VoaKind::Heisenberg, ModuleDesc::twisted_fock(), Rat(3));
  GradedVector h = tw.heisenberg_h();
  GradedVector vac = tw.m_basis_vector(Rat(0), 0);
  // h is odd: its twisted modes are indexed by 1/2 + Z.
  CHECK(!tw.mode_action(h, Rat(-1) / 2, vac).is_zero());
  CHECK_THROWS_AS(tw.mode_action(h, Rat(0), vac), LatticeMismatch);
  // omega is even: integer modes only.
  CHECK_THROWS_AS(tw.mode_action(tw.omega(), Rat(1) / 2, vac), LatticeMismatch);
}

TEST_CASE("twisted commutator [h_m, h_n] = m delta_{m+n,0} on half-odd modes") {
  Fixture tw(VoaKind::Heisenberg, ModuleDesc::twisted_fock(), Rat(4));
  GradedVector h = tw.heisenberg_h();
  std::vector<Rat> modes{Rat(-3) / 2, Rat(-1) / 2, Rat(1) / 2, Rat(3) / 2};
  for (const Rat& m : modes)
    for (const Rat& n : modes) {
      GradedVector w = tw.m_basis_vector(Rat(1) / 2, 0);
      GradedVector c = commutator(tw, h, m, h, n, w);
      GradedVector expect = (m + n == 0) ? w.scaled(m) : GradedVector{};
      CHECK(c == expect);
    }
}

TEST_CASE("direct sum module acts diagonally") {
  Fixture sum(VoaKind::Heisenberg, ModuleDesc::direct_sum(Rat(1), Rat(-1)), Rat(3));
  CHECK(sum.m_dim(Rat(0)) == 2);
  GradedVector h = sum.heisenberg_h();
  GradedVector e0 = sum.m_basis_vector(Rat(0), 0);
  GradedVector e1 = sum.m_basis_vector(Rat(0), 1);
  CHECK(sum.mode_action(h, Rat(0), e0) == e0.scaled(Rat(1)));
  CHECK(sum.mode_action(h, Rat(0), e1) == e1.scaled(Rat(-1)));
}

TEST_CASE("trivial VOA fixture has omega = 0 and identity vertex operator") {
  Fixture triv(VoaKind::Trivial, ModuleDesc::trivial(), Rat(4));
  CHECK(triv.omega().is_zero());
  CHECK(triv.m_dim(Rat(0)) == 1);
  CHECK(triv.m_dim(Rat(3)) == 1);
}

TEST_CASE("window and lattice guards on mode actions") {
  Fixture mod(VoaKind::Heisenberg, ModuleDesc::fock(Rat(1)), Rat(2));
  GradedVector h = mod.heisenberg_h();
  GradedVector top = mod.m_basis_vector(Rat(2), 0);
  CHECK_THROWS_AS(mod.mode_action(h, Rat(-1), top), WindowExceeded);
  CHECK_THROWS_AS(mod.mode_action(h, Rat(1) / 2, top), LatticeMismatch);
}

TEST_CASE("memoization mode does not change results") {
  Fixture with(VoaKind::Heisenberg, ModuleDesc::fock(Rat(2)), Rat(6), CacheMode::Private);
  Fixture without(VoaKind::Heisenberg, ModuleDesc::fock(Rat(2)), Rat(6), CacheMode::Off);
  GradedVector om = with.omega();
  for (const Rat& d : with.m_degrees(Rat(3)))
    for (int i = 0; i < with.m_dim(d); ++i) {
      GradedVector w = with.m_basis_vector(d, i);
      for (long m = -1; m <= 2; ++m)
        CHECK(with.mode_action(om, Rat(m), w) == without.mode_action(om, Rat(m), w));
    }
}

TEST_CASE("product_in_v matches the adjoint mode action") {
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(4));
  GradedVector h = adj.heisenberg_h();
  CHECK(product_in_v(adj, h, Rat(-1), h) == adj.mode_action(h, Rat(-1), h));
  CHECK(product_in_v(adj, h, Rat(1), h) == adj.vacuum());
}
