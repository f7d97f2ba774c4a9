#include "doctest.h"
#include "voa/radical.hpp"

using namespace voa;

namespace {

Fixture heis(ModuleDesc desc, const Rat& depth) {
  return Fixture(VoaKind::Heisenberg, std::move(desc), depth);
}

}  // namespace

TEST_CASE("adjoint radical contains h and the (L(0)+L(-1)) ideal but not 1, omega") {
  TruncationWindow w{4, Rat(5), 4};
  Fixture adj = heis(ModuleDesc::adjoint(), w.N + 1);
  RadicalResult r = compute_radical(adj, w);
  CHECK(r.stabilized);
  CHECK(!r.certified);
  CHECK(r.J.dim() == 7);
  CHECK(r.J.contains(r.ambient.flatten(adj.heisenberg_h())));
  CHECK(!r.J.contains(r.ambient.flatten(adj.vacuum())));
  CHECK(!r.J.contains(r.ambient.flatten(adj.omega())));
  for (int wt = 1; wt <= 3; ++wt)
    for (int i = 0; i < adj.v_dim(wt); ++i) {
      GradedVector u = adj.v_basis_vector(wt, i);
      CHECK(r.J.contains(r.ambient.flatten(u.scaled(Rat(wt)) + adj.L(-1).apply(u))));
    }
}

TEST_CASE("Fock radical at lambda = 1 contains h - 1") {
  TruncationWindow w{4, Rat(5), 4};
  Fixture mod = heis(ModuleDesc::fock(Rat(1)), w.N + 1);
  RadicalResult r = compute_radical(mod, w);
  GradedVector hm1 = mod.heisenberg_h() - mod.vacuum();
  CHECK(r.J.contains(r.ambient.flatten(hm1)));
  CHECK(!r.J.contains(r.ambient.flatten(mod.heisenberg_h())));
}

TEST_CASE("deepening the module can only shrink the windowed radical") {
  Fixture mod = heis(ModuleDesc::fock(Rat(1)), Rat(7));
  RadicalResult shallow = compute_radical(mod, {4, Rat(3), 4});
  RadicalResult deep = compute_radical(mod, {4, Rat(6), 4});
  CHECK(shallow.J.contains(deep.J));
}

TEST_CASE("radical theorem holds on adjoint and Fock fixtures") {
  TruncationWindow w{4, Rat(6), 4};
  Fixture adj = heis(ModuleDesc::adjoint(), w.N + 1);
  for (ModuleDesc desc : {ModuleDesc::adjoint(), ModuleDesc::fock(Rat(1))}) {
    Fixture mod = heis(std::move(desc), w.N + 1);
    RadicalTheoremReport rep = verify_radical_theorem(mod, adj, w);
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(rep.easy_inclusion);
    CHECK(rep.decomposition);
    CHECK(rep.v1_projection);
    CHECK(rep.ideal_dim == 6);
  }
}

TEST_CASE("twisted radical lives in the even subalgebra and the theorem holds") {
  TruncationWindow w{4, Rat(6), 4};
  Fixture tw = heis(ModuleDesc::twisted_fock(), w.N + 1);
  Fixture adj = heis(ModuleDesc::adjoint(), w.N + 1);
  RadicalResult r = compute_radical(tw, w);
  CHECK(r.stabilized);
  // Ambient is V^0_{<= 4}: even partition lengths only, dims 1,0,1,1,3.
  CHECK(r.ambient.total_dim() == 6);
  CHECK(r.J.dim() == 2);
  RadicalTheoremReport rep = verify_radical_theorem(tw, adj, w);
  CHECK(rep.verdict == Verdict::Holds);
}

TEST_CASE("undersized module depth is refused, not truncated") {
  TruncationWindow w{4, Rat(6), 4};
  Fixture mod = heis(ModuleDesc::fock(Rat(1)), Rat(4));  // needs N + 1 = 7
  CHECK_THROWS_AS(compute_radical(mod, w), WindowExceeded);
}

TEST_CASE("constant zero mode for radical weight-1 vectors") {
  TruncationWindow w{4, Rat(4), 4};
  Fixture adj = heis(ModuleDesc::adjoint(), w.N + 1);
  GradedVector h = adj.heisenberg_h();

  for (int lam = -1; lam <= 2; ++lam) {
    Fixture mod = heis(ModuleDesc::fock(Rat(lam)), w.N + 1);
    ConstantZeroModeReport rep = check_constant_zero_mode(mod, adj, h, w);
    CHECK(rep.precondition_ok);
    CHECK(rep.constant);
    CHECK(rep.scalar == Rat(lam));
  }

  Fixture tw = heis(ModuleDesc::twisted_fock(), w.N + 1);
  ConstantZeroModeReport rep = check_constant_zero_mode(tw, adj, h, w);
  CHECK(rep.precondition_ok);
  CHECK(rep.constant);
  CHECK(rep.scalar == Rat(0));
}

TEST_CASE("constant zero mode rejects vectors outside its hypotheses") {
  TruncationWindow w{4, Rat(4), 4};
  Fixture adj = heis(ModuleDesc::adjoint(), w.N + 1);
  Fixture mod = heis(ModuleDesc::fock(Rat(1)), w.N + 1);
  // omega has weight 2: not a weight-1 radical vector.
  ConstantZeroModeReport r1 = check_constant_zero_mode(mod, adj, adj.omega(), w);
  CHECK(!r1.precondition_ok);
  // The vacuum has weight 0.
  ConstantZeroModeReport r2 = check_constant_zero_mode(mod, adj, adj.vacuum(), w);
  CHECK(!r2.precondition_ok);
}

TEST_CASE("verdict strings") {
  CHECK(std::string(verdict_str(Verdict::Holds)) == "holds");
  CHECK(std::string(verdict_str(Verdict::Fails)) == "fails");
  CHECK(std::string(verdict_str(Verdict::Inconclusive)) == "inconclusive");
}
