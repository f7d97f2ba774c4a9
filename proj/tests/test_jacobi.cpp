#include "doctest.h"
#include "voa/jacobi.hpp"

using namespace voa;

namespace {

// Module depth large enough for intermediate compositions of the sweep.
Fixture sweep_module(ModuleDesc desc, const Rat& w_bound, int wt_bound, long exp_bound) {
  return Fixture(VoaKind::Heisenberg, std::move(desc), w_bound + wt_bound + exp_bound);
}

}  // namespace

TEST_CASE("Jacobi identity on the adjoint module") {
  Fixture mod = sweep_module(ModuleDesc::adjoint(), Rat(2), 2, 3);
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(4));
  JacobiReport rep = verify_jacobi_sweep(mod, adj, 2, Rat(2), 3, mod.depth());
  CHECK(rep.ok());
  CHECK(rep.checked > 1000);
}

TEST_CASE("Jacobi identity on the Fock module M(1,1)") {
  Fixture mod = sweep_module(ModuleDesc::fock(Rat(1)), Rat(2), 2, 3);
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(4));
  JacobiReport rep = verify_jacobi_sweep(mod, adj, 2, Rat(2), 3, mod.depth());
  CHECK(rep.ok());
}

TEST_CASE("twisted Jacobi identity with the sector factor") {
  Fixture mod = sweep_module(ModuleDesc::twisted_fock(), Rat(3) / 2, 2, 3);
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(4));
  JacobiReport rep = verify_jacobi_sweep(mod, adj, 2, Rat(3) / 2, 3, mod.depth());
  CHECK(rep.ok());
  CHECK(rep.checked > 500);
}

TEST_CASE("single-triple checks accumulate counts") {
  Fixture mod = sweep_module(ModuleDesc::adjoint(), Rat(1), 2, 2);
  Fixture adj(VoaKind::Heisenberg, ModuleDesc::adjoint(), Rat(3));
  GradedVector h = adj.heisenberg_h();
  GradedVector om = adj.omega();
  GradedVector w = mod.m_basis_vector(Rat(1), 0);
  JacobiReport rep = verify_jacobi(mod, adj, h, om, w, 2, mod.depth());
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}
