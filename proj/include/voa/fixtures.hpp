#pragma once

#include <map>
#include <memory>
#include <vector>

#include "voa/graded.hpp"
#include "voa/partitions.hpp"

namespace voa {

enum class VoaKind { Heisenberg, Trivial };

enum class ModuleKind { Adjoint, Fock, TwistedFock, DirectSum, TrivialModule };

struct ModuleDesc {
  ModuleKind kind = ModuleKind::Adjoint;
  Rat lambda = 0;   // Fock / first DirectSum summand
  Rat lambda2 = 0;  // second DirectSum summand

  int T() const { return kind == ModuleKind::TwistedFock ? 2 : 1; }

  static ModuleDesc adjoint() { return {ModuleKind::Adjoint}; }
  static ModuleDesc fock(Rat lam) { return {ModuleKind::Fock, std::move(lam)}; }
  static ModuleDesc twisted_fock() { return {ModuleKind::TwistedFock}; }
  static ModuleDesc direct_sum(Rat l1, Rat l2) { return {ModuleKind::DirectSum, std::move(l1), std::move(l2)}; }
  static ModuleDesc trivial() { return {ModuleKind::TrivialModule}; }
};

enum class CacheMode { Private, Off };

class FockEngine;  // internal

// A (VOA, admissible module) pair at a fixed module truncation depth, with
// the exact mode engine computing v_m w. The rank-1 Heisenberg VOA M(1) with
// <alpha,alpha> = 1, its Fock modules M(1,lambda), the Z2-twisted Fock
// module (with the exp(Delta_z) quadratic correction), direct sums of Fock
// modules, and the one-dimensional trivial VOA.
class Fixture {
 public:
  Fixture(VoaKind voa, ModuleDesc mod, Rat module_depth, CacheMode cache = CacheMode::Private);
  ~Fixture();
  Fixture(Fixture&&) noexcept;
  Fixture& operator=(Fixture&&) noexcept;

  VoaKind voa() const { return voa_; }
  const ModuleDesc& module_desc() const { return mod_; }
  int T() const { return mod_.T(); }
  bool twisted() const { return mod_.kind == ModuleKind::TwistedFock; }
  const Rat& depth() const { return depth_; }  // max retained module degree

  // --- graded bases -------------------------------------------------------
  const std::vector<Partition>& v_basis(int weight) const;
  int v_dim(int weight) const;
  int m_dim(const Rat& degree) const;
  std::vector<Rat> m_degrees(const Rat& up_to) const;  // module lattice points
  SpaceLayout v_layout(int max_weight) const;
  // Layout of the even subalgebra V^0 (partition length even); used as the
  // ambient for all twisted-sector span computations.
  SpaceLayout v_even_layout(int max_weight) const;
  // Indices of even-parity basis partitions at the given weight.
  std::vector<int> v_even_indices(int weight) const;
  SpaceLayout m_layout(const Rat& max_degree) const;

  GradedVector v_basis_vector(int weight, int index) const;
  GradedVector m_basis_vector(const Rat& degree, int index) const;
  GradedVector vacuum() const { return v_basis_vector(0, 0); }
  GradedVector omega() const;      // 1/2 alpha(-1)^2 1; zero for the trivial VOA
  GradedVector heisenberg_h() const { return v_basis_vector(1, 0); }

  // --- mode engine --------------------------------------------------------
  // Exact v_m w, degree shift wt v - m - 1 per the admissible-module rule.
  // Throws WindowExceeded past the module depth, LatticeMismatch for a mode
  // index off the sector lattice of a component of v.
  GradedVector mode_action(const GradedVector& v, const Rat& m, const GradedVector& w) const;

  // Operator of v_m on all module degrees <= depth (blocks whose image also
  // stays within depth and at nonnegative degree). v must be homogeneous.
  DegreeMap mode_map(const GradedVector& v, const Rat& m) const;

  // L(k) = omega_{k+1}.
  DegreeMap L(long k) const;

  // Zero mode o(v) = v_{wt v - 1}, extended additively over weights; on the
  // twisted module the odd-sector part of v contributes the zero map.
  DegreeMap o_map(const GradedVector& v) const;

  // exp(Delta_z) correction data (twisted fixtures only): c(m,n) table as
  // computed from the generating function, exposed for tests.
  Rat delta_coefficient(long m, long n) const;

 private:
  VoaKind voa_;
  ModuleDesc mod_;
  Rat depth_;
  CacheMode cache_;
  std::unique_ptr<FockEngine> eng_;    // primary engine
  std::unique_ptr<FockEngine> eng2_;   // second DirectSum summand
  mutable std::map<int, std::vector<Partition>> v_basis_cache_;

  GradedVector mode_action_basis(int weight, int index, const Rat& m, const GradedVector& w) const;
};

// Product u_n v inside V: mode action on the adjoint module of the same VOA
// truncated at weight max_weight.
GradedVector product_in_v(const Fixture& adjoint_fixture, const GradedVector& u, const Rat& n,
                          const GradedVector& v);

}  // namespace voa
