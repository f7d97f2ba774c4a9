#pragma once

#include <string>
#include <vector>

#include "voa/fixtures.hpp"

namespace voa {

struct JacobiFailure {
  Rat a, b, c;
  std::string detail;
};

struct JacobiReport {
  long checked = 0;
  std::vector<JacobiFailure> failures;
  bool ok() const { return failures.empty(); }
  void merge(const JacobiReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

// Coefficient-wise verification of the Jacobi identity on w:
//
//   z0^{-1} d((z1-z2)/z0) Y(u,z1)Y(v,z2) - z0^{-1} d((z2-z1)/-z0) Y(v,z2)Y(u,z1)
//     = z2^{-1} ((z1-z0)/z2)^{-r/T} d((z1-z0)/z2) Y(Y(u,z0)v, z2)
//
// (the ^{-r/T} factor present only in the twisted case, r the sector of u).
// For every z1-power a and z2-power b with |a|,|b| <= exp_bound on the
// sector lattices, and every z0-power c for which the coefficient lands at
// module degree in [0, fmax] (all three terms are complete finite mode sums
// there; larger c needs a deeper module window), the three coefficients are
// extracted as exact module vectors and compared.
//
// u, v must be homogeneous (and sector-pure when twisted); w homogeneous.
JacobiReport verify_jacobi(const Fixture& mod, const Fixture& adj, const GradedVector& u,
                           const GradedVector& v, const GradedVector& w, long exp_bound,
                           const Rat& fmax);

// Sweep over all homogeneous V-basis u, v of weight <= weight_bound and all
// module basis vectors of degree <= w_degree_bound.
JacobiReport verify_jacobi_sweep(const Fixture& mod, const Fixture& adj, int weight_bound,
                                 const Rat& w_degree_bound, long exp_bound, const Rat& fmax);

}  // namespace voa
