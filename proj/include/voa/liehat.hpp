#pragma once

#include <vector>

#include "voa/fixtures.hpp"
#include "voa/graded.hpp"
#include "voa/qlinalg.hpp"

namespace voa {

// Elements of the Lie algebra spanned by the formal modes v(m), v in the
// VOA, m an integer.  An element is a finite sum of terms c * v(m) with v a
// homogeneous vector of the adjoint fixture.
struct HatTerm {
  GradedVector v;  // homogeneous
  long m = 0;
};

struct HatElement {
  std::vector<HatTerm> terms;

  void add(GradedVector v, long m);
  bool empty() const { return terms.empty(); }
};

HatElement hat_atom(GradedVector v, long m);

// [a(m), b(n)] = sum_i binom(m, i) (a_i b)(m + n - i).  a and b must be
// homogeneous; the products a_i b are taken in the adjoint fixture.
HatElement hat_bracket(const Fixture& adj, const GradedVector& a, long m,
                       const GradedVector& b, long n);

// Bracket on the degree-zero part: [a, b] = sum_{n=0}^{wt a - 1}
// binom(wt a - 1, n) a_n b, extended bilinearly over homogeneous pieces.
GradedVector zero_bracket(const Fixture& adj, const GradedVector& a,
                          const GradedVector& b);

// Evaluate a HatElement as an operator on a module fixture.  Every term of a
// degree-zero-preserving element shares the same shift; for a general
// element the terms are grouped by shift and the caller gets one DegreeMap
// per shift.
std::vector<DegreeMap> evaluate_hat(const Fixture& mod, const HatElement& e);

// Evaluate an element known to act with a single shift (e.g. any single
// bracket [a(m), b(n)], whose terms all shift by wt a + wt b - m - n - 2).
DegreeMap evaluate_hat_single(const Fixture& mod, const HatElement& e);

// The subspace (L(0) + L(-1)) V_{<= D-1} inside flattened V_{<= D}, i.e. the
// kernel of the map V_hat(0) -> End(M) restricted to zero modes, together
// with a canonicalizer for cosets.
struct V0hatQuotient {
  SpaceLayout layout;      // flattened V_{<= D}
  SubspaceBasis ideal{0};  // (L(0) + L(-1)) V_{<= D-1} in that layout
  Vec reduce(const Vec& x) const { return ideal.reduce(x); }
};

V0hatQuotient build_v0hat_quotient(const Fixture& adj);

// Distinct operators o(v) on a module, for v running over the V-basis up to
// the generator bound: returns an independent generating family (RREF on the
// flattened operator coordinates) of the image of V_hat(0) in End(M).
struct ZeroModeImage {
  std::vector<DegreeMap> generators;  // independent o(v) maps
  SubspaceBasis span;                 // their span in flattened coordinates
};

ZeroModeImage zero_mode_image(const Fixture& mod, const Rat& weight_bound);

}  // namespace voa
