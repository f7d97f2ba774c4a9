#pragma once

#include <string>

#include "voa/fixtures.hpp"
#include "voa/graded.hpp"
#include "voa/qlinalg.hpp"

namespace voa {

enum class Verdict { Holds, Fails, Inconclusive };

const char* verdict_str(Verdict v);

// The M-radical J_M(V) = {v : o(v)|_M = 0} on a truncation window: kernel of
// v -> (o(v)|_{M(0)}, ..., o(v)|_{M(N)}) over flattened V_{<= D}. For a
// twisted module the domain is the even subalgebra V^0_{<= D}, since odd
// vectors have identically zero twisted zero modes.
struct RadicalResult {
  TruncationWindow window;
  SpaceLayout ambient;   // V_{<= D}, even sublayout when twisted
  SubspaceBasis J{0};
  bool stabilized = false;   // kernel at depth N equals kernel at depth N+1
  Rat stabilized_at = -1;    // = N when stabilized
  bool certified = false;    // finite evidence only, by construction
};

// The module fixture must retain depth >= window.N + 1 so the stabilization
// comparison is honest.
RadicalResult compute_radical(const Fixture& mod, const TruncationWindow& window);

// Check, as exact subspace equality in the flattened ambient,
//   J = span{(L(0)+L(-1))u : u in V_{<= D-1}} + (J cap (V_0 + V_1)),
// plus the refinement that the V_1-projection of J cap (V_0 + V_1) lies in
// the adjoint radical J_V(V). `adj_mod` is an adjoint-module fixture of the
// same VOA with depth >= window.N + 1 (used both for products and for
// computing J_V(V)).
struct RadicalTheoremReport {
  Verdict verdict = Verdict::Inconclusive;
  RadicalResult radical;
  int ideal_dim = 0;            // dim (L(0)+L(-1))V_{<= D-1}
  bool easy_inclusion = false;  // ideal subset of J
  bool decomposition = false;   // the displayed equality
  bool v1_projection = false;   // refinement containment
  std::string detail;
};

RadicalTheoremReport verify_radical_theorem(const Fixture& mod, const Fixture& adj_mod,
                                            const TruncationWindow& window);

// For v in J_V(V)_1 and M irreducible, o(v) must act as one scalar across
// all retained degrees. The precondition is enforced: a weight-1 v outside
// the adjoint radical is rejected, not tested.
struct ConstantZeroModeReport {
  bool precondition_ok = false;  // v homogeneous of weight 1 and in J_V(V)
  bool constant = false;
  Rat scalar = 0;
  std::string detail;
};

ConstantZeroModeReport check_constant_zero_mode(const Fixture& mod, const Fixture& adj_mod,
                                                const GradedVector& v,
                                                const TruncationWindow& window);

}  // namespace voa
