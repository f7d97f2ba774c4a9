#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voa/fixtures.hpp"
#include "voa/graded.hpp"
#include "voa/qlinalg.hpp"
#include "voa/radical.hpp"  // Verdict

namespace voa {

// Burnside test for one graded piece M(n): the algebra generated by
// {o(v)|_{M(n)} : v basis of V_{<= P}} (even-sector v only when twisted)
// together with the identity has dimension dim(M(n))^2 exactly when M(n) is
// absolutely irreducible; over the rationals this certifies irreducibility
// over any extension field since scalar extension preserves span dimension.
struct PieceVerdict {
  Rat degree = 0;
  int dim = 0;
  int closure_dim = 0;
  bool absolutely_irreducible = false;
  bool stabilized = false;  // closure dim equal at generator bounds P, P+1
  int stabilized_at_P = -1;
};

PieceVerdict piece_irreducibility(const Fixture& mod, const Rat& degree,
                                  const TruncationWindow& window);

// A graded subspace of M_{<= N} invariant under every windowed mode u_m
// (u of weight <= P). A returned witness is a genuine proper invariant
// subspace at the window; absence of one is evidence, not proof.
struct SubmoduleWitness {
  SpaceLayout layout;  // M_{<= N}
  SubspaceBasis basis{0};
};

std::optional<SubmoduleWitness> find_proper_submodule_witness(const Fixture& mod,
                                                              const TruncationWindow& window);

// Piece verdicts for all degrees <= N plus the action-algebra cross-check
// (generators reduced modulo the Zhu-type subspace O give the same closure,
// since O is killed by o(.) on low degrees). Fixtures with omega = 0 fall
// outside the criterion's hypotheses: the criterion is not applied and only
// the witness search is reported.
struct IrredReport {
  Verdict verdict = Verdict::Inconclusive;
  bool criterion_applicable = false;  // omega != 0
  std::vector<PieceVerdict> pieces;
  bool all_pieces_irreducible = false;
  bool cross_check = false;  // A_n-action algebra == S_M-action algebra on M(0)
  bool stabilized = false;
  bool witness_found = false;
  std::string detail;
};

// `adj` is an adjoint fixture of the same VOA, deep enough for the Zhu
// cross-check (depth >= 2(P+1) + 1).
IrredReport verify_irreducibility_criterion(const Fixture& mod, const Fixture& adj,
                                            const TruncationWindow& window);

}  // namespace voa
