#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voa/fixtures.hpp"
#include "voa/graded.hpp"
#include "voa/qlinalg.hpp"
#include "voa/radical.hpp"  // Verdict

namespace voa {

// Index of the algebra A_n(V) (or its twisted analogue): n = l + i/T with
// l >= 0 integer and 0 <= i <= T-1.
struct ZhuIndex {
  long l = 0;
  int i = 0;
  int T = 1;

  Rat n() const { return Rat(l) + Rat(i) / T; }
  static ZhuIndex untwisted(long n) { return {n, 0, 1}; }
  static ZhuIndex twisted(long l, int i, int T) { return {l, i, T}; }
};

// delta_i(r) = 1 iff i >= r, with the convention delta_i(T) = 1.
int delta_i(int i, int r, int T);

// u circ_n v = Res_z Y(u,z)v (1+z)^e / z^k. Untwisted: e = wt u + n,
// k = 2n + 2. Twisted, u of sector r: e = wt u - 1 + delta_i(r) + l + r/T,
// k = 2l + delta_i(r) + delta_i(T-r). Products are taken in V via the
// adjoint fixture; u may be inhomogeneous (split into sector-pure pieces).
GradedVector circ(const Fixture& adj, const GradedVector& u, const GradedVector& v,
                  const ZhuIndex& idx, bool twisted);

// u *_n v = sum_{m=0}^{n} (-1)^m binom(m+n, n) Res_z Y(u,z)v
// (1+z)^{wt u + n} / z^{n+m+1}. Twisted with sector r > 0 gives 0; sector 0
// uses the formula with n replaced by l.
GradedVector star(const Fixture& adj, const GradedVector& u, const GradedVector& v,
                  const ZhuIndex& idx, bool twisted);

// Independent classical-product formula Res_z Y(u,z)v (1+z)^{wt u} / z,
// which star with index 0 must reproduce.
GradedVector classical_product(const Fixture& adj, const GradedVector& u,
                               const GradedVector& v);

// The subspace O_n(V) spanned by circ products of weight-bounded generators
// plus (L(-1)+L(0))u, inside flattened V_{<= D'}, with quotient data for the
// classes of V_{<= D}. D' is the depth of the adjoint fixture and must be at
// least 2(P+1) + 2l + 1 so every generator of the P+1 stabilization sweep
// fits exactly.
struct TruncatedZhuAlgebra {
  ZhuIndex idx;
  bool twisted = false;
  TruncationWindow window;
  SpaceLayout big;     // V_{<= D'}
  SpaceLayout small;   // V_{<= D}
  SubspaceBasis O_big{0};    // span of generators of weight <= P+1, big layout
  SubspaceBasis O_small{0};  // O_big cap V_{<= D}, small layout
  std::vector<GradedVector> O_generators;  // the spanning family
  bool stabilized = false;  // O cap V_{<= D} equal at bounds P and P+1
  int stabilized_at_P = -1;
  bool certified = false;

  // Canonical coset form of a class of V_{<= D}.
  Vec reduce(const GradedVector& x) const { return O_small.reduce(small.flatten(x)); }
  int class_count() const { return small.total_dim() - O_small.dim(); }
};

TruncatedZhuAlgebra build_zhu(const Fixture& adj, const ZhuIndex& idx, bool twisted,
                              const TruncationWindow& window);

// Property checks, all modulo the computed O-span. Membership in the
// windowed span certifies true O-membership; a representative the span
// cannot absorb yields Inconclusive, never Fails (the span is a lower
// bound for O).
struct ZhuPropertyReport {
  Verdict verdict = Verdict::Inconclusive;
  bool associativity = false;   // (a*b)*c == a*(b*c) mod O, wt <= 2 triples
  bool identity = false;        // 1 * v == v and v * 1 == v exactly
  bool centrality = false;      // omega * x - x * omega in O
  bool surjection = false;      // O_n subset of O_m for integer m < n
  bool rep_zero = false;        // o(gen) = 0 on M(i), i <= n, all generators
  bool rep_hom = false;         // o(u * v) = o(u) o(v) on M(i), i <= n
  bool stabilized = false;
  std::string detail;
};

ZhuPropertyReport verify_zhu_properties(const TruncatedZhuAlgebra& A, const Fixture& adj,
                                        const std::vector<const Fixture*>& modules);

}  // namespace voa
