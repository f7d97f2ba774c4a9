#pragma once

#include <array>
#include <map>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

// Truncated formal Laurent series with rational exponents in up to three
// commuting variables. Windowed maps, never lazy streams: every monomial
// outside the declared per-variable window is dropped at construction and
// multiplication time, and residue extraction refuses to answer when the
// needed exponent was truncated away.
class TruncatedSeries {
 public:
  static constexpr int kMaxVars = 3;
  using Mono = std::array<Rat, kMaxVars>;

  struct VarWindow {
    Rat lo, hi;       // inclusive exponent bounds
    Rat offset;       // exponents lie in offset + Z (lattice per variable)
  };

  TruncatedSeries(int nvars, std::array<VarWindow, kMaxVars> windows);
  static TruncatedSeries constant(const Rat& c, int nvars, std::array<VarWindow, kMaxVars> windows);

  int nvars() const { return nvars_; }
  const std::array<VarWindow, kMaxVars>& windows() const { return win_; }
  const std::map<Mono, Rat>& coeffs() const { return c_; }
  Rat coeff(const Mono& m) const;

  // Inserts (adds) a term; silently drops exponents outside the window,
  // but a lattice violation is a type error.
  void add_term(const Mono& exps, const Rat& coeff);

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries scaled(const Rat& c) const;
  bool is_zero() const { return c_.empty(); }
  bool operator==(const TruncatedSeries& rhs) const { return c_ == rhs.c_; }

  // Coefficient of var^{-1}: a series in the remaining variables.
  // Throws WindowExceeded if exponent -1 of var lies outside the window.
  TruncatedSeries residue(int var) const;

 private:
  int nvars_;
  std::array<VarWindow, kMaxVars> win_;
  std::map<Mono, Rat> c_;
  bool in_window(const Mono& m) const;
};

// (1 + z_var)^e truncated to the window: sum_j binom(e,j) z_var^j.
TruncatedSeries expand_one_plus(const Rat& e, int var, int nvars,
                                std::array<TruncatedSeries::VarWindow, TruncatedSeries::kMaxVars> windows);

// (z_i - z_j)^e expanded, per convention, in nonnegative powers of the
// SECOND variable z_j: sum_{k>=0} binom(e,k) (-1)^k z_i^{e-k} z_j^k.
TruncatedSeries expand_binomial(const Rat& e, int var_i, int var_j, int nvars,
                                std::array<TruncatedSeries::VarWindow, TruncatedSeries::kMaxVars> windows);

// delta(z_var) = sum_{n in Z} z_var^n truncated to the window.
TruncatedSeries delta_series(int var, int nvars,
                             std::array<TruncatedSeries::VarWindow, TruncatedSeries::kMaxVars> windows);

// Coefficients c(m,n), m,n >= 1, m+n <= cutoff, of the bivariate expansion
//   -log[ ((1+x)^{1/2} + (1+y)^{1/2}) / 2 ].
// These are the quadratic-correction coefficients for the Z2-twisted boson;
// they are always computed here, never hard-coded.
std::map<std::pair<long, long>, Rat> delta_correction_table(int cutoff);

}  // namespace voa
