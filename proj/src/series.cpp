#include "voa/series.hpp"

#include <algorithm>

namespace voa {

TruncatedSeries::TruncatedSeries(int nvars, std::array<VarWindow, kMaxVars> windows)
    : nvars_(nvars), win_(windows) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("nvars out of range");
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, int nvars,
                                          std::array<VarWindow, kMaxVars> windows) {
  TruncatedSeries s(nvars, windows);
  Mono m{Rat(0), Rat(0), Rat(0)};
  s.add_term(m, c);
  return s;
}

bool TruncatedSeries::in_window(const Mono& m) const {
  for (int v = 0; v < nvars_; ++v)
    if (m[v] < win_[v].lo || m[v] > win_[v].hi) return false;
  return true;
}

void TruncatedSeries::add_term(const Mono& exps, const Rat& coeff) {
  if (coeff == 0) return;
  for (int v = 0; v < nvars_; ++v)
    if (!is_integer(exps[v] - win_[v].offset))
      throw LatticeMismatch("exponent " + rat_str(exps[v]) + " off the lattice of variable " +
                            std::to_string(v));
  for (int v = nvars_; v < kMaxVars; ++v)
    if (exps[v] != 0) throw std::invalid_argument("exponent on unused variable");
  if (!in_window(exps)) return;
  Rat& c = c_[exps];
  c += coeff;
  if (c == 0) c_.erase(exps);
}

Rat TruncatedSeries::coeff(const Mono& m) const {
  auto it = c_.find(m);
  return it == c_.end() ? Rat(0) : it->second;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  TruncatedSeries out = *this;
  for (const auto& [m, c] : rhs.c_) out.add_term(m, c);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  TruncatedSeries out = *this;
  for (const auto& [m, c] : rhs.c_) out.add_term(m, -c);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("series variable count mismatch");
  // Product lattice: offsets add per variable.
  std::array<VarWindow, kMaxVars> w = win_;
  for (int v = 0; v < nvars_; ++v) {
    Rat off = win_[v].offset + rhs.win_[v].offset;
    while (off < 0) off += 1;
    while (off >= 1) off -= 1;
    w[v].offset = off;
  }
  TruncatedSeries out(nvars_, w);
  for (const auto& [ma, ca] : c_)
    for (const auto& [mb, cb] : rhs.c_) {
      Mono m{Rat(0), Rat(0), Rat(0)};
      for (int v = 0; v < kMaxVars; ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& c) const {
  TruncatedSeries out(nvars_, win_);
  if (c == 0) return out;
  for (const auto& [m, x] : c_) out.add_term(m, c * x);
  return out;
}

TruncatedSeries TruncatedSeries::residue(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("residue: bad variable");
  if (Rat(-1) < win_[var].lo || Rat(-1) > win_[var].hi)
    throw WindowExceeded("residue: exponent -1 of variable " + std::to_string(var) +
                         " was truncated away");
  if (!is_integer(Rat(-1) - win_[var].offset))
    return TruncatedSeries(nvars_, win_);  // -1 off the lattice: residue is 0
  TruncatedSeries out(nvars_, win_);
  for (const auto& [m, c] : c_) {
    if (m[var] != -1) continue;
    Mono mm = m;
    mm[var] = 0;
    out.add_term(mm, c);
  }
  return out;
}

TruncatedSeries expand_one_plus(const Rat& e, int var, int nvars,
                                std::array<TruncatedSeries::VarWindow, TruncatedSeries::kMaxVars> windows) {
  TruncatedSeries out(nvars, windows);
  for (long j = 0; Rat(j) <= windows[var].hi; ++j) {
    Rat b = binom(e, j);
    if (b == 0 && is_integer(e) && e >= 0 && j > e) break;
    TruncatedSeries::Mono m{Rat(0), Rat(0), Rat(0)};
    m[var] = j;
    out.add_term(m, b);
  }
  return out;
}

TruncatedSeries expand_binomial(const Rat& e, int var_i, int var_j, int nvars,
                                std::array<TruncatedSeries::VarWindow, TruncatedSeries::kMaxVars> windows) {
  if (var_i == var_j) throw std::invalid_argument("expand_binomial: variables must differ");
  TruncatedSeries out(nvars, windows);
  Rat sign(1);
  for (long k = 0; Rat(k) <= windows[var_j].hi; ++k) {
    Rat b = binom(e, k) * sign;
    sign = -sign;
    if (b != 0) {
      TruncatedSeries::Mono m{Rat(0), Rat(0), Rat(0)};
      m[var_i] = e - k;
      m[var_j] = k;
      out.add_term(m, b);
    }
  }
  return out;
}

TruncatedSeries delta_series(int var, int nvars,
                             std::array<TruncatedSeries::VarWindow, TruncatedSeries::kMaxVars> windows) {
  TruncatedSeries out(nvars, windows);
  if (windows[var].offset != 0)
    throw LatticeMismatch("delta_series needs an integer lattice");
  for (Rat n = windows[var].lo; n <= windows[var].hi; n += 1) {
    if (!is_integer(n)) continue;
    TruncatedSeries::Mono m{Rat(0), Rat(0), Rat(0)};
    m[var] = n;
    out.add_term(m, Rat(1));
  }
  return out;
}

std::map<std::pair<long, long>, Rat> delta_correction_table(int cutoff) {
  // Bivariate polynomial window [0, cutoff] x [0, cutoff], integer lattice.
  std::array<TruncatedSeries::VarWindow, TruncatedSeries::kMaxVars> w{};
  for (auto& vw : w) vw = {Rat(0), Rat(cutoff), Rat(0)};
  TruncatedSeries sx = expand_one_plus(Rat(1, 2), 0, 2, w);
  TruncatedSeries sy = expand_one_plus(Rat(1, 2), 1, 2, w);
  // u = ((1+x)^{1/2} + (1+y)^{1/2})/2 - 1; lowest total degree 1.
  TruncatedSeries u = (sx + sy).scaled(Rat(1, 2)) -
                      TruncatedSeries::constant(Rat(1), 2, w);
  // -log(1+u) = sum_{k>=1} (-1)^k u^k / k, truncated.
  TruncatedSeries acc(2, w);
  TruncatedSeries upow = u;
  for (long k = 1; k <= 2 * cutoff && !upow.is_zero(); ++k) {
    acc = acc + upow.scaled(Rat((k % 2 == 0) ? 1 : -1, k));
    upow = upow * u;
  }
  std::map<std::pair<long, long>, Rat> table;
  for (const auto& [m, c] : acc.coeffs()) {
    long a = to_long(m[0]), b = to_long(m[1]);
    if (a >= 1 && b >= 1 && a + b <= cutoff) table[{a, b}] = c;
  }
  return table;
}

}  // namespace voa
