#include "voa/jacobi.hpp"

#include <map>
#include <sstream>

namespace voa {

namespace {

long floor_long(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor overflow");
  return q.get_si();
}

Rat single_weight(const GradedVector& v, const char* what) {
  if (v.components().size() != 1)
    throw std::invalid_argument(std::string(what) + " must be homogeneous");
  return v.components().begin()->first;
}

int sector_of(const Fixture& f, const GradedVector& v) {
  int r = -1;
  for (const auto& [wt, row] : v.components()) {
    const auto& basis = f.v_basis(int(to_long(wt)));
    for (int i = 0; i < int(row.size()); ++i) {
      if (row[i] == 0) continue;
      int p = basis[i].parity();
      if (r < 0)
        r = p;
      else if (r != p)
        throw std::invalid_argument("vector mixes g-eigenspace sectors");
    }
  }
  return r < 0 ? 0 : r;
}

int parity_mod2(const Rat& x) {
  long v = to_long(x);
  return int(((v % 2) + 2) % 2);
}

}  // namespace

JacobiReport verify_jacobi(const Fixture& mod, const Fixture& adj, const GradedVector& u,
                           const GradedVector& v, const GradedVector& w, long exp_bound,
                           const Rat& fmax) {
  JacobiReport report;
  if (u.is_zero() || v.is_zero() || w.is_zero()) return report;
  const Rat wtu = single_weight(u, "u");
  const Rat wtv = single_weight(v, "v");
  const Rat degw = single_weight(w, "w");
  const bool tw = mod.twisted();
  const int ru = tw ? sector_of(mod, u) : 0;
  const int rv = tw ? sector_of(mod, v) : 0;

  // Per-pair caches: one vector per needed mode composition.
  std::map<Rat, GradedVector> vw_cache, uw_cache, uv_cache;
  std::map<std::pair<Rat, Rat>, GradedVector> x1, x2, x3;
  auto vw = [&](const Rat& t) -> const GradedVector& {
    auto it = vw_cache.find(t);
    if (it == vw_cache.end()) it = vw_cache.emplace(t, mod.mode_action(v, t, w)).first;
    return it->second;
  };
  auto uw = [&](const Rat& s) -> const GradedVector& {
    auto it = uw_cache.find(s);
    if (it == uw_cache.end()) it = uw_cache.emplace(s, mod.mode_action(u, s, w)).first;
    return it->second;
  };
  auto uv = [&](const Rat& i) -> const GradedVector& {
    auto it = uv_cache.find(i);
    if (it == uv_cache.end()) it = uv_cache.emplace(i, adj.mode_action(u, i, v)).first;
    return it->second;
  };
  // u_s (v_t w), v_t (u_s w), (u_i v)_t w
  auto get1 = [&](const Rat& s, const Rat& t) -> const GradedVector& {
    auto key = std::make_pair(s, t);
    auto it = x1.find(key);
    if (it == x1.end()) it = x1.emplace(key, mod.mode_action(u, s, vw(t))).first;
    return it->second;
  };
  auto get2 = [&](const Rat& t, const Rat& s) -> const GradedVector& {
    auto key = std::make_pair(t, s);
    auto it = x2.find(key);
    if (it == x2.end()) it = x2.emplace(key, mod.mode_action(v, t, uw(s))).first;
    return it->second;
  };
  auto get3 = [&](const Rat& i, const Rat& t) -> const GradedVector& {
    auto key = std::make_pair(i, t);
    auto it = x3.find(key);
    if (it == x3.end()) it = x3.emplace(key, mod.mode_action(uv(i), t, w)).first;
    return it->second;
  };

  // z1-exponents lie on ru/T + Z, z2-exponents on rv/T + Z, z0 on Z.
  const int T = mod.T();
  Rat a0 = Rat(-exp_bound) + (ru ? Rat(ru, T) : Rat(0));
  Rat b0 = Rat(-exp_bound) + (rv ? Rat(rv, T) : Rat(0));
  for (Rat a = a0; a <= exp_bound; a += 1) {
    for (Rat b = b0; b <= exp_bound; b += 1) {
      // Final module degree of every term is degw+wtu+wtv+a+b+c+1; sweep the
      // integers c for which it lies in [0, fmax]. The inner products
      // u_{j-c-1}v of term 3 reach V-weight wtu+wtv+c, so c is additionally
      // capped by the adjoint window.
      Rat base = degw + wtu + wtv + a + b + 1;
      long cmax_adj = floor_long(adj.depth() - wtu - wtv);
      for (long c = -floor_long(base); base + c <= fmax && c <= cmax_adj; ++c) {
        const Rat n = Rat(-c - 1);
        GradedVector lhs;
        // term 1: sum_j (-1)^j binom(n,j) u_{n-j-a-1} v_{j-b-1} w
        long jmax1 = floor_long(degw + wtv + b);
        for (long j = 0; j <= jmax1; ++j) {
          Rat coef = binom(n, j);
          if (coef == 0) continue;
          if (j % 2) coef = -coef;
          lhs.axpy(coef, get1(n - j - a - 1, Rat(j) - b - 1));
        }
        // term 2: sum_j (-1)^{n+j} binom(n,j) v_{n-j-b-1} u_{j-a-1} w
        long jmax2 = floor_long(degw + wtu + a);
        for (long j = 0; j <= jmax2; ++j) {
          Rat coef = binom(n, j);
          if (coef == 0) continue;
          if (parity_mod2(n + j) == 0) coef = -coef;  // subtract term 2 from lhs
          lhs.axpy(coef, get2(n - j - b - 1, Rat(j) - a - 1));
        }
        // term 3: sum_j (-1)^j binom(a+j,j) (u_{j-c-1} v)_{-a-b-j-2} w
        // (the twisted factor ((z1-z0)/z2)^{-r/T} folds into the binomial:
        // the z1-exponent there is n-r/T-j with n-r/T = a+j).
        GradedVector rhs;
        long jmax3 = floor_long(wtu + wtv + c);
        for (long j = 0; j <= jmax3; ++j) {
          Rat coef = binom(a + j, j);
          if (coef == 0) continue;
          if (j % 2) coef = -coef;
          rhs.axpy(coef, get3(Rat(j - c - 1), -a - b - j - 2));
        }
        ++report.checked;
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "mismatch at a=" << rat_str(a) << " b=" << rat_str(b) << " c=" << c;
          report.failures.push_back({a, b, Rat(c), os.str()});
        }
      }
    }
  }
  return report;
}

JacobiReport verify_jacobi_sweep(const Fixture& mod, const Fixture& adj, int weight_bound,
                                 const Rat& w_degree_bound, long exp_bound, const Rat& fmax) {
  JacobiReport report;
  for (int wu = 0; wu <= weight_bound; ++wu)
    for (int iu = 0; iu < mod.v_dim(wu); ++iu) {
      GradedVector u = mod.v_basis_vector(wu, iu);
      for (int wv = 0; wv <= weight_bound; ++wv)
        for (int iv = 0; iv < mod.v_dim(wv); ++iv) {
          GradedVector v = mod.v_basis_vector(wv, iv);
          for (const Rat& deg : mod.m_degrees(w_degree_bound))
            for (int iw = 0; iw < mod.m_dim(deg); ++iw)
              report.merge(verify_jacobi(mod, adj, u, v, mod.m_basis_vector(deg, iw),
                                         exp_bound, fmax));
        }
    }
  return report;
}

}  // namespace voa
