#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace voa {

// Exact rational scalar. Backed by GMP; always canonical (lowest terms,
// positive denominator). No floating point anywhere in this project.
using Rat = mpq_class;

// "p/q", or just "p" when the denominator is 1. This is the wire format
// used in all JSON output.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("not an integer: " + rat_str(r));
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("rational too large");
  return r.get_num().get_si();
}

// Generalized binomial coefficient e(e-1)...(e-j+1)/j! for rational e.
inline Rat binom(const Rat& e, long j) {
  if (j < 0) return Rat(0);
  Rat acc(1);
  for (long t = 0; t < j; ++t) {
    acc *= e - t;
    acc /= t + 1;
  }
  return acc;
}

// Raised when a computation would leave a declared truncation window.
// Results are never silently truncated; the caller must enlarge the window.
struct WindowExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a mode index does not lie on the lattice of its sector.
struct LatticeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace voa
