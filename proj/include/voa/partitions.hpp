#pragma once

#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

// Weakly decreasing list of positive elements of (1/T)Z. Labels the basis
// vector alpha(-n1)...alpha(-nk) applied to a lowest-weight vector.
// T = 1: positive integers; T = 2 (twisted sector): half-odd 1/2, 3/2, ...
struct Partition {
  std::vector<Rat> parts;

  Rat weight() const {
    Rat s(0);
    for (const auto& p : parts) s += p;
    return s;
  }
  int length() const { return int(parts.size()); }
  // Eigenvalue parity under alpha -> -alpha: 0 for even length, 1 for odd.
  int parity() const { return int(parts.size()) % 2; }
  bool operator==(const Partition& rhs) const { return parts == rhs.parts; }
  bool operator<(const Partition& rhs) const { return parts < rhs.parts; }
  std::string str() const;
};

// All partitions of `degree` with parts on the T-lattice (T = 1: integers;
// T = 2: half-odd integers), in descending lexicographic order on parts.
// Deterministic; golden-tested. Untwisted count at integer n is p(n).
std::vector<Partition> enumerate_partitions(const Rat& degree, int T);

}  // namespace voa
