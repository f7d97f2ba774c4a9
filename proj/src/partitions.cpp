#include "voa/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace voa {

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << rat_str(parts[i]);
  }
  os << "]";
  return os.str();
}

namespace {

// Parts scaled by T: T=1 -> any positive integer; T=2 -> odd positive.
void emit(long remaining, long max_part, int T, std::vector<long>& acc,
          std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    for (long v : acc) p.parts.push_back(Rat(v, T));
    out.push_back(std::move(p));
    return;
  }
  long start = std::min<long>(max_part, remaining);
  if (T == 2 && start % 2 == 0) --start;
  const long step = (T == 2) ? 2 : 1;
  for (long part = start; part >= 1; part -= step) {
    acc.push_back(part);
    emit(remaining - part, part, T, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(const Rat& degree, int T) {
  if (T != 1 && T != 2) throw std::invalid_argument("T must be 1 or 2");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  Rat scaled = degree * T;
  if (!is_integer(scaled)) return {};  // degree off the lattice: empty basis
  long n = to_long(scaled);
  std::vector<Partition> out;
  std::vector<long> acc;
  emit(n, n, T, acc, out);
  return out;
}

}  // namespace voa
