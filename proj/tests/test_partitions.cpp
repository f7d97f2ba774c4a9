#include "doctest.h"
#include "voa/partitions.hpp"

using namespace voa;

TEST_CASE("untwisted partition counts match p(n)") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n)
    CHECK(enumerate_partitions(Rat(n), 1).size() == size_t(expected[n]));
}

TEST_CASE("untwisted enumeration is descending lexicographic") {
  auto parts = enumerate_partitions(Rat(4), 1);
  REQUIRE(parts.size() == 5);
  CHECK(parts[0].parts == std::vector<Rat>{Rat(4)});
  CHECK(parts[1].parts == std::vector<Rat>{Rat(3), Rat(1)});
  CHECK(parts[2].parts == std::vector<Rat>{Rat(2), Rat(2)});
  CHECK(parts[3].parts == std::vector<Rat>{Rat(2), Rat(1), Rat(1)});
  CHECK(parts[4].parts == std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("twisted partitions use half-odd parts only") {
  auto half = enumerate_partitions(Rat(1) / 2, 2);
  REQUIRE(half.size() == 1);
  CHECK(half[0].parts == std::vector<Rat>{Rat(1) / 2});

  auto three_half = enumerate_partitions(Rat(3) / 2, 2);
  REQUIRE(three_half.size() == 2);
  CHECK(three_half[0].parts == std::vector<Rat>{Rat(3) / 2});
  CHECK(three_half[1].parts == std::vector<Rat>{Rat(1) / 2, Rat(1) / 2, Rat(1) / 2});

  auto two = enumerate_partitions(Rat(2), 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].parts == std::vector<Rat>{Rat(3) / 2, Rat(1) / 2});
  CHECK(two[1].parts == std::vector<Rat>(4, Rat(1) / 2));
}

TEST_CASE("integer degrees with no valid twisted partition are empty except 0") {
  CHECK(enumerate_partitions(Rat(0), 2).size() == 1);   // empty partition
  CHECK(enumerate_partitions(Rat(1), 2).size() == 1);   // [1/2, 1/2]
  CHECK(enumerate_partitions(Rat(1) / 3, 2).empty());   // off-lattice
}

TEST_CASE("weight and parity") {
  Partition p{{Rat(3) / 2, Rat(1) / 2, Rat(1) / 2}};
  CHECK(p.weight() == Rat(5) / 2);
  CHECK(p.length() == 3);
  CHECK(p.parity() == 1);
  Partition q{{Rat(2), Rat(2)}};
  CHECK(q.parity() == 0);
  Partition empty{};
  CHECK(empty.weight() == Rat(0));
  CHECK(empty.parity() == 0);
}
