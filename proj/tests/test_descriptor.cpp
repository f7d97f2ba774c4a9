#include "doctest.h"
#include "voa/descriptor.hpp"

using namespace voa;

TEST_CASE("fixture descriptors parse and round trip") {
  FixtureSpec s = parse_fixture("heisenberg");
  CHECK(s.voa == VoaKind::Heisenberg);
  CHECK(s.mod.kind == ModuleKind::Adjoint);
  CHECK(format_fixture(s) == "heisenberg");

  s = parse_fixture("fock:3/2");
  CHECK(s.mod.kind == ModuleKind::Fock);
  CHECK(s.mod.lambda == Rat(3) / 2);
  CHECK(format_fixture(s) == "fock:3/2");

  s = parse_fixture("twisted");
  CHECK(s.mod.kind == ModuleKind::TwistedFock);
  CHECK(s.mod.T() == 2);

  s = parse_fixture("sum:1,-1");
  CHECK(s.mod.kind == ModuleKind::DirectSum);
  CHECK(s.mod.lambda == Rat(1));
  CHECK(s.mod.lambda2 == Rat(-1));
  CHECK(format_fixture(s) == "sum:1,-1");

  s = parse_fixture("trivial");
  CHECK(s.voa == VoaKind::Trivial);
  CHECK(format_fixture(s) == "trivial");
}

TEST_CASE("malformed descriptors are rejected") {
  CHECK_THROWS_AS(parse_fixture(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture("fock"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture("fock:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture("fock:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture("sum:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture("lattice"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture("fock:1/0"), std::invalid_argument);
}
