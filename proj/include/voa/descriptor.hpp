#pragma once

#include <string>

#include "voa/fixtures.hpp"

namespace voa {

// Fixture descriptors:
//   heisenberg          rank-1 free boson, adjoint module
//   fock:<lambda>       Fock module M(1,lambda), lambda rational
//   twisted             Z2-twisted Fock module
//   sum:<l1>,<l2>       direct sum of two Fock modules
//   trivial             one-dimensional VOA acting on its diagonal module
struct FixtureSpec {
  VoaKind voa = VoaKind::Heisenberg;
  ModuleDesc mod = ModuleDesc::adjoint();
};

FixtureSpec parse_fixture(const std::string& desc);  // throws std::invalid_argument
std::string format_fixture(const FixtureSpec& spec);

}  // namespace voa
