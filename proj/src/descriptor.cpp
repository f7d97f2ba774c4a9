#include "voa/descriptor.hpp"

#include <stdexcept>

namespace voa {

FixtureSpec parse_fixture(const std::string& desc) {
  FixtureSpec s;
  if (desc == "heisenberg") {
    s.mod = ModuleDesc::adjoint();
  } else if (desc == "twisted") {
    s.mod = ModuleDesc::twisted_fock();
  } else if (desc == "trivial") {
    s.voa = VoaKind::Trivial;
    s.mod = ModuleDesc::trivial();
  } else if (desc.rfind("fock:", 0) == 0) {
    s.mod = ModuleDesc::fock(rat_parse(desc.substr(5)));
  } else if (desc.rfind("sum:", 0) == 0) {
    std::string rest = desc.substr(4);
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("sum descriptor needs two lambdas: sum:<l1>,<l2>");
    s.mod = ModuleDesc::direct_sum(rat_parse(rest.substr(0, comma)), rat_parse(rest.substr(comma + 1)));
  } else {
    throw std::invalid_argument("unknown fixture descriptor: " + desc);
  }
  return s;
}

std::string format_fixture(const FixtureSpec& spec) {
  switch (spec.mod.kind) {
    case ModuleKind::Adjoint: return "heisenberg";
    case ModuleKind::TwistedFock: return "twisted";
    case ModuleKind::TrivialModule: return "trivial";
    case ModuleKind::Fock: return "fock:" + rat_str(spec.mod.lambda);
    case ModuleKind::DirectSum:
      return "sum:" + rat_str(spec.mod.lambda) + "," + rat_str(spec.mod.lambda2);
  }
  return "?";
}

}  // namespace voa
