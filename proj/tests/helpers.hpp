#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "cqi/group.hpp"

namespace test {

inline cqi::PrimePowerSignature sig(std::uint64_t p, std::initializer_list<std::pair<unsigned, unsigned>> parts) {
  std::vector<cqi::Part> out;
  for (auto [m, l] : parts) out.push_back(cqi::Part{m, l});
  return cqi::PrimePowerSignature(p, std::move(out));
}

inline cqi::GroupElement el(std::initializer_list<std::uint64_t> coords) { return cqi::GroupElement{coords}; }

}  // namespace test
