#pragma once

// Brute-force X(G) for an arbitrary Z(m_1) + ... + Z(m_k), with no CRT
// splitting and no valuation theory: every cyclic subgroup is enumerated and
// every homomorphism image is tested against the exact image set of End(G).

#include <cstdint>

#include "cqi/finite_group.hpp"
#include "cqi/group.hpp"

namespace cqi {

struct BruteForceX {
  std::uint64_t cyclic_subgroups = 0;
  std::uint64_t members = 0;
};

// <h> is in X(G).
bool in_X_bruteforce(const FiniteAbelianGroup& group, const GroupElement& h);

// With stop_at_first the scan ends at the first member found.
BruteForceX brute_force_X(const FiniteAbelianGroup& group, std::uint64_t cap = kDefaultEnumerationCap,
                          bool stop_at_first = false);
BruteForceX brute_force_X(const CompositeGroupSpec& spec, std::uint64_t cap = kDefaultEnumerationCap,
                          bool stop_at_first = false);

}  // namespace cqi
