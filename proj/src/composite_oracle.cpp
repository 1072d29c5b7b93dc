#include "cqi/composite_oracle.hpp"

#include "cqi/extension.hpp"

namespace cqi {

bool in_X_bruteforce(const FiniteAbelianGroup& group, const GroupElement& h) {
  const ImageSet images(group, h);
  // Hom(<h>, G) is parametrised by the images x with ord(h) x = 0.
  const std::uint64_t ord = group.element_order(h);
  if (images.size() == group.torsion_size(ord)) return false;
  bool member = false;
  for_each_torsion_element(group, ord, [&](const GroupElement& x) {
    if (!member && !images.contains(x)) member = true;
  });
  return member;
}

BruteForceX brute_force_X(const FiniteAbelianGroup& group, std::uint64_t cap, bool stop_at_first) {
  BruteForceX out;
  for (const GroupElement& h : cyclic_subgroup_generators(group, cap)) {
    ++out.cyclic_subgroups;
    if (in_X_bruteforce(group, h)) {
      ++out.members;
      if (stop_at_first) break;
    }
  }
  return out;
}

BruteForceX brute_force_X(const CompositeGroupSpec& spec, std::uint64_t cap, bool stop_at_first) {
  const CompositeGroupSpec normal = spec.normalized();
  return brute_force_X(FiniteAbelianGroup(normal.moduli), cap, stop_at_first);
}

}  // namespace cqi
