#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cqi {

// Residue vector; coordinate i lives in Z(m_i) of the owning group.
struct GroupElement {
  std::vector<std::uint64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Z(m_1) + ... + Z(m_k) for arbitrary moduli m_i >= 1.
//
// Elements are addressed by a mixed-radix index with coordinate 0 most
// significant, so increasing index is lexicographic order on coordinate
// tuples. The group order must fit in 64 bits.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> moduli);

  std::size_t rank() const noexcept { return moduli_.size(); }
  std::uint64_t modulus(std::size_t i) const { return moduli_.at(i); }
  std::span<const std::uint64_t> moduli() const noexcept { return moduli_; }
  std::uint64_t order() const noexcept { return order_; }

  bool contains(const GroupElement& g) const;
  GroupElement zero() const { return GroupElement{std::vector<std::uint64_t>(rank(), 0)}; }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(std::uint64_t k, const GroupElement& a) const;
  std::uint64_t element_order(const GroupElement& g) const;

  std::uint64_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::uint64_t index) const;
  std::uint64_t stride(std::size_t i) const { return strides_.at(i); }

  // Coordinate steps m_i / gcd(m_i, n): the subgroup killed by n is the box
  // of multiples of these steps.
  std::vector<std::uint64_t> torsion_steps(std::uint64_t n) const;
  // Number of elements x with n*x = 0.
  std::uint64_t torsion_size(std::uint64_t n) const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// Visits every x with n*x = 0 in lexicographic order. The element passed to
// fn is reused between calls.
template <class Fn>
void for_each_torsion_element(const FiniteAbelianGroup& group, std::uint64_t n, Fn&& fn) {
  const std::size_t k = group.rank();
  const std::vector<std::uint64_t> steps = group.torsion_steps(n);
  std::vector<std::uint64_t> digits(k, 0), limits(k);
  for (std::size_t i = 0; i < k; ++i) limits[i] = group.modulus(i) / steps[i];
  GroupElement x = group.zero();
  while (true) {
    fn(static_cast<const GroupElement&>(x));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digits[i] < limits[i]) {
        x.coords[i] += steps[i];
        break;
      }
      digits[i] = 0;
      x.coords[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

// Lexicographically smallest generator of every cyclic subgroup, the trivial
// subgroup included, in increasing order. Throws CapExceeded when the group
// order exceeds cap.
std::vector<GroupElement> cyclic_subgroup_generators(const FiniteAbelianGroup& group,
                                                     std::uint64_t cap);

}  // namespace cqi
