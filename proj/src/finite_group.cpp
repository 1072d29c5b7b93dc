#include "cqi/finite_group.hpp"

#include <numeric>
#include <string>

#include "cqi/error.hpp"

namespace cqi {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> moduli)
    : moduli_(std::move(moduli)), strides_(moduli_.size(), 1) {
  for (std::uint64_t m : moduli_) {
    if (m == 0) throw Error(ErrorCode::InvalidSpec, "modulus must be >= 1");
    if (__builtin_mul_overflow(order_, m, &order_))
      throw Error(ErrorCode::OutOfRange, "group order does not fit in 64 bits");
  }
  for (std::size_t i = moduli_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * moduli_[i];
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
  if (g.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (g.coords[i] >= moduli_[i]) return false;
  return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    std::uint64_t s = a.coords[i] + b.coords[i];
    r.coords[i] = s >= moduli_[i] ? s - moduli_[i] : s;
  }
  return r;
}

GroupElement FiniteAbelianGroup::scale(std::uint64_t k, const GroupElement& a) const {
  GroupElement r = zero();
  for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = mul_mod(k % moduli_[i], a.coords[i], moduli_[i]);
  return r;
}

std::uint64_t FiniteAbelianGroup::element_order(const GroupElement& g) const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::uint64_t m = moduli_[i];
    ord = std::lcm(ord, m / std::gcd(g.coords[i], m));
  }
  return ord;
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx += g.coords[i] * strides_[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::uint64_t index) const {
  if (index >= order_) throw Error(ErrorCode::OutOfRange, "element index out of range");
  GroupElement g = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    g.coords[i] = index / strides_[i];
    index %= strides_[i];
  }
  return g;
}

std::vector<std::uint64_t> FiniteAbelianGroup::torsion_steps(std::uint64_t n) const {
  std::vector<std::uint64_t> steps(rank());
  for (std::size_t i = 0; i < rank(); ++i) steps[i] = moduli_[i] / std::gcd(moduli_[i], n);
  return steps;
}

std::uint64_t FiniteAbelianGroup::torsion_size(std::uint64_t n) const {
  std::uint64_t size = 1;
  for (std::uint64_t m : moduli_) size *= std::gcd(m, n);
  return size;
}

std::vector<GroupElement> cyclic_subgroup_generators(const FiniteAbelianGroup& group,
                                                     std::uint64_t cap) {
  if (group.order() > cap)
    throw Error(ErrorCode::CapExceeded, "group order " + std::to_string(group.order()) +
                                            " exceeds enumeration cap " + std::to_string(cap));
  std::vector<bool> seen(group.order(), false);
  std::vector<GroupElement> out;
  const std::size_t k = group.rank();
  for (std::uint64_t idx = 0; idx < group.order(); ++idx) {
    if (seen[idx]) continue;
    GroupElement g = group.element_at(idx);
    const std::uint64_t ord = group.element_order(g);
    // Walk k*g for k = 1..ord-1 and mark every generator of <g>.
    GroupElement cur = g;
    for (std::uint64_t mult = 1; mult < ord || mult == 1; ++mult) {
      if (std::gcd(mult, ord) == 1) seen[group.index_of(cur)] = true;
      if (mult + 1 >= ord) break;
      for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t s = cur.coords[i] + g.coords[i];
        const std::uint64_t m = group.modulus(i);
        cur.coords[i] = s >= m ? s - m : s;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cqi
