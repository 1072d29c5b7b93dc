#pragma once

// Extension of homomorphisms from cyclic subgroups to endomorphisms.
//
// Two independent routes decide whether f: H -> G extends to End(G):
//   * the valuation criterion (is_extendable_formula / has_nonextendable_hom)
//   * exhaustive search over End(G), either literally table by table
//     (EndomorphismStream, is_extendable_by_search) or through ImageSet,
//     which builds the exact set {F(h) : F in End(G)} column by column.

#include <cstdint>
#include <span>
#include <vector>

#include "cqi/bigint.hpp"
#include "cqi/group.hpp"

namespace cqi {

inline constexpr std::uint64_t kDefaultEndomorphismCap = std::uint64_t{1} << 24;

// f: H -> G stored as the image of H's canonical generator.
struct HomomorphismDescriptor {
  CyclicSubgroupDescriptor source;
  GroupElement image;
  // v_p(x_i) = β_i + max(0, M_i - u)
  std::vector<unsigned> beta;
};

// Throws OutOfRange unless p^u * image = 0.
HomomorphismDescriptor make_hom(const CyclicSubgroupDescriptor& source, GroupElement image,
                                const PrimePowerGroup& group);

// |Hom(H, G)| = Π_i p^{min(u, M_i)}.
BigInt hom_count(const CyclicSubgroupDescriptor& source, const PrimePowerSignature& sig);

// Calls fn(image) for every admissible generator image, in lexicographic order.
template <class Fn>
void for_each_hom_image(const CyclicSubgroupDescriptor& source, const PrimePowerGroup& group, Fn&& fn) {
  for_each_torsion_element(group.group(), checked_pow(group.prime(), source.u), std::forward<Fn>(fn));
}

std::vector<HomomorphismDescriptor> enumerate_homs(const CyclicSubgroupDescriptor& source,
                                                   const PrimePowerGroup& group,
                                                   std::uint64_t cap = kDefaultEnumerationCap);

// Column l holds F(e_l).
struct EndomorphismTable {
  std::vector<GroupElement> columns;

  GroupElement apply(const GroupElement& x, const FiniteAbelianGroup& group) const;
};

// Odometer over all endomorphisms: column l ranges over the elements killed
// by the order of e_l, coordinate-wise. Usage: while (s.next()) use(s.current()).
// The cursor is single-threaded; separate cursors are independent.
class EndomorphismStream {
 public:
  explicit EndomorphismStream(const FiniteAbelianGroup& group, std::uint64_t cap = kDefaultEndomorphismCap);
  explicit EndomorphismStream(const PrimePowerGroup& group, std::uint64_t cap = kDefaultEndomorphismCap)
      : EndomorphismStream(group.group(), cap) {}

  bool next();
  const EndomorphismTable& current() const noexcept { return table_; }
  std::uint64_t total() const noexcept { return total_; }

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> steps_;   // flattened (l, i)
  std::vector<std::uint64_t> limits_;  // flattened (l, i)
  std::vector<std::uint64_t> digits_;
  EndomorphismTable table_;
  std::uint64_t total_ = 1;
  bool started_ = false;
  bool done_ = false;
};

// Set of all F(h), F in End(G), accumulated as partial sums
// h_1 F(e_1) + ... + h_l F(e_l) over every column choice.
class ImageSet {
 public:
  ImageSet(const FiniteAbelianGroup& group, const GroupElement& h);

  bool contains(const GroupElement& x) const;
  std::uint64_t size() const noexcept { return size_; }

 private:
  FiniteAbelianGroup group_;
  std::vector<std::uint64_t> bits_;
  std::uint64_t size_ = 0;
};

// Some endomorphism maps the generator to f.image. Throws CapExceeded when
// |End(G)| exceeds cap_end.
bool is_extendable_oracle(const HomomorphismDescriptor& f, const PrimePowerGroup& group,
                          std::uint64_t cap_end = kDefaultEndomorphismCap);

// Same decision by streaming every endomorphism table until one matches.
bool is_extendable_by_search(const HomomorphismDescriptor& f, const PrimePowerGroup& group,
                             std::uint64_t cap_end = kDefaultEndomorphismCap);

// f extends unless some s has β_s + max(0, M_s - u) < min_l (α_l + max(0, M_s - M_l)).
bool is_extendable_formula(const HomomorphismDescriptor& f, const PrimePowerSignature& sig);
bool is_extendable_formula(const CyclicSubgroupDescriptor& source, const GroupElement& image,
                           const PrimePowerSignature& sig);

// H is in X(G): the criterion above already fails at β_s = 0.
bool has_nonextendable_hom(const CyclicSubgroupDescriptor& h, const PrimePowerSignature& sig);

// Condition 1 over expanded coordinates: ∃s with
// max(0, M_s - ‖δ‖) < min_l max(M_l - δ_l, M_s - δ_l).
bool condition1(std::span<const unsigned> flat_delta, const PrimePowerSignature& sig);
bool condition1(const DeltaProfile& delta, const PrimePowerSignature& sig);

// Condition 2: the block-norm form of condition 1, s and l ranging over blocks.
bool condition2_from_norms(std::span<const unsigned> block_norms, unsigned norm,
                           const PrimePowerSignature& sig);
bool condition2(const DeltaProfile& delta, const PrimePowerSignature& sig);

// 1-based block index: 1 if ‖δ‖ < m_1, else max{s : m_s <= ‖δ‖}.
std::size_t f_delta_from_norm(unsigned norm, const PrimePowerSignature& sig);
std::size_t f_delta(const DeltaProfile& delta, const PrimePowerSignature& sig);

// Condition 3 (three cases on ‖δ‖ against m_{f(δ)}).
bool condition3_from_norms(std::span<const unsigned> block_norms, unsigned norm,
                           const PrimePowerSignature& sig);
bool condition3(const DeltaProfile& delta, const PrimePowerSignature& sig);

}  // namespace cqi
