#pragma once

// Finite abelian p-groups and composite groups given as sums of cyclic
// factors: signatures, CRT decomposition, p-adic valuations, cyclic subgroup
// enumeration and counting.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cqi/bigint.hpp"
#include "cqi/finite_group.hpp"

namespace cqi {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

// One summand Z(p^exponent)^multiplicity.
struct Part {
  unsigned exponent = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const Part&, const Part&) = default;
  friend auto operator<=>(const Part&, const Part&) = default;
};

// G = Z(p^{m_1})^{λ_1} + ... + Z(p^{m_n})^{λ_n} with m_1 < ... < m_n.
//
// Block indices are 0-based in this API. The expanded coordinates list each
// block's exponent λ_i times, in block order.
class PrimePowerSignature {
 public:
  // Validates: p prime, parts nonempty, exponents strictly increasing and
  // positive, multiplicities positive. Use normalize_signature for raw input.
  PrimePowerSignature(std::uint64_t p, std::vector<Part> parts);

  std::uint64_t prime() const noexcept { return p_; }
  std::span<const Part> parts() const noexcept { return parts_; }
  std::size_t block_count() const noexcept { return parts_.size(); }
  unsigned exponent(std::size_t block) const { return parts_.at(block).exponent; }
  unsigned multiplicity(std::size_t block) const { return parts_.at(block).multiplicity; }

  // N = sum of multiplicities.
  std::size_t expanded_length() const noexcept { return expanded_.size(); }
  // M_i for each expanded coordinate.
  std::span<const unsigned> expanded_exponents() const noexcept { return expanded_; }
  // Block owning expanded coordinate i.
  std::size_t block_of(std::size_t coord) const { return block_of_.at(coord); }
  // |λ|_j = λ_1 + ... + λ_j, with j counted from 1; |λ|_0 = 0.
  unsigned prefix_multiplicity(std::size_t j) const { return prefix_.at(j); }
  // Σ m_i λ_i, so |G| = p^total_exponent.
  std::uint64_t total_exponent() const noexcept;
  // Π (m_i + 1)^{λ_i}: number of candidate valuation profiles.
  BigInt candidate_space() const;
  // Π_l Π_i p^{min(M_l, M_i)}: number of endomorphisms.
  BigInt endomorphism_count() const;

  bool is_homocyclic() const noexcept { return parts_.size() == 1; }

  // "p=2: 4^1+32^1"
  std::string to_string() const;

  friend bool operator==(const PrimePowerSignature& a, const PrimePowerSignature& b) {
    return a.p_ == b.p_ && a.parts_ == b.parts_;
  }

 private:
  std::uint64_t p_;
  std::vector<Part> parts_;
  std::vector<unsigned> expanded_;
  std::vector<std::size_t> block_of_;
  std::vector<unsigned> prefix_;
};

// Sorts parts, merges equal exponents and drops zero exponents.
PrimePowerSignature normalize_signature(std::uint64_t p, std::vector<Part> raw);

// G = Z(m_1) + ... + Z(m_k), m_i >= 1.
struct CompositeGroupSpec {
  std::vector<std::uint64_t> moduli;

  void validate() const;
  // Drops Z(1) factors; factor order is kept.
  CompositeGroupSpec normalized() const;
  BigInt order() const;
  // "Z(6)+Z(12)"; the trivial group prints as "Z(1)".
  std::string to_string() const;

  friend bool operator==(const CompositeGroupSpec&, const CompositeGroupSpec&) = default;
};

// Prime p -> signature of G_p; primes dividing no modulus are absent.
std::map<std::uint64_t, PrimePowerSignature> crt_decompose(const CompositeGroupSpec& spec);

// v_p(x) for x in Z(p^r), with v_p(0) = r. Throws OutOfRange unless x < p^r.
unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned r);

// p^k, throwing OutOfRange when it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned k);

// φ(p^k).
BigInt euler_phi_prime_power(std::uint64_t p, unsigned k);

// Element-level view of a signature: Z(p^{M_1}) + ... + Z(p^{M_N}) over the
// expanded coordinates. Throws OutOfRange if some p^{M_i} or the group order
// exceeds 64 bits.
class PrimePowerGroup {
 public:
  explicit PrimePowerGroup(PrimePowerSignature sig);

  const PrimePowerSignature& signature() const noexcept { return sig_; }
  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::uint64_t prime() const noexcept { return sig_.prime(); }
  std::size_t rank() const noexcept { return group_.rank(); }
  unsigned coord_exponent(std::size_t i) const { return sig_.expanded_exponents()[i]; }
  std::uint64_t order() const noexcept { return group_.order(); }

 private:
  PrimePowerSignature sig_;
  FiniteAbelianGroup group_;
};

std::uint64_t element_order_exponent(const GroupElement& g, const PrimePowerGroup& group);

// Profile δ grouped into blocks; block i holds λ_i entries bounded by m_i.
class DeltaProfile {
 public:
  DeltaProfile() = default;
  explicit DeltaProfile(std::vector<std::vector<unsigned>> blocks);

  // Regroups a flat vector along the signature's blocks.
  static DeltaProfile from_flat(std::span<const unsigned> flat, const PrimePowerSignature& sig);

  const std::vector<std::vector<unsigned>>& blocks() const noexcept { return blocks_; }
  std::vector<unsigned> flat() const;
  unsigned norm() const noexcept;
  unsigned block_norm(std::size_t block) const;
  bool is_zero() const noexcept { return norm() == 0; }
  // Checks shape and entry bounds against sig.
  bool fits(const PrimePowerSignature& sig) const;

  std::string to_string() const;

  friend bool operator==(const DeltaProfile&, const DeltaProfile&) = default;
  friend auto operator<=>(const DeltaProfile&, const DeltaProfile&) = default;

 private:
  std::vector<std::vector<unsigned>> blocks_;
};

struct CyclicSubgroupDescriptor {
  GroupElement generator;      // lexicographically smallest generator
  std::vector<unsigned> alpha; // α_i = v_p(h_i)
  unsigned u = 0;              // |H| = p^u

  friend bool operator==(const CyclicSubgroupDescriptor&, const CyclicSubgroupDescriptor&) = default;
};

// Builds the descriptor for <g>; g is taken as generator without
// canonicalization.
CyclicSubgroupDescriptor describe_cyclic(const GroupElement& g, const PrimePowerGroup& group);

// Every cyclic subgroup exactly once, trivial included, in increasing order
// of canonical generator.
std::vector<CyclicSubgroupDescriptor> enumerate_cyclic_subgroups(
    const PrimePowerGroup& group, std::uint64_t cap = kDefaultEnumerationCap);

// c(p) from the element-order census; no enumeration.
BigInt count_cyclic_subgroups(const PrimePowerSignature& sig);

// δ = M_i - α_i per expanded coordinate, regrouped into blocks.
DeltaProfile valuation_profile(const CyclicSubgroupDescriptor& h, const PrimePowerSignature& sig);

}  // namespace cqi
