#pragma once

// Counting X(G) and X(G)/~: the profile set Y(G), fiber sizes O_p(δ), the
// closed forms S_1..S_3 / T_1..T_3, enumeration-based counts, the
// homocyclic decision and the inclusion-exclusion count for composite groups.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cqi/bigint.hpp"
#include "cqi/error.hpp"
#include "cqi/extension.hpp"
#include "cqi/group.hpp"

namespace cqi {

inline constexpr std::uint64_t kDefaultProfileCap = std::uint64_t{1} << 20;

// Visits every flat δ with δ_i <= M_i in lexicographic order. Throws
// CapExceeded when Π (m_i + 1)^{λ_i} exceeds cap.
template <class Fn>
void for_each_candidate_profile(const PrimePowerSignature& sig, std::uint64_t cap, Fn&& fn);

std::vector<DeltaProfile> enumerate_Y(const PrimePowerSignature& sig, std::uint64_t cap = kDefaultProfileCap);

// O_p(δ) = Π φ(p^{δ_e}) / φ(p^{‖δ‖}); throws ZeroProfile for δ = 0.
BigInt orbit_size(const DeltaProfile& delta, std::uint64_t p);

// Σ O_p(δ) over the given profiles; equal terms are grouped before the
// big-integer sum.
BigInt fiber_sum(std::span<const DeltaProfile> profiles, std::uint64_t p);

struct ClassCountTerms {
  BigInt s1, s2, s3;
  BigInt total() const { return s1 + s2 + s3; }
};

struct SubgroupCountTerms {
  BigInt t1, t2, t3;
  BigInt total() const { return t1 + t2 + t3; }
};

// #X(G)/~ in closed form; independent of p.
ClassCountTerms count_classes_closed_form(const PrimePowerSignature& sig);
// #X(G) in closed form at the signature's prime.
SubgroupCountTerms count_subgroups_closed_form(const PrimePowerSignature& sig);

struct EnumerationOptions {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t endomorphism_cap = kDefaultEndomorphismCap;
  // Also decide membership by exhaustive extension search.
  bool verify_with_oracle = false;
};

struct EnumerationCount {
  std::uint64_t classes = 0;
  std::uint64_t subgroups = 0;
  std::uint64_t cyclic_subgroups = 0;
  std::vector<CyclicSubgroupDescriptor> members;
  std::set<DeltaProfile> profiles;
  std::optional<std::uint64_t> oracle_subgroups;
  std::optional<std::uint64_t> oracle_classes;
  // Subgroups where the valuation criterion and the oracle disagree.
  std::uint64_t disagreements = 0;
  // Profiles whose subgroups are not all in or all out of X(G) (oracle run only).
  std::uint64_t split_profiles = 0;
};

EnumerationCount count_X_enumeration(const PrimePowerGroup& group, const EnumerationOptions& options = {});

struct CqiVerdict {
  bool cqi = true;
  std::map<std::uint64_t, bool> homocyclic_by_prime;
};

CqiVerdict is_cyclic_quasi_injective(const CompositeGroupSpec& spec);

struct SubsetTerm {
  std::vector<std::uint64_t> primes;
  int sign = 1;
  BigInt value;  // Π_{p∈J} #X(G_p) · Π_{p∉J} c(p), unsigned
};

struct CompositeCount {
  BigInt total;
  std::vector<SubsetTerm> subsets;
  std::map<std::uint64_t, BigInt> x_by_prime;
  std::map<std::uint64_t, BigInt> cyclic_by_prime;
};

CompositeCount count_X_composite(const CompositeGroupSpec& spec);

// Sizes of Y and of Y_1..Y_4, each enumerated from its set-builder predicate
// over all candidates, with membership in Y decided by condition 1.
struct PartitionCounts {
  std::uint64_t y = 0, y1 = 0, y2 = 0, y3 = 0, y4 = 0;
};

PartitionCounts partition_counts(const PrimePowerSignature& sig, std::uint64_t cap = kDefaultProfileCap);

// ---------------------------------------------------------------------------

template <class Fn>
void for_each_candidate_profile(const PrimePowerSignature& sig, std::uint64_t cap, Fn&& fn) {
  if (sig.candidate_space() > big_from_u64(cap))
    throw Error(ErrorCode::CapExceeded, "candidate profile space exceeds cap");
  const auto bounds = sig.expanded_exponents();
  const std::size_t n = bounds.size();
  std::vector<unsigned> delta(n, 0);
  while (true) {
    fn(std::span<const unsigned>(delta));
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (delta[i] < bounds[i]) {
        ++delta[i];
        break;
      }
      delta[i] = 0;
    }
  }
}

}  // namespace cqi
