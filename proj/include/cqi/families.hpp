#pragma once

// Deterministic generators of group families for sweeps and verification.

#include <cstdint>
#include <functional>
#include <vector>

#include "cqi/bigint.hpp"
#include "cqi/group.hpp"

namespace cqi {

// Every p-group signature with 1 < |G| <= max_order, ordered by |G| and then
// lexicographically by parts.
std::vector<PrimePowerSignature> signatures_up_to_order(std::uint64_t p, std::uint64_t max_order);

// Every p-group signature with |End(G)| <= bound, same ordering.
std::vector<PrimePowerSignature> signatures_with_endomorphism_bound(std::uint64_t p, const BigInt& bound);

// Visits every signature with Π (m_i + 1)^{λ_i} <= bound in increasing order of
// that product, then lexicographically. Stops early when fn returns false.
void for_each_signature_by_candidate_space(
    std::uint64_t p, std::uint64_t bound,
    const std::function<bool(const PrimePowerSignature&, std::uint64_t candidate_space)>& fn);

// Number of signatures visited by for_each_signature_by_candidate_space.
std::uint64_t count_signatures_by_candidate_space(std::uint64_t bound);

// Trivial spec plus every multiset of moduli >= 2 (nondecreasing) with
// product <= max_order, ordered by order and then lexicographically.
std::vector<CompositeGroupSpec> composite_specs_up_to(std::uint64_t max_order);

}  // namespace cqi
