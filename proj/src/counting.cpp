#include "cqi/counting.hpp"

#include <algorithm>

#include "cqi/error.hpp"

namespace cqi {

namespace {

std::vector<unsigned> block_norms_of(std::span<const unsigned> flat, const PrimePowerSignature& sig) {
  std::vector<unsigned> norms(sig.block_count(), 0);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    unsigned& b = norms[sig.block_of(i)];
    b = std::max(b, flat[i]);
  }
  return norms;
}

BigInt upow(unsigned base, std::uint64_t exponent) { return big_pow(base, exponent); }

// (p^{k r} - p^{(k-1) r}) / (p^{k-1}(p-1)), exact.
BigInt fiber_ratio(std::uint64_t p, unsigned k, std::uint64_t r) {
  BigInt num = big_pow(p, std::uint64_t{k} * r) - big_pow(p, std::uint64_t{k - 1} * r);
  BigInt den = euler_phi_prime_power(p, k);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw Error(ErrorCode::OutOfRange, "closed-form term is not integral");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

std::vector<DeltaProfile> enumerate_Y(const PrimePowerSignature& sig, std::uint64_t cap) {
  std::vector<DeltaProfile> out;
  for_each_candidate_profile(sig, cap, [&](std::span<const unsigned> flat) {
    const auto norms = block_norms_of(flat, sig);
    const unsigned norm = *std::max_element(norms.begin(), norms.end());
    if (condition3_from_norms(norms, norm, sig)) out.push_back(DeltaProfile::from_flat(flat, sig));
  });
  return out;
}

BigInt orbit_size(const DeltaProfile& delta, std::uint64_t p) {
  if (delta.is_zero()) throw Error(ErrorCode::ZeroProfile, "orbit size is undefined for the zero profile");
  BigInt num = 1;
  for (const auto& block : delta.blocks())
    for (unsigned d : block) num *= euler_phi_prime_power(p, d);
  const BigInt den = euler_phi_prime_power(p, delta.norm());
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw Error(ErrorCode::OutOfRange, "orbit size is not integral");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt fiber_sum(std::span<const DeltaProfile> profiles, std::uint64_t p) {
  // O_p(δ) = p^a (p-1)^b with a = Σ_{δ_e>0} (δ_e - 1) - (‖δ‖ - 1), b = #{δ_e > 0} - 1.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> census;
  for (const DeltaProfile& delta : profiles) {
    if (delta.is_zero()) throw Error(ErrorCode::ZeroProfile, "orbit size is undefined for the zero profile");
    std::uint64_t a = 0, b = 0;
    for (const auto& block : delta.blocks())
      for (unsigned d : block)
        if (d > 0) {
          a += d - 1;
          ++b;
        }
    ++census[{a - (delta.norm() - 1), b - 1}];
  }
  BigInt total = 0;
  for (const auto& [key, count] : census)
    total += big_pow(p, key.first) * big_pow(p - 1, key.second) * big_from_u64(count);
  return total;
}

ClassCountTerms count_classes_closed_form(const PrimePowerSignature& sig) {
  const std::size_t n = sig.block_count();
  auto m = [&](std::size_t i) { return sig.exponent(i - 1); };       // 1-based
  auto lam = [&](std::size_t i) { return sig.multiplicity(i - 1); };  // 1-based
  auto pre = [&](std::size_t j) -> std::uint64_t { return sig.prefix_multiplicity(j); };
  const std::uint64_t L = pre(n);

  ClassCountTerms t;
  for (unsigned k = 1; k < m(1); ++k) {
    const std::uint64_t r = L - lam(1);
    t.s1 += upow(k, lam(1)) * (upow(k + 1, r) - upow(k, r));
  }
  BigInt head = 1;  // Π_{j<i} (m_j + 1)^{λ_j}
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    const std::uint64_t r2 = L - pre(i);
    for (unsigned k = m(i); k < m(i + 1); ++k)
      t.s2 += upow(m(i), lam(i)) * head * (upow(k + 1, r2) - upow(k, r2));
    const std::uint64_t r3 = L - pre(i + 1);
    const BigInt step = upow(m(i) + 1, lam(i)) - upow(m(i), lam(i));
    for (unsigned k = m(i) + 1; k < m(i + 1); ++k)
      t.s3 += upow(k, lam(i + 1)) * step * head * (upow(k + 1, r3) - upow(k, r3));
    head *= upow(m(i) + 1, lam(i));
  }
  return t;
}

SubgroupCountTerms count_subgroups_closed_form(const PrimePowerSignature& sig) {
  const std::uint64_t p = sig.prime();
  const std::size_t n = sig.block_count();
  auto m = [&](std::size_t i) { return sig.exponent(i - 1); };
  auto lam = [&](std::size_t i) -> std::uint64_t { return sig.multiplicity(i - 1); };
  auto pre = [&](std::size_t j) -> std::uint64_t { return sig.prefix_multiplicity(j); };
  const std::uint64_t L = pre(n);

  SubgroupCountTerms t;
  for (unsigned k = 1; k < m(1); ++k)
    t.t1 += big_pow(p, (k - 1) * lam(1)) * fiber_ratio(p, k, L - lam(1));
  BigInt head = 1;  // Π_{j<i} p^{m_j λ_j}
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    const BigInt lower = big_pow(p, (m(i) - 1) * lam(i));
    for (unsigned k = m(i); k < m(i + 1); ++k)
      t.t2 += head * lower * fiber_ratio(p, k, L - pre(i));
    const BigInt step = big_pow(p, m(i) * lam(i)) - lower;
    for (unsigned k = m(i) + 1; k < m(i + 1); ++k)
      t.t3 += head * step * big_pow(p, (k - 1) * lam(i + 1)) * fiber_ratio(p, k, L - pre(i + 1));
    head *= big_pow(p, m(i) * lam(i));
  }
  return t;
}

EnumerationCount count_X_enumeration(const PrimePowerGroup& group, const EnumerationOptions& options) {
  const PrimePowerSignature& sig = group.signature();
  if (options.verify_with_oracle && sig.endomorphism_count() > big_from_u64(options.endomorphism_cap))
    throw Error(ErrorCode::CapExceeded, "endomorphism space exceeds cap");

  EnumerationCount out;
  std::map<DeltaProfile, std::pair<std::uint64_t, std::uint64_t>> oracle_by_profile;  // (in X, total)
  for (const CyclicSubgroupDescriptor& h : enumerate_cyclic_subgroups(group, options.enumeration_cap)) {
    ++out.cyclic_subgroups;
    const bool member = has_nonextendable_hom(h, sig);
    DeltaProfile profile = valuation_profile(h, sig);
    if (options.verify_with_oracle) {
      const ImageSet images(group.group(), h.generator);
      bool oracle_member = false;
      for_each_hom_image(h, group, [&](const GroupElement& x) {
        if (!oracle_member && !images.contains(x)) oracle_member = true;
      });
      if (oracle_member != member) ++out.disagreements;
      auto& slot = oracle_by_profile[profile];
      slot.first += oracle_member ? 1 : 0;
      slot.second += 1;
    }
    if (member) {
      out.members.push_back(h);
      out.profiles.insert(std::move(profile));
    }
  }
  out.subgroups = out.members.size();
  out.classes = out.profiles.size();
  if (options.verify_with_oracle) {
    std::uint64_t subgroups = 0, classes = 0;
    for (const auto& [profile, slot] : oracle_by_profile) {
      subgroups += slot.first;
      if (slot.first > 0) ++classes;
      if (slot.first != 0 && slot.first != slot.second) ++out.split_profiles;
    }
    out.oracle_subgroups = subgroups;
    out.oracle_classes = classes;
  }
  return out;
}

CqiVerdict is_cyclic_quasi_injective(const CompositeGroupSpec& spec) {
  CqiVerdict v;
  for (const auto& [p, sig] : crt_decompose(spec)) {
    v.homocyclic_by_prime[p] = sig.is_homocyclic();
    v.cqi = v.cqi && sig.is_homocyclic();
  }
  return v;
}

CompositeCount count_X_composite(const CompositeGroupSpec& spec) {
  CompositeCount out;
  std::vector<std::uint64_t> primes;
  for (const auto& [p, sig] : crt_decompose(spec)) {
    primes.push_back(p);
    out.x_by_prime[p] = count_subgroups_closed_form(sig).total();
    out.cyclic_by_prime[p] = count_cyclic_subgroups(sig);
  }
  if (primes.size() > 24) throw Error(ErrorCode::TooLarge, "too many prime divisors for inclusion-exclusion");
  const std::size_t v = primes.size();
  // Subsets ordered by size, then by bitmask.
  for (std::size_t size = 1; size <= v; ++size) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << v); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      SubsetTerm term;
      term.sign = size % 2 == 1 ? 1 : -1;
      term.value = 1;
      for (std::size_t i = 0; i < v; ++i) {
        if (mask >> i & 1) {
          term.primes.push_back(primes[i]);
          term.value *= out.x_by_prime[primes[i]];
        } else {
          term.value *= out.cyclic_by_prime[primes[i]];
        }
      }
      if (term.sign > 0)
        out.total += term.value;
      else
        out.total -= term.value;
      out.subsets.push_back(std::move(term));
    }
  }
  return out;
}

PartitionCounts partition_counts(const PrimePowerSignature& sig, std::uint64_t cap) {
  const std::size_t n = sig.block_count();
  PartitionCounts c;
  for_each_candidate_profile(sig, cap, [&](std::span<const unsigned> flat) {
    if (!condition1(flat, sig)) return;
    ++c.y;
    const auto b = block_norms_of(flat, sig);
    const unsigned k = *std::max_element(b.begin(), b.end());
    if (1 <= k && k < sig.exponent(0) && b[0] < k) ++c.y1;
    bool in2 = false, in3 = false, in4 = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const unsigned mi = sig.exponent(i), mnext = sig.exponent(i + 1);
      if (mi <= k && k < mnext && b[i] < mi) in2 = true;
      if (mi < k && k < mnext && b[i + 1] < k) in3 = true;
      if (mi < k && k < mnext && b[i] < mi && b[i + 1] < k) in4 = true;
    }
    c.y2 += in2;
    c.y3 += in3;
    c.y4 += in4;
  });
  return c;
}

}  // namespace cqi
