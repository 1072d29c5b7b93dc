#include "cqi/group.hpp"

#include <algorithm>
#include <sstream>

#include "cqi/error.hpp"

namespace cqi {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePowerSignature::PrimePowerSignature(std::uint64_t p, std::vector<Part> parts)
    : p_(p), parts_(std::move(parts)) {
  if (!is_prime(p_)) throw Error(ErrorCode::NonPrime, std::to_string(p_) + " is not prime");
  if (parts_.empty()) throw Error(ErrorCode::EmptySignature, "signature has no parts");
  prefix_.push_back(0);
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    const Part& part = parts_[b];
    if (part.exponent == 0 || part.multiplicity == 0)
      throw Error(ErrorCode::InvalidSpec, "exponents and multiplicities must be positive");
    if (b > 0 && parts_[b - 1].exponent >= part.exponent)
      throw Error(ErrorCode::InvalidSpec, "exponents must be strictly increasing");
    for (unsigned j = 0; j < part.multiplicity; ++j) {
      expanded_.push_back(part.exponent);
      block_of_.push_back(b);
    }
    prefix_.push_back(prefix_.back() + part.multiplicity);
  }
}

std::uint64_t PrimePowerSignature::total_exponent() const noexcept {
  std::uint64_t t = 0;
  for (const Part& part : parts_) t += std::uint64_t{part.exponent} * part.multiplicity;
  return t;
}

BigInt PrimePowerSignature::candidate_space() const {
  BigInt c = 1;
  for (const Part& part : parts_) c *= big_pow(part.exponent + 1, part.multiplicity);
  return c;
}

BigInt PrimePowerSignature::endomorphism_count() const {
  std::uint64_t e = 0;
  for (unsigned a : expanded_)
    for (unsigned b : expanded_) e += std::min(a, b);
  return big_pow(p_, e);
}

std::string PrimePowerSignature::to_string() const {
  std::ostringstream os;
  os << "p=" << p_ << ": ";
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    if (b) os << '+';
    os << big_pow(p_, parts_[b].exponent).get_str() << '^' << parts_[b].multiplicity;
  }
  return os.str();
}

PrimePowerSignature normalize_signature(std::uint64_t p, std::vector<Part> raw) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  std::vector<Part> merged;
  std::sort(raw.begin(), raw.end());
  for (const Part& part : raw) {
    if (part.multiplicity == 0)
      throw Error(ErrorCode::InvalidSpec, "multiplicities must be positive");
    if (part.exponent == 0) continue;
    if (!merged.empty() && merged.back().exponent == part.exponent)
      merged.back().multiplicity += part.multiplicity;
    else
      merged.push_back(part);
  }
  if (merged.empty()) throw Error(ErrorCode::EmptySignature, "signature is empty after normalization");
  return PrimePowerSignature(p, std::move(merged));
}

void CompositeGroupSpec::validate() const {
  for (std::uint64_t m : moduli)
    if (m == 0) throw Error(ErrorCode::InvalidSpec, "moduli must be >= 1");
}

CompositeGroupSpec CompositeGroupSpec::normalized() const {
  validate();
  CompositeGroupSpec out;
  for (std::uint64_t m : moduli)
    if (m != 1) out.moduli.push_back(m);
  return out;
}

BigInt CompositeGroupSpec::order() const {
  BigInt o = 1;
  for (std::uint64_t m : moduli) o *= big_from_u64(m);
  return o;
}

std::string CompositeGroupSpec::to_string() const {
  if (moduli.empty()) return "Z(1)";
  std::string s;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (i) s += '+';
    s += "Z(" + std::to_string(moduli[i]) + ")";
  }
  return s;
}

std::map<std::uint64_t, PrimePowerSignature> crt_decompose(const CompositeGroupSpec& spec) {
  spec.validate();
  std::map<std::uint64_t, std::vector<Part>> raw;
  for (std::uint64_t m : spec.moduli) {
    std::uint64_t rest = m;
    for (std::uint64_t d = 2; d <= rest / d; ++d) {
      unsigned e = 0;
      while (rest % d == 0) {
        rest /= d;
        ++e;
      }
      if (e) raw[d].push_back(Part{e, 1});
    }
    if (rest > 1) raw[rest].push_back(Part{1, 1});
  }
  std::map<std::uint64_t, PrimePowerSignature> out;
  for (auto& [p, parts] : raw) out.emplace(p, normalize_signature(p, std::move(parts)));
  return out;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i)
    if (__builtin_mul_overflow(r, p, &r))
      throw Error(ErrorCode::OutOfRange, "p^k does not fit in 64 bits");
  return r;
}

unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned r) {
  if (x >= checked_pow(p, r))
    throw Error(ErrorCode::OutOfRange, std::to_string(x) + " is not a residue mod p^" + std::to_string(r));
  if (x == 0) return r;
  unsigned k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

BigInt euler_phi_prime_power(std::uint64_t p, unsigned k) {
  if (k == 0) return 1;
  return big_pow(p, k - 1) * big_from_u64(p - 1);
}

namespace {

std::vector<std::uint64_t> coordinate_moduli(const PrimePowerSignature& sig) {
  std::vector<std::uint64_t> moduli;
  for (unsigned m : sig.expanded_exponents()) moduli.push_back(checked_pow(sig.prime(), m));
  return moduli;
}

}  // namespace

PrimePowerGroup::PrimePowerGroup(PrimePowerSignature sig)
    : sig_(std::move(sig)), group_(coordinate_moduli(sig_)) {}

std::uint64_t element_order_exponent(const GroupElement& g, const PrimePowerGroup& group) {
  if (!group.group().contains(g)) throw Error(ErrorCode::OutOfRange, "element does not belong to group");
  std::uint64_t u = 0;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const unsigned m = group.coord_exponent(i);
    u = std::max<std::uint64_t>(u, m - valuation(g.coords[i], group.prime(), m));
  }
  return u;
}

DeltaProfile::DeltaProfile(std::vector<std::vector<unsigned>> blocks) : blocks_(std::move(blocks)) {}

DeltaProfile DeltaProfile::from_flat(std::span<const unsigned> flat, const PrimePowerSignature& sig) {
  if (flat.size() != sig.expanded_length())
    throw Error(ErrorCode::OutOfRange, "profile length does not match signature");
  std::vector<std::vector<unsigned>> blocks(sig.block_count());
  for (std::size_t i = 0; i < flat.size(); ++i) blocks[sig.block_of(i)].push_back(flat[i]);
  return DeltaProfile(std::move(blocks));
}

std::vector<unsigned> DeltaProfile::flat() const {
  std::vector<unsigned> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

unsigned DeltaProfile::norm() const noexcept {
  unsigned n = 0;
  for (const auto& b : blocks_)
    for (unsigned d : b) n = std::max(n, d);
  return n;
}

unsigned DeltaProfile::block_norm(std::size_t block) const {
  unsigned n = 0;
  for (unsigned d : blocks_.at(block)) n = std::max(n, d);
  return n;
}

bool DeltaProfile::fits(const PrimePowerSignature& sig) const {
  if (blocks_.size() != sig.block_count()) return false;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].size() != sig.multiplicity(b)) return false;
    for (unsigned d : blocks_[b])
      if (d > sig.exponent(b)) return false;
  }
  return true;
}

std::string DeltaProfile::to_string() const {
  std::string s = "(";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += ',';
    s += '(';
    for (std::size_t j = 0; j < blocks_[b].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(blocks_[b][j]);
    }
    s += ')';
  }
  return s + ")";
}

CyclicSubgroupDescriptor describe_cyclic(const GroupElement& g, const PrimePowerGroup& group) {
  if (!group.group().contains(g)) throw Error(ErrorCode::OutOfRange, "element does not belong to group");
  CyclicSubgroupDescriptor d;
  d.generator = g;
  d.alpha.resize(group.rank());
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const unsigned m = group.coord_exponent(i);
    d.alpha[i] = valuation(g.coords[i], group.prime(), m);
    d.u = std::max(d.u, m - d.alpha[i]);
  }
  return d;
}

std::vector<CyclicSubgroupDescriptor> enumerate_cyclic_subgroups(const PrimePowerGroup& group,
                                                                 std::uint64_t cap) {
  std::vector<CyclicSubgroupDescriptor> out;
  for (GroupElement& g : cyclic_subgroup_generators(group.group(), cap))
    out.push_back(describe_cyclic(g, group));
  return out;
}

BigInt count_cyclic_subgroups(const PrimePowerSignature& sig) {
  const std::uint64_t p = sig.prime();
  const unsigned top = sig.parts().back().exponent;
  // #{x : p^k x = 0} = p^{Σ min(k, M_i)}
  auto torsion = [&](unsigned k) {
    std::uint64_t e = 0;
    for (unsigned m : sig.expanded_exponents()) e += std::min(k, m);
    return big_pow(p, e);
  };
  BigInt total = 1;  // trivial subgroup
  BigInt below = 1;
  for (unsigned k = 1; k <= top; ++k) {
    BigInt upto = torsion(k);
    BigInt exact = upto - below;
    total += exact / euler_phi_prime_power(p, k);
    below = std::move(upto);
  }
  return total;
}

DeltaProfile valuation_profile(const CyclicSubgroupDescriptor& h, const PrimePowerSignature& sig) {
  if (h.alpha.size() != sig.expanded_length())
    throw Error(ErrorCode::OutOfRange, "descriptor does not match signature");
  std::vector<unsigned> flat(h.alpha.size());
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = sig.expanded_exponents()[i] - h.alpha[i];
  return DeltaProfile::from_flat(flat, sig);
}

}  // namespace cqi
