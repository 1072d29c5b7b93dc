#include "cqi/extension.hpp"

#include <algorithm>
#include <numeric>

#include "cqi/error.hpp"

namespace cqi {

namespace {

unsigned fast_valuation(std::uint64_t x, std::uint64_t p, unsigned r) {
  if (x == 0) return r;
  unsigned k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

int pos_part(int v) { return v > 0 ? v : 0; }

}  // namespace

HomomorphismDescriptor make_hom(const CyclicSubgroupDescriptor& source, GroupElement image,
                                const PrimePowerGroup& group) {
  if (!group.group().contains(image)) throw Error(ErrorCode::OutOfRange, "image does not belong to group");
  const std::uint64_t p = group.prime();
  HomomorphismDescriptor f{source, std::move(image), {}};
  f.beta.resize(group.rank());
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const unsigned m = group.coord_exponent(i);
    const unsigned floor = m > source.u ? m - source.u : 0;
    const unsigned v = valuation(f.image.coords[i], p, m);
    if (v < floor) throw Error(ErrorCode::OutOfRange, "image order does not divide generator order");
    f.beta[i] = v - floor;
  }
  return f;
}

BigInt hom_count(const CyclicSubgroupDescriptor& source, const PrimePowerSignature& sig) {
  std::uint64_t e = 0;
  for (unsigned m : sig.expanded_exponents()) e += std::min(source.u, m);
  return big_pow(sig.prime(), e);
}

std::vector<HomomorphismDescriptor> enumerate_homs(const CyclicSubgroupDescriptor& source,
                                                   const PrimePowerGroup& group, std::uint64_t cap) {
  if (hom_count(source, group.signature()) > big_from_u64(cap))
    throw Error(ErrorCode::CapExceeded, "Hom(H, G) exceeds enumeration cap");
  std::vector<HomomorphismDescriptor> out;
  for_each_hom_image(source, group, [&](const GroupElement& x) { out.push_back(make_hom(source, x, group)); });
  return out;
}

GroupElement EndomorphismTable::apply(const GroupElement& x, const FiniteAbelianGroup& group) const {
  GroupElement acc = group.zero();
  for (std::size_t l = 0; l < columns.size(); ++l)
    acc = group.add(acc, group.scale(x.coords[l], columns[l]));
  return acc;
}

EndomorphismStream::EndomorphismStream(const FiniteAbelianGroup& group, std::uint64_t cap)
    : moduli_(group.moduli().begin(), group.moduli().end()) {
  const std::size_t k = moduli_.size();
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t g = std::gcd(moduli_[i], moduli_[l]);
      steps_.push_back(moduli_[i] / g);
      limits_.push_back(g);
      if (__builtin_mul_overflow(total_, g, &total_) || total_ > cap)
        throw Error(ErrorCode::CapExceeded, "endomorphism space exceeds cap");
    }
  }
  digits_.assign(k * k, 0);
  table_.columns.assign(k, group.zero());
}

bool EndomorphismStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  const std::size_t k = moduli_.size();
  for (std::size_t d = digits_.size(); d-- > 0;) {
    const std::size_t l = d / k, i = d % k;
    if (++digits_[d] < limits_[d]) {
      table_.columns[l].coords[i] += steps_[d];
      return true;
    }
    digits_[d] = 0;
    table_.columns[l].coords[i] = 0;
  }
  done_ = true;
  return false;
}

ImageSet::ImageSet(const FiniteAbelianGroup& group, const GroupElement& h)
    : group_(group), bits_((group.order() + 63) / 64, 0) {
  if (!group.contains(h)) throw Error(ErrorCode::OutOfRange, "element does not belong to group");
  const std::size_t k = group.rank();
  auto test_and_set = [](std::vector<std::uint64_t>& bits, std::uint64_t idx) {
    const std::uint64_t mask = std::uint64_t{1} << (idx % 64);
    if (bits[idx / 64] & mask) return false;
    bits[idx / 64] |= mask;
    return true;
  };

  // Partial sums so far, as flat coordinate rows.
  std::vector<std::uint64_t> reached(k, 0);
  test_and_set(bits_, 0);
  std::vector<std::uint64_t> column_bits(bits_.size(), 0);
  std::vector<std::uint64_t> column_images;
  std::vector<std::uint64_t> column_index;

  for (std::size_t l = 0; l < k; ++l) {
    if (h.coords[l] == 0) continue;
    // {h_l * c : c killed by m_l}
    column_images.clear();
    column_index.clear();
    for_each_torsion_element(group, group.modulus(l), [&](const GroupElement& c) {
      std::uint64_t idx = 0;
      const std::size_t base = column_images.size();
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t v = mul_mod(h.coords[l] % group.modulus(i), c.coords[i], group.modulus(i));
        column_images.push_back(v);
        idx += v * group.stride(i);
      }
      if (idx == 0 || !test_and_set(column_bits, idx))
        column_images.resize(base);
      else
        column_index.push_back(idx);
    });
    for (std::uint64_t idx : column_index) column_bits[idx / 64] = 0;

    const std::size_t before = reached.size() / k;
    const std::size_t images = column_images.size() / k;
    for (std::size_t r = 0; r < before; ++r) {
      for (std::size_t s = 0; s < images; ++s) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < k; ++i) {
          std::uint64_t v = reached[r * k + i] + column_images[s * k + i];
          if (v >= group.modulus(i)) v -= group.modulus(i);
          idx += v * group.stride(i);
        }
        if (test_and_set(bits_, idx)) {
          for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t v = reached[r * k + i] + column_images[s * k + i];
            if (v >= group.modulus(i)) v -= group.modulus(i);
            reached.push_back(v);
          }
        }
      }
    }
  }
  size_ = reached.size() / std::max<std::size_t>(k, 1);
  if (k == 0) size_ = 1;
}

bool ImageSet::contains(const GroupElement& x) const {
  if (!group_.contains(x)) return false;
  const std::uint64_t idx = group_.index_of(x);
  return (bits_[idx / 64] >> (idx % 64)) & 1;
}

namespace {

void check_end_cap(const PrimePowerGroup& group, std::uint64_t cap_end) {
  if (group.signature().endomorphism_count() > big_from_u64(cap_end))
    throw Error(ErrorCode::CapExceeded, "endomorphism space exceeds cap");
}

}  // namespace

bool is_extendable_oracle(const HomomorphismDescriptor& f, const PrimePowerGroup& group, std::uint64_t cap_end) {
  check_end_cap(group, cap_end);
  return ImageSet(group.group(), f.source.generator).contains(f.image);
}

bool is_extendable_by_search(const HomomorphismDescriptor& f, const PrimePowerGroup& group,
                             std::uint64_t cap_end) {
  EndomorphismStream stream(group, cap_end);
  while (stream.next())
    if (stream.current().apply(f.source.generator, group.group()) == f.image) return true;
  return false;
}

bool is_extendable_formula(const CyclicSubgroupDescriptor& source, const GroupElement& image,
                           const PrimePowerSignature& sig) {
  const auto M = sig.expanded_exponents();
  const std::size_t n = M.size();
  const int u = static_cast<int>(source.u);
  for (std::size_t s = 0; s < n; ++s) {
    const unsigned v = fast_valuation(image.coords[s], sig.prime(), M[s]);
    const int beta = static_cast<int>(v) - pos_part(static_cast<int>(M[s]) - u);
    const int lhs = beta + pos_part(static_cast<int>(M[s]) - u);
    int rhs = INT32_MAX;
    for (std::size_t l = 0; l < n; ++l)
      rhs = std::min(rhs, static_cast<int>(source.alpha[l]) + pos_part(static_cast<int>(M[s]) - static_cast<int>(M[l])));
    if (lhs < rhs) return false;
  }
  return true;
}

bool is_extendable_formula(const HomomorphismDescriptor& f, const PrimePowerSignature& sig) {
  const auto M = sig.expanded_exponents();
  const std::size_t n = M.size();
  const int u = static_cast<int>(f.source.u);
  for (std::size_t s = 0; s < n; ++s) {
    const int lhs = static_cast<int>(f.beta[s]) + pos_part(static_cast<int>(M[s]) - u);
    int rhs = INT32_MAX;
    for (std::size_t l = 0; l < n; ++l)
      rhs = std::min(rhs, static_cast<int>(f.source.alpha[l]) + pos_part(static_cast<int>(M[s]) - static_cast<int>(M[l])));
    if (lhs < rhs) return false;
  }
  return true;
}

bool has_nonextendable_hom(const CyclicSubgroupDescriptor& h, const PrimePowerSignature& sig) {
  const auto M = sig.expanded_exponents();
  const std::size_t n = M.size();
  const int u = static_cast<int>(h.u);
  for (std::size_t s = 0; s < n; ++s) {
    const int lhs = pos_part(static_cast<int>(M[s]) - u);
    int rhs = INT32_MAX;
    for (std::size_t l = 0; l < n; ++l)
      rhs = std::min(rhs, static_cast<int>(h.alpha[l]) + pos_part(static_cast<int>(M[s]) - static_cast<int>(M[l])));
    if (lhs < rhs) return true;
  }
  return false;
}

bool condition1(std::span<const unsigned> flat_delta, const PrimePowerSignature& sig) {
  const auto M = sig.expanded_exponents();
  if (flat_delta.size() != M.size()) throw Error(ErrorCode::OutOfRange, "profile length does not match signature");
  unsigned norm = 0;
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (flat_delta[i] > M[i]) throw Error(ErrorCode::OutOfRange, "profile entry exceeds exponent");
    norm = std::max(norm, flat_delta[i]);
  }
  for (std::size_t s = 0; s < M.size(); ++s) {
    const int lhs = pos_part(static_cast<int>(M[s]) - static_cast<int>(norm));
    int rhs = INT32_MAX;
    for (std::size_t l = 0; l < M.size(); ++l) {
      const int d = static_cast<int>(flat_delta[l]);
      rhs = std::min(rhs, std::max(static_cast<int>(M[l]) - d, static_cast<int>(M[s]) - d));
    }
    if (lhs < rhs) return true;
  }
  return false;
}

bool condition1(const DeltaProfile& delta, const PrimePowerSignature& sig) {
  if (!delta.fits(sig)) throw Error(ErrorCode::OutOfRange, "profile does not fit signature");
  const std::vector<unsigned> flat = delta.flat();
  return condition1(flat, sig);
}

bool condition2_from_norms(std::span<const unsigned> block_norms, unsigned norm, const PrimePowerSignature& sig) {
  const std::size_t n = sig.block_count();
  for (std::size_t s = 0; s < n; ++s) {
    const int ms = static_cast<int>(sig.exponent(s));
    const int lhs = pos_part(ms - static_cast<int>(norm));
    int rhs = INT32_MAX;
    for (std::size_t l = 0; l < n; ++l) {
      const int b = static_cast<int>(block_norms[l]);
      rhs = std::min(rhs, std::max(static_cast<int>(sig.exponent(l)) - b, ms - b));
    }
    if (lhs < rhs) return true;
  }
  return false;
}

namespace {

std::vector<unsigned> norms_of(const DeltaProfile& delta, const PrimePowerSignature& sig) {
  if (!delta.fits(sig)) throw Error(ErrorCode::OutOfRange, "profile does not fit signature");
  std::vector<unsigned> norms(sig.block_count());
  for (std::size_t b = 0; b < norms.size(); ++b) norms[b] = delta.block_norm(b);
  return norms;
}

}  // namespace

bool condition2(const DeltaProfile& delta, const PrimePowerSignature& sig) {
  const auto norms = norms_of(delta, sig);
  return condition2_from_norms(norms, delta.norm(), sig);
}

std::size_t f_delta_from_norm(unsigned norm, const PrimePowerSignature& sig) {
  std::size_t f = 1;
  for (std::size_t s = 0; s < sig.block_count(); ++s)
    if (sig.exponent(s) <= norm) f = s + 1;
  return f;
}

std::size_t f_delta(const DeltaProfile& delta, const PrimePowerSignature& sig) {
  if (!delta.fits(sig)) throw Error(ErrorCode::OutOfRange, "profile does not fit signature");
  return f_delta_from_norm(delta.norm(), sig);
}

bool condition3_from_norms(std::span<const unsigned> block_norms, unsigned norm, const PrimePowerSignature& sig) {
  if (norm < sig.exponent(0)) return block_norms[0] < norm;
  const std::size_t f = f_delta_from_norm(norm, sig) - 1;  // 0-based
  const unsigned mf = sig.exponent(f);
  if (mf == norm) return block_norms[f] < mf;
  // mf < norm forces f + 1 < n, since ‖δ‖ <= m_n.
  return block_norms[f] < mf || (f + 1 < sig.block_count() && block_norms[f + 1] < norm);
}

bool condition3(const DeltaProfile& delta, const PrimePowerSignature& sig) {
  const auto norms = norms_of(delta, sig);
  return condition3_from_norms(norms, delta.norm(), sig);
}

}  // namespace cqi
