#include "cqi/families.hpp"

#include <algorithm>

namespace cqi {

namespace {

// Nondecreasing exponent list -> parts.
std::vector<Part> to_parts(const std::vector<unsigned>& exps) {
  std::vector<Part> parts;
  for (unsigned e : exps) {
    if (!parts.empty() && parts.back().exponent == e)
      ++parts.back().multiplicity;
    else
      parts.push_back(Part{e, 1});
  }
  return parts;
}

void partitions(unsigned remaining, unsigned min_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = min_part; e <= remaining; ++e) {
    cur.push_back(e);
    partitions(remaining - e, e, cur, out);
    cur.pop_back();
  }
}

void sort_signatures(std::vector<PrimePowerSignature>& sigs) {
  std::stable_sort(sigs.begin(), sigs.end(), [](const PrimePowerSignature& a, const PrimePowerSignature& b) {
    if (a.total_exponent() != b.total_exponent()) return a.total_exponent() < b.total_exponent();
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end());
  });
}

void factorizations(std::uint64_t n, std::uint64_t min_factor, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t f = min_factor; f * f <= n; ++f) {
    if (n % f) continue;
    cur.push_back(static_cast<unsigned>(f - 1));
    factorizations(n / f, f, cur, out);
    cur.pop_back();
  }
  if (n >= min_factor) {
    cur.push_back(static_cast<unsigned>(n - 1));
    out.push_back(cur);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PrimePowerSignature> signatures_up_to_order(std::uint64_t p, std::uint64_t max_order) {
  unsigned top = 0;
  for (std::uint64_t o = p; o <= max_order; ++top) {
    if (o > max_order / p) {
      ++top;
      break;
    }
    o *= p;
  }
  std::vector<PrimePowerSignature> sigs;
  std::vector<std::vector<unsigned>> parts_list;
  std::vector<unsigned> cur;
  for (unsigned t = 1; t <= top; ++t) partitions(t, 1, cur, parts_list);
  for (const auto& exps : parts_list) sigs.emplace_back(p, to_parts(exps));
  sort_signatures(sigs);
  return sigs;
}

std::vector<PrimePowerSignature> signatures_with_endomorphism_bound(std::uint64_t p, const BigInt& bound) {
  std::uint64_t max_log = 0;  // largest s with p^s <= bound
  while (big_pow(p, max_log + 1) <= bound) ++max_log;
  std::vector<PrimePowerSignature> sigs;
  std::vector<unsigned> cur;
  // Appending e >= every existing exponent adds 2 Σ cur + e to Σ min(M_l, M_i).
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t s, std::uint64_t sum) {
    if (!cur.empty()) sigs.emplace_back(p, to_parts(cur));
    for (unsigned e = cur.empty() ? 1 : cur.back();; ++e) {
      const std::uint64_t next = s + 2 * sum + e;
      if (next > max_log) break;
      cur.push_back(e);
      rec(next, sum + e);
      cur.pop_back();
    }
  };
  rec(0, 0);
  sort_signatures(sigs);
  return sigs;
}

void for_each_signature_by_candidate_space(
    std::uint64_t p, std::uint64_t bound,
    const std::function<bool(const PrimePowerSignature&, std::uint64_t)>& fn) {
  std::vector<std::vector<unsigned>> found;
  std::vector<unsigned> cur;
  for (std::uint64_t c = 2; c <= bound; ++c) {
    found.clear();
    factorizations(c, 2, cur, found);
    std::vector<std::vector<Part>> parts;
    parts.reserve(found.size());
    for (const auto& exps : found) parts.push_back(to_parts(exps));
    std::sort(parts.begin(), parts.end());
    for (auto& ps : parts)
      if (!fn(PrimePowerSignature(p, std::move(ps)), c)) return;
  }
}

std::uint64_t count_signatures_by_candidate_space(std::uint64_t bound) {
  // Multiplicative knapsack: factors taken in increasing order count multisets.
  std::vector<std::uint64_t> ways(bound + 1, 0);
  if (bound >= 1) ways[1] = 1;
  for (std::uint64_t f = 2; f <= bound; ++f)
    for (std::uint64_t n = f; n <= bound; n += f) ways[n] += ways[n / f];
  std::uint64_t total = 0;
  for (std::uint64_t c = 2; c <= bound; ++c) total += ways[c];
  return total;
}

std::vector<CompositeGroupSpec> composite_specs_up_to(std::uint64_t max_order) {
  std::vector<CompositeGroupSpec> specs;
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t product) {
    specs.push_back(CompositeGroupSpec{cur});
    for (std::uint64_t m = cur.empty() ? 2 : cur.back(); product * m <= max_order; ++m) {
      cur.push_back(m);
      rec(product * m);
      cur.pop_back();
    }
  };
  rec(1);
  std::stable_sort(specs.begin(), specs.end(), [](const CompositeGroupSpec& a, const CompositeGroupSpec& b) {
    const BigInt oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a.moduli < b.moduli;
  });
  return specs;
}

}  // namespace cqi
