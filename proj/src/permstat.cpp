#include "cqi/permstat.hpp"

#include <algorithm>
#include <numeric>

#include "cqi/counting.hpp"
#include "cqi/error.hpp"
#include "cqi/extension.hpp"

namespace cqi {

PermCode code_of(const std::vector<unsigned>& perm) {
  const auto n = static_cast<unsigned>(perm.size());
  if (n == 0) throw Error(ErrorCode::NotAPermutation, "empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (unsigned v : perm) {
    if (v < 1 || v > n || seen[v]) throw Error(ErrorCode::NotAPermutation, "not a permutation of 1..n");
    seen[v] = true;
  }
  PermCode out{n, perm, std::vector<unsigned>(n, 0), 0};
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i; j < n; ++j)
      if (perm[j] < perm[i]) ++out.code[i];
    if (perm[i] > i + 1) out.max_jump = std::max(out.max_jump, perm[i] - (i + 1));
  }
  return out;
}

std::vector<unsigned> perm_of(const std::vector<unsigned>& code) {
  const auto n = static_cast<unsigned>(code.size());
  for (unsigned i = 0; i < n; ++i)
    if (code[i] > n - 1 - i) throw Error(ErrorCode::OutOfRange, "code entry exceeds n - i");
  std::vector<bool> used(n + 1, false);
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) {
    // the unused value with exactly τ_i smaller unused values
    unsigned smaller = 0;
    for (unsigned v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (smaller == code[i]) {
        perm[i] = v;
        used[v] = true;
        break;
      }
      ++smaller;
    }
  }
  return perm;
}

BigInt jump_sum_brute(unsigned n) {
  if (n > kMaxBruteForceN) throw Error(ErrorCode::TooLarge, "n exceeds brute-force limit");
  if (n == 0) return 0;
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  std::uint64_t total = 0;
  do {
    unsigned jump = 0;
    for (unsigned i = 0; i < n; ++i)
      if (perm[i] > i + 1) jump = std::max(jump, perm[i] - (i + 1));
    total += jump;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return big_from_u64(total);
}

BigInt jump_sum_closed(unsigned n) {
  BigInt total = 0;
  BigInt fact = 1;
  for (unsigned k = 1; k + 1 <= n; ++k) {
    fact *= k;
    total += BigInt(k) * fact * (big_pow(k + 1, n - k) - big_pow(k, n - k));
  }
  return total;
}

PrimePowerSignature staircase_signature(unsigned n, std::uint64_t p) {
  std::vector<Part> parts;
  for (unsigned i = 1; i <= n; ++i) parts.push_back(Part{i, 1});
  return PrimePowerSignature(p, std::move(parts));
}

std::vector<unsigned> omega_of(const std::vector<unsigned>& delta) {
  const auto n = static_cast<unsigned>(delta.size());
  if (n == 0) throw Error(ErrorCode::NotInY, "empty profile");
  for (unsigned i = 0; i < n; ++i)
    if (delta[i] > i + 1) throw Error(ErrorCode::NotInY, "profile exceeds staircase bounds");
  const auto sig = staircase_signature(n);
  const auto profile = DeltaProfile::from_flat(delta, sig);
  if (!condition3(profile, sig)) throw Error(ErrorCode::NotInY, "profile is not in Y");
  const unsigned norm = profile.norm();
  std::vector<unsigned> out;
  out.reserve(n);
  out.push_back(0);
  for (unsigned i = 1; i <= n; ++i)
    if (i != norm) out.push_back(delta[i - 1]);
  return out;
}

TripleIdentityReport verify_triple_identity(unsigned n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "n must be positive");
  TripleIdentityReport r;
  r.n = n;
  r.brute = jump_sum_brute(n);
  r.closed = jump_sum_closed(n);
  const auto sig = staircase_signature(n);
  r.classes = count_classes_closed_form(sig).total();
  r.y_size = big_from_u64(enumerate_Y(sig).size());
  r.equal = r.brute == r.closed && r.closed == r.classes && r.classes == r.y_size;
  return r;
}

}  // namespace cqi
