#pragma once

// Permutation codes, the max-jump statistic and its link to the class count
// of the staircase group Z(p) + Z(p^2) + ... + Z(p^n).
// Permutations and codes are 1-indexed in meaning: perm[i-1] holds σ(i).

#include <cstdint>
#include <vector>

#include "cqi/bigint.hpp"
#include "cqi/group.hpp"

namespace cqi {

inline constexpr unsigned kMaxBruteForceN = 10;

struct PermCode {
  unsigned n = 0;
  std::vector<unsigned> perm;
  // τ_i = #{j >= i : σ(j) < σ(i)}
  std::vector<unsigned> code;
  // max_i (σ(i) - i)
  unsigned max_jump = 0;
};

// Throws NotAPermutation.
PermCode code_of(const std::vector<unsigned>& perm);

// Inverse of code_of. Throws OutOfRange unless 0 <= τ_i <= n - i.
std::vector<unsigned> perm_of(const std::vector<unsigned>& code);

// Throws TooLarge for n > kMaxBruteForceN.
BigInt jump_sum_brute(unsigned n);

// Σ_{k=1}^{n-1} k·k!·((k+1)^{n-k} - k^{n-k})
BigInt jump_sum_closed(unsigned n);

// m = (1, 2, ..., n), every multiplicity 1.
PrimePowerSignature staircase_signature(unsigned n, std::uint64_t p = 2);

// (0, δ_1, ..., δ_n) with the entry at index ‖δ‖ removed. Throws NotInY
// unless δ is a profile of Y for the staircase group of length n.
std::vector<unsigned> omega_of(const std::vector<unsigned>& delta);

struct TripleIdentityReport {
  unsigned n = 0;
  BigInt brute, closed, classes, y_size;
  bool equal = false;
};

TripleIdentityReport verify_triple_identity(unsigned n);

}  // namespace cqi
