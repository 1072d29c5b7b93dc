#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cqi/counting.hpp"
#include "cqi/error.hpp"
#include "cqi/permstat.hpp"

using namespace cqi;

namespace {

unsigned max_entry(const std::vector<unsigned>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

}  // namespace

TEST_SUITE("permstat") {

TEST_CASE("code_of examples") {
  const auto id = code_of({1, 2, 3, 4});
  CHECK(id.code == std::vector<unsigned>{0, 0, 0, 0});
  CHECK(id.max_jump == 0);
  const auto c = code_of({2, 3, 1});
  CHECK(c.code == std::vector<unsigned>{1, 1, 0});
  CHECK(c.max_jump == 1);
  for (unsigned n = 2; n <= 7; ++n) {
    std::vector<unsigned> perm{n};
    for (unsigned i = 1; i < n; ++i) perm.push_back(i);
    const auto r = code_of(perm);
    CHECK(r.code[0] == n - 1);
    CHECK(std::all_of(r.code.begin() + 1, r.code.end(), [](unsigned t) { return t == 0; }));
    CHECK(r.max_jump == n - 1);
  }
  for (const auto& bad : std::vector<std::vector<unsigned>>{{}, {1, 1}, {0, 1}, {1, 3}}) {
    try {
      code_of(bad);
      FAIL("expected NotAPermutation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAPermutation);
    }
  }
}

TEST_CASE("perm_of examples") {
  CHECK(perm_of({0, 0, 0}) == std::vector<unsigned>{1, 2, 3});
  CHECK(perm_of({1, 1, 0}) == std::vector<unsigned>{2, 3, 1});
  try {
    perm_of({0, 2, 0});
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("code bijection and norm identity up to n = 8") {
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    std::set<std::vector<unsigned>> codes;
    do {
      const auto r = code_of(perm);
      for (unsigned i = 0; i < n; ++i) CHECK(r.code[i] <= n - 1 - i);
      CHECK(max_entry(r.code) == r.max_jump);
      CHECK(perm_of(r.code) == perm);
      codes.insert(r.code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::uint64_t fact = 1;
    for (unsigned k = 2; k <= n; ++k) fact *= k;
    CHECK(codes.size() == fact);
  }
}

TEST_CASE("jump sums") {
  CHECK(jump_sum_brute(1) == 0);
  CHECK(jump_sum_brute(2) == 1);
  CHECK(jump_sum_brute(3) == 7);
  CHECK(jump_sum_closed(1) == 0);
  CHECK(jump_sum_closed(2) == 1);
  CHECK(jump_sum_closed(3) == 7);
  for (unsigned n = 1; n <= 9; ++n) CHECK(jump_sum_brute(n) == jump_sum_closed(n));
  try {
    jump_sum_brute(11);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK(jump_sum_closed(40) > 0);
}

TEST_CASE("omega map") {
  CHECK(omega_of({0, 1}) == std::vector<unsigned>{0, 1});
  CHECK(omega_of({0, 1, 0}) == std::vector<unsigned>{0, 1, 0});
  // ‖δ‖ = 1 with δ_1 = 1 leaves no entry below the norm, so this is not in Y
  try {
    omega_of({1, 1, 0});
    FAIL("expected NotInY");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInY);
  }
  CHECK_THROWS_AS(omega_of({0, 0, 0}), Error);
  CHECK_THROWS_AS(omega_of({2, 0}), Error);
}

TEST_CASE("omega fibers have size equal to the norm") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto s = staircase_signature(n);
    std::map<std::vector<unsigned>, std::uint64_t> fibers;
    for (const auto& d : enumerate_Y(s)) {
      const auto tau = omega_of(d.flat());
      REQUIRE(tau.size() == n);
      for (unsigned i = 0; i < n; ++i) CHECK(tau[i] <= i);
      CHECK(max_entry(tau) > 0);
      ++fibers[tau];
    }
    // every nonzero τ ⪯ (0, 1, ..., n-1) has a fiber of size ‖τ‖
    std::vector<unsigned> tau(n, 0);
    std::uint64_t nonzero = 0, norm_sum = 0;
    while (true) {
      const unsigned norm = max_entry(tau);
      if (norm > 0) {
        ++nonzero;
        norm_sum += norm;
        const auto it = fibers.find(tau);
        CHECK((it == fibers.end() ? 0 : it->second) == norm);
      }
      std::size_t i = n;
      while (i > 0 && tau[i - 1] == i - 1) tau[--i] = 0;
      if (i == 0) break;
      ++tau[i - 1];
    }
    CHECK(fibers.size() == nonzero);
    CHECK(norm_sum == enumerate_Y(s).size());

    // reversing codes of S_n lands in the same staircase, so the norm sum is the jump sum
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    std::uint64_t reversed_sum = 0;
    do {
      auto code = code_of(perm).code;
      std::reverse(code.begin(), code.end());
      for (unsigned i = 0; i < n; ++i) CHECK(code[i] <= i);
      reversed_sum += max_entry(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(reversed_sum == norm_sum);
  }
}

TEST_CASE("triple identity") {
  for (unsigned n : {1u, 3u, 7u}) {
    const auto r = verify_triple_identity(n);
    CHECK(r.equal);
    CHECK(r.closed == jump_sum_closed(n));
  }
  CHECK(verify_triple_identity(3).y_size == 7);
  CHECK(verify_triple_identity(1).classes == 0);
}

}  // TEST_SUITE
