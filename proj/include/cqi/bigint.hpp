#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace cqi {

using BigInt = mpz_class;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace cqi
