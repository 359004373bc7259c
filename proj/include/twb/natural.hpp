#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace twb {

/// Arbitrary-precision natural number. Negative values never escape the
/// coding and evaluation layers.
using Natural = mpz_class;

inline std::string toDecimal(const Natural& n) { return n.get_str(10); }

/// Parses a non-empty run of decimal digits.
std::optional<Natural> parseDecimal(std::string_view text);

/// Returns the value when it fits in 64 bits.
std::optional<std::uint64_t> toU64(const Natural& n);

inline Natural fromU64(std::uint64_t v) {
  Natural r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

/// Number of bits of n (0 for n == 0).
inline std::size_t bitLength(const Natural& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace twb
