#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "ubic/bytes.hpp"

namespace ubic {

/// Deterministic random source. Every randomized operation in the library
/// takes one of these explicitly; identical seeds give identical runs on
/// every platform (mt19937_64 output is fixed by the standard).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Unbiased integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  void fill(std::uint8_t* out, std::size_t len);
  Bytes bytes(std::size_t len);

  /// Uniform in [0, 2^bits).
  mpz_class mpz_bits(std::size_t bits);

  /// Uniform in [0, m). m must be > 0.
  mpz_class mpz_below(const mpz_class& m);

  /// k uniform decimal digits as a string, e.g. "042913".
  std::string decimal_digits(std::size_t k);

 private:
  std::mt19937_64 gen_;
};

}  // namespace ubic
