#include "ubic/rng.hpp"

#include <stdexcept>

namespace ubic {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SeededRng::below: bound is 0");
  // Rejection sampling over the smallest covering power-of-two-ish range.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return v % bound;
}

void SeededRng::fill(std::uint8_t* out, std::size_t len) {
  std::size_t i = 0;
  while (i < len) {
    std::uint64_t v = gen_();
    for (int k = 0; k < 8 && i < len; ++k, ++i) {
      out[i] = static_cast<std::uint8_t>(v >> (8 * k));
    }
  }
}

Bytes SeededRng::bytes(std::size_t len) {
  Bytes b(len);
  fill(b.data(), len);
  return b;
}

mpz_class SeededRng::mpz_bits(std::size_t bits) {
  if (bits == 0) return 0;
  const std::size_t nbytes = (bits + 7) / 8;
  Bytes buf = bytes(nbytes);
  // Drop excess high bits so the value is uniform in [0, 2^bits).
  const unsigned excess = static_cast<unsigned>(nbytes * 8 - bits);
  if (excess) buf[0] &= static_cast<std::uint8_t>(0xFF >> excess);
  mpz_class v;
  mpz_import(v.get_mpz_t(), buf.size(), 1 /*msb first*/, 1, 1, 0, buf.data());
  return v;
}

mpz_class SeededRng::mpz_below(const mpz_class& m) {
  if (m <= 0) throw std::invalid_argument("SeededRng::mpz_below: m must be > 0");
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  mpz_class v;
  do {
    v = mpz_bits(bits);
  } while (v >= m);
  return v;
}

std::string SeededRng::decimal_digits(std::size_t k) {
  std::string s;
  s.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    s.push_back(static_cast<char>('0' + below(10)));
  return s;
}

}  // namespace ubic
