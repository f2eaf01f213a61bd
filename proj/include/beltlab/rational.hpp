#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "beltlab/errors.hpp"

namespace beltlab {

using Int = mpz_class;

// Exact rational, always kept in canonical form. No floating point anywhere in
// the core: values grow doubly exponentially in the non-integrable cases and
// all certificates are exact-equality checks.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  require(den != 0, Errc::bad_input, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  require(den != 0, Errc::bad_input, "zero denominator");
  Rat r;
  r.get_num() = num;
  r.get_den() = den;
  r.canonicalize();
  return r;
}

// Accepts "p", "-p" or "p/q" in base 10; no decimal points.
inline Rat parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  require(!s.empty(), Errc::bad_input, "empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      Rat r;
      r.get_num() = Int(std::string(s));
      r.get_den() = 1;
      return r;
    }
    Int num(std::string(trim(s.substr(0, slash))));
    Int den(std::string(trim(s.substr(slash + 1))));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    fail(Errc::bad_input, "bad rational literal '" + std::string(text) + "'");
  }
}

inline std::string rat_string(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rat r;
  r.get_num() = num;
  r.get_den() = den;
  return r;  // gcd(num,den)=1 is preserved by powering
}

// Approximate log2 |r| from integer bit lengths. Diagnostics only (growth
// flags); never feeds back into exact computations.
inline long bit_length(const Rat& r) {
  if (r == 0) return 0;
  long nb = static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2));
  long db = static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
  return nb - db;
}

inline Rat random_rational(std::mt19937_64& rng, long num_lo, long num_hi,
                           long den_lo, long den_hi) {
  std::uniform_int_distribution<long> num(num_lo, num_hi), den(den_lo, den_hi);
  return make_rat(num(rng), den(rng));
}

}  // namespace beltlab
