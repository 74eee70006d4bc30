#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace bernzeta {

// Arbitrary-precision exact rational, always stored in lowest terms with a
// positive denominator (canonicalization is handled by GMP).
using ExactRational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline BigInt factorial_int(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

inline BigInt binomial_int(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

// Prints "p/q" with the denominator always present ("0/1", "-691/2730").
inline std::string to_fraction_string(const ExactRational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace bernzeta
