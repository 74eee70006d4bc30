#pragma once

#include <stdexcept>

#include "bernzeta/hp.hpp"

namespace bernzeta {

struct GammaPoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct GammaResult {
  HPComplex value;
  HPReal rel_err_bound;  // method truncation bound, excludes rounding
};

// Gamma(z) by Spouge's approximation (reflection for Re(z) < 1/2), accurate
// to better than 10^-digits relative on |z| <= 50. The truncation bound
// a^{-1/2} (2*pi)^{-(a+1/2)} for the chosen parameter a is reported in the
// result. Throws GammaPoleError at z in {0, -1, -2, ...}.
GammaResult gamma_complex(const HPComplex& z, unsigned digits);

}  // namespace bernzeta
