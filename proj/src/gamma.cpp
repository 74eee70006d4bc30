#include "bernzeta/gamma.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace bernzeta {

namespace {

using boost::multiprecision::exp;
using boost::multiprecision::floor;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

struct SpougeCoeffs {
  unsigned a;
  std::vector<HPReal> c;  // c[0] = sqrt(2*pi), c[k] as usual
};

std::mutex g_coeff_mu;
std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const SpougeCoeffs>> g_coeffs;

std::shared_ptr<const SpougeCoeffs> spouge_coeffs(unsigned a, unsigned bits) {
  std::lock_guard<std::mutex> lock(g_coeff_mu);
  auto& slot = g_coeffs[{a, bits}];
  if (!slot) {
    PrecisionScope scope(bits);
    auto sc = std::make_shared<SpougeCoeffs>();
    sc->a = a;
    sc->c.resize(a);
    HPReal two_pi = 2 * hp_pi();
    sc->c[0] = sqrt(two_pi);
    // c_k = (-1)^{k-1}/(k-1)! (a-k)^{k-1/2} e^{a-k}
    HPReal fact(1);
    for (unsigned k = 1; k < a; ++k) {
      if (k > 1) fact *= (k - 1);
      HPReal ak(a - k);
      HPReal mag = exp((HPReal(k) - HPReal(0.5)) * log(ak) + ak) / fact;
      sc->c[k] = (k & 1u) ? mag : HPReal(-mag);
    }
    slot = std::move(sc);
  }
  return slot;
}

bool is_nonpositive_integer(const HPComplex& z) {
  return z.im.is_zero() && z.re <= 0 && floor(z.re) == z.re;
}

HPComplex gamma_spouge(const HPComplex& z, const SpougeCoeffs& sc) {
  // Gamma(z) = (z-1+a)^{z-1/2} e^{-(z-1+a)} [c_0 + sum_k c_k/(z-1+k)]
  HPComplex zm1 = z - HPComplex(HPReal(1));
  HPComplex acc(sc.c[0]);
  for (unsigned k = 1; k < sc.a; ++k)
    acc += HPComplex(sc.c[k]) / (zm1 + HPComplex(HPReal(k)));
  HPComplex base = zm1 + HPComplex(HPReal(sc.a));
  HPComplex head = exp((zm1 + HPComplex(HPReal(0.5))) * log(base) - base);
  return head * acc;
}

}  // namespace

GammaResult gamma_complex(const HPComplex& z, unsigned digits) {
  if (is_nonpositive_integer(z))
    throw GammaPoleError("gamma_complex: pole at nonpositive integer");

  unsigned bits = static_cast<unsigned>(std::ceil(digits * 3.3219280948873623)) + 96;
  // Truncation bound a^{-1/2}(2*pi)^{-(a+1/2)} below 10^-(digits+2).
  unsigned a = static_cast<unsigned>(std::ceil((digits + 3) * 2.3025850929940457 /
                                               1.8378770664093453)) + 2;
  auto sc = spouge_coeffs(a, bits);

  PrecisionScope scope(bits);
  GammaResult out;
  out.rel_err_bound = pow(HPReal(2 * hp_pi()), -(HPReal(a) + HPReal(0.5))) / sqrt(HPReal(a));
  if (z.re < HPReal(0.5)) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z)).
    HPComplex one_minus(HPReal(1 - z.re), HPReal(-z.im));
    HPComplex g = gamma_spouge(one_minus, *sc);
    HPComplex s = sin(HPComplex(HPReal(hp_pi() * z.re), HPReal(hp_pi() * z.im)));
    out.value = HPComplex(hp_pi()) / (s * g);
  } else {
    out.value = gamma_spouge(z, *sc);
  }
  return out;
}

}  // namespace bernzeta
