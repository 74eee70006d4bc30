#include "bernzeta/hp.hpp"

namespace bernzeta {

using boost::multiprecision::atan2;
using boost::multiprecision::cosh;
using boost::multiprecision::sinh;

HPComplex exp(const HPComplex& a) {
  HPReal m = boost::multiprecision::exp(a.re);
  if (a.im.is_zero()) return {m, HPReal(0)};
  return {HPReal(m * boost::multiprecision::cos(a.im)),
          HPReal(m * boost::multiprecision::sin(a.im))};
}

HPComplex log(const HPComplex& a) {
  HPReal r = abs(a);
  HPReal arg = a.im.is_zero() && a.re > 0 ? HPReal(0) : HPReal(atan2(a.im, a.re));
  return {HPReal(boost::multiprecision::log(r)), arg};
}

HPComplex sin(const HPComplex& a) {
  if (a.im.is_zero()) return {HPReal(boost::multiprecision::sin(a.re)), HPReal(0)};
  return {HPReal(boost::multiprecision::sin(a.re) * cosh(a.im)),
          HPReal(boost::multiprecision::cos(a.re) * sinh(a.im))};
}

HPComplex cos(const HPComplex& a) {
  if (a.im.is_zero()) return {HPReal(boost::multiprecision::cos(a.re)), HPReal(0)};
  return {HPReal(boost::multiprecision::cos(a.re) * cosh(a.im)),
          HPReal(-boost::multiprecision::sin(a.re) * sinh(a.im))};
}

HPComplex pow_real_base(const HPReal& base, const HPComplex& expo) {
  HPReal lb = boost::multiprecision::log(base);
  if (expo.im.is_zero()) return {HPReal(boost::multiprecision::exp(expo.re * lb)), HPReal(0)};
  return exp(HPComplex(HPReal(expo.re * lb), HPReal(expo.im * lb)));
}

}  // namespace bernzeta
