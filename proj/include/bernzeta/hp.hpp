#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "bernzeta/rational.hpp"

namespace bernzeta {

// Arbitrary-precision binary float. Precision is controlled through the
// thread-local default; every public operation in the analytic and reference
// modules opens a PrecisionScope before touching HPReal values.
using HPReal = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(bits * 0.30102999566398119521) + 3;
}

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(HPReal::default_precision()) {
    HPReal::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { HPReal::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

// Complex number on HPReal carriers. Principal branches throughout.
struct HPComplex {
  HPReal re, im;

  HPComplex() : re(0), im(0) {}
  HPComplex(HPReal r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit HPComplex(double r, double i = 0.0) : re(r), im(i) {}

  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline HPComplex operator+(const HPComplex& a, const HPComplex& b) {
  return {HPReal(a.re + b.re), HPReal(a.im + b.im)};
}
inline HPComplex operator-(const HPComplex& a, const HPComplex& b) {
  return {HPReal(a.re - b.re), HPReal(a.im - b.im)};
}
inline HPComplex operator-(const HPComplex& a) { return {HPReal(-a.re), HPReal(-a.im)}; }
inline HPComplex operator*(const HPComplex& a, const HPComplex& b) {
  return {HPReal(a.re * b.re - a.im * b.im), HPReal(a.re * b.im + a.im * b.re)};
}
inline HPComplex operator*(const HPComplex& a, const HPReal& b) {
  return {HPReal(a.re * b), HPReal(a.im * b)};
}
inline HPComplex operator*(const HPReal& a, const HPComplex& b) { return b * a; }
inline HPComplex operator/(const HPComplex& a, const HPReal& b) {
  return {HPReal(a.re / b), HPReal(a.im / b)};
}
inline HPComplex operator/(const HPComplex& a, const HPComplex& b) {
  HPReal n = b.re * b.re + b.im * b.im;
  return {HPReal((a.re * b.re + a.im * b.im) / n), HPReal((a.im * b.re - a.re * b.im) / n)};
}
inline HPComplex& operator+=(HPComplex& a, const HPComplex& b) {
  a.re += b.re;
  a.im += b.im;
  return a;
}
inline HPComplex& operator-=(HPComplex& a, const HPComplex& b) {
  a.re -= b.re;
  a.im -= b.im;
  return a;
}

inline HPComplex conj(const HPComplex& a) { return {a.re, HPReal(-a.im)}; }
inline HPReal abs(const HPComplex& a) {
  if (a.im.is_zero()) return HPReal(boost::multiprecision::abs(a.re));
  return HPReal(boost::multiprecision::hypot(a.re, a.im));
}

HPComplex exp(const HPComplex& a);
HPComplex log(const HPComplex& a);  // principal branch
HPComplex sin(const HPComplex& a);
HPComplex cos(const HPComplex& a);

// base^expo for real base > 0, principal branch exp(expo * ln base).
HPComplex pow_real_base(const HPReal& base, const HPComplex& expo);

// Pi at the current working precision.
inline HPReal hp_pi() {
  HPReal p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

// Exact rational -> HPReal at the current working precision.
inline HPReal to_hp(const ExactRational& r) { return HPReal(r); }

}  // namespace bernzeta
