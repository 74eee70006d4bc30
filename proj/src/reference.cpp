#include "bernzeta/reference.hpp"

#include <cmath>

namespace bernzeta {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::pow;

// n^{-s} at the current working precision.
HPComplex pow_int_neg(unsigned long n, const HPComplex& s) {
  return pow_real_base(HPReal(n), -s);
}

unsigned digits_to_bits(unsigned digits) {
  return static_cast<unsigned>(std::ceil(digits * 3.3219280948873623)) + 64;
}

}  // namespace

EvalResult zeta_dirichlet(const HPComplex& s, unsigned long terms,
                          unsigned target_digits) {
  PrecisionScope scope(digits_to_bits(target_digits));
  EvalResult out;
  if (abs(s - HPComplex(HPReal(1))) < HPReal(1e-12)) {
    out.status = EvalStatus::Pole;
    out.abs_err_est = std::numeric_limits<double>::infinity();
    return out;
  }
  if (s.re <= 1) {
    out.status = EvalStatus::OutOfRegion;
    out.abs_err_est = std::numeric_limits<double>::infinity();
    return out;
  }
  if (terms == 0) throw std::invalid_argument("zeta_dirichlet: terms must be >= 1");
  HPComplex acc{HPReal(1)};
  for (unsigned long n = 2; n <= terms; ++n) acc += pow_int_neg(n, s);
  out.value = acc;
  out.terms_used = terms;
  out.status = EvalStatus::Truncated;
  out.abs_err_est = pow(HPReal(terms), HPReal(1 - s.re)) / (s.re - 1);
  return out;
}

EvalResult zeta_euler_maclaurin(const HPComplex& s, const EmParams& p) {
  PrecisionScope scope(digits_to_bits(p.target_digits));
  EvalResult out;
  if (abs(s - HPComplex(HPReal(1))) < HPReal(1e-12)) {
    out.status = EvalStatus::Pole;
    out.abs_err_est = std::numeric_limits<double>::infinity();
    return out;
  }
  if (s.re <= HPReal(-2.0 * p.m_order - 1 + p.margin)) {
    out.status = EvalStatus::OutOfRegion;
    out.abs_err_est = std::numeric_limits<double>::infinity();
    return out;
  }
  const unsigned long N = p.n_cut;
  const unsigned M = p.m_order;
  HPComplex acc{HPReal(0)};
  for (unsigned long n = 1; n <= N; ++n) acc += pow_int_neg(n, s);
  HPComplex n_pow = pow_int_neg(N, s);  // N^{-s}
  acc -= (HPReal(N) * n_pow) / (HPComplex(HPReal(1)) - s);  // N^{1-s}/(-s+1)
  acc -= n_pow / HPReal(2);

  // Correction terms: the odd derivative of x^{-s} at N in closed form,
  // d^{2k-1}/dx^{2k-1} x^{-s} = (-s)(-s-1)...(-s-2k+2) x^{-s-2k+1}.
  HPComplex falling{HPReal(1)};  // (-s)(-s-1)...(-s-j+1), grown incrementally
  unsigned built = 0;
  HPReal last_included(0);
  for (unsigned k = 1; k <= M; ++k) {
    while (built < 2 * k - 1) {
      falling = falling * (-s - HPComplex(HPReal(built)));
      ++built;
    }
    HPReal b_over_fact = to_hp(bernoulli(2 * k, p.conv) /
                               ExactRational(factorial_int(2 * k)));
    HPComplex corr = b_over_fact * falling * pow_real_base(HPReal(N), HPComplex(HPReal(1 - 2.0 * k)) - s);
    acc -= corr;
    last_included = abs(corr);
  }
  // First omitted correction term: both the error estimate and the
  // divergence guard for the asymptotic series.
  while (built < 2 * M + 1) {
    falling = falling * (-s - HPComplex(HPReal(built)));
    ++built;
  }
  HPReal b_next = to_hp(bernoulli(2 * M + 2, p.conv) /
                        ExactRational(factorial_int(2 * M + 2)));
  HPReal omitted = abs(b_next) * abs(falling) *
                   pow(HPReal(N), HPReal(-1 - 2.0 * M - s.re));
  HPReal tol = pow(HPReal(10), -static_cast<int>(p.target_digits));
  if (omitted > last_included && omitted > tol * (abs(acc) + 1))
    throw EmDivergenceError("zeta_euler_maclaurin: asymptotic tail diverges; reduce m_order or raise n_cut");

  out.value = acc;
  out.terms_used = N + M;
  out.abs_err_est = omitted + (abs(acc) + 1) * pow(HPReal(2), 24 - static_cast<int>(digits_to_bits(p.target_digits)));
  HPReal scale = abs(acc) < 1 ? HPReal(1) : abs(acc);
  out.status = out.abs_err_est <= tol * scale ? EvalStatus::Converged : EvalStatus::Truncated;
  return out;
}

}  // namespace bernzeta
