#pragma once

#include "bernzeta/gamma.hpp"
#include "bernzeta/hp.hpp"

namespace bernzeta {

// Evaluation policy for the nested binomial series.
struct SeriesConfig {
  double w = 4.0;                // free parameter; region is Re(s) > 1/w
  unsigned target_digits = 30;   // requested decimal accuracy
  unsigned long n_max = 20000;   // cap on the outer index
  double tol = 0.0;              // relative tolerance; 0 means 10^-target_digits
  unsigned k_consec = 10;        // consecutive small terms required to accept convergence
  double limit_eps = 1e-3;       // offset for the two-point limit path at odd integers
  double margin = 0.05;          // required gap Re(s) - 1/w
};

enum class EvalStatus { Converged, Truncated, LimitPath, Pole, OutOfRegion };

const char* to_string(EvalStatus s);

struct EvalResult {
  HPComplex value;
  HPReal abs_err_est;
  unsigned long terms_used = 0;
  EvalStatus status = EvalStatus::Converged;
  // Diagnostics for the series bracket (before the w^{s-1} prefactor):
  // its magnitude and the largest partial-sum magnitude seen. Zero when the
  // evaluation never ran a series.
  HPReal bracket_abs;
  HPReal bracket_scale;

  bool ok() const {
    return status == EvalStatus::Converged || status == EvalStatus::Truncated ||
           status == EvalStatus::LimitPath;
  }
};

// Working precision in bits for a given config:
//   ceil(target_digits*log2(10)) + ceil(n_max*log2(1 + 1/(2*pi*w))) + 64.
// The middle term absorbs the cancellation growth of the inner sums, whose
// individual terms reach (1 + 1/(2*pi*w))^n while A_n itself stays small.
unsigned working_precision_bits(const SeriesConfig& cfg);

// Extended binomial coefficient C(s-1, n) = (1/n!) prod_{k=0}^{n-1} (s-1-k).
HPComplex binom_extended(const HPComplex& s, unsigned n);

// w^{s-1} ( 1/2 + sum_{n>=1} (-1)^n C(s-1,n) A_n ) with inner bracket
// A_n = 1/2 + sum_{m=1}^n (-1/w)^m C(n,m) B_{m+1}/(m+1)!  (redefined B).
// Terminates exactly when s-1 is a nonnegative integer; otherwise requires
// Re(s) - 1/w >= margin and truncates per the k_consec rule or at n_max.
EvalResult operator_power_series(const HPComplex& s, const SeriesConfig& cfg);

// B(s) = Gamma(1+s) * operator_power_series(s).
EvalResult bernoulli_function(const HPComplex& s, const SeriesConfig& cfg);

// zeta(1-s) = -w^{s-1} Gamma(s) (series bracket), equivalently -B(s)/s.
// Returns the direct route; the -B(s)/s route is exposed for cross-checks.
EvalResult zeta_one_minus_s(const HPComplex& s, const SeriesConfig& cfg);
EvalResult zeta_one_minus_s_via_bfunc(const HPComplex& s, const SeriesConfig& cfg);

// Right-hand side of the functional equation:
//   zeta(1-s) = 2 (2*pi)^{-s} Gamma(s) cos(pi*s/2) zeta(s).
HPComplex functional_equation_rhs(const HPComplex& s, const HPComplex& zeta_s,
                                  unsigned digits = 30);

// The nested-series representation
//   zeta(s) = -(2*pi)^s/2 * w^{s-1} * (series bracket) / cos(pi*s/2).
// Near odd integers >= 3 (where cos and the bracket both vanish) the value is
// the mean of two evaluations at s +- limit_eps, status LimitPath. s = 1 is
// the zeta pole and reports status Pole.
EvalResult zeta_nested(const HPComplex& s, const SeriesConfig& cfg);

}  // namespace bernzeta
