#include "bernzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "bernzeta/bernoulli.hpp"

namespace bernzeta {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::floor;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

// Shared table of inner-bracket values A_n for one (w, precision) pair.
// A_n = 1/2 + sum over odd m <= n of C(n,m) (-1/w)^m B_{m+1}/(m+1)!
// (even m >= 2 drop out: odd-index Bernoulli numbers vanish). Entries are
// appended on demand; the Bernoulli inputs are exact rationals converted
// once per (precision, index) pair.
class InnerTable {
 public:
  InnerTable(double w, unsigned bits) : w_(w), bits_(bits) {}

  // A_n, extending the table if needed. Thread safe.
  HPReal at(unsigned long n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (a_.size() < n) append_next_locked();
    return a_[n - 1];
  }

  static std::shared_ptr<InnerTable> get(double w, unsigned bits) {
    static std::mutex mu;
    static std::map<std::pair<double, unsigned>, std::shared_ptr<InnerTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{w, bits}];
    if (!slot) slot = std::make_shared<InnerTable>(w, bits);
    return slot;
  }

 private:
  // (-1/w)^m B_{m+1}/(m+1)! for odd m = 2j+1.
  const HPReal& coeff_locked(unsigned long j) {
    while (coeff_.size() <= j) {
      unsigned long m = 2 * coeff_.size() + 1;
      ExactRational b = bernoulli(m + 1, Convention::Redefined) /
                        ExactRational(factorial_int(m + 1));
      HPReal c = -to_hp(b) * pow(HPReal(1) / HPReal(w_), m);
      coeff_.push_back(std::move(c));
    }
    return coeff_[j];
  }

  void append_next_locked() {
    PrecisionScope scope(bits_);
    unsigned long n = a_.size() + 1;
    HPReal tot(0.5);
    HPReal binom(n);  // C(n, m) at m = 1
    const double inv_q2 = 1.0 / ((2.0 * 3.14159265358979323846 * w_) *
                                 (2.0 * 3.14159265358979323846 * w_));
    long max_exp = -(1L << 40);
    unsigned long m = 1;
    for (;;) {
      HPReal t = binom * coeff_locked((m - 1) / 2);
      tot += t;
      if (!t.is_zero()) {
        long e = mpfr_get_exp(t.backend().data());
        if (e > max_exp) max_exp = e;
        // Past the peak the two-step term ratio is bounded by rho; once the
        // terms sit far below the peak the remaining tail is below rounding.
        double rho = double(n - m) * double(n - m - 1) / (double(m + 1) * double(m + 2)) * inv_q2;
        if (m + 2 > n || (rho < 0.9 && e < max_exp - long(bits_) - 8)) break;
      } else if (m + 2 > n) {
        break;
      }
      binom *= (n - m) * (n - m - 1);
      binom /= (m + 1) * (m + 2);
      m += 2;
    }
    a_.push_back(std::move(tot));
  }

  double w_;
  unsigned bits_;
  std::vector<HPReal> a_;
  std::vector<HPReal> coeff_;
  std::mutex mu_;
};

bool is_positive_integer(const HPComplex& s) {
  return s.im.is_zero() && s.re >= 1 && floor(s.re) == s.re &&
         s.re < HPReal(1e9);
}

HPReal config_tol(const SeriesConfig& cfg) {
  if (cfg.tol > 0) return HPReal(cfg.tol);
  return pow(HPReal(10), -static_cast<int>(cfg.target_digits));
}

EvalResult make_status_only(EvalStatus st) {
  EvalResult r;
  r.status = st;
  r.abs_err_est = std::numeric_limits<double>::infinity();
  r.bracket_abs = 0;
  r.bracket_scale = 0;
  return r;
}

// Direct evaluation of the nested representation at one point; assumes the
// caller has ruled out the pole and decided against the limit path.
EvalResult zeta_nested_direct(const HPComplex& s, const SeriesConfig& cfg) {
  EvalResult ops = operator_power_series(s, cfg);
  if (!ops.ok()) return ops;
  HPReal two_pi = 2 * hp_pi();
  HPComplex pref = pow_real_base(two_pi, s) / HPReal(2);
  HPComplex cos_fac = cos(HPComplex(hp_pi()) * s / HPReal(2));
  EvalResult out = ops;
  out.value = -(pref * ops.value) / cos_fac;
  out.abs_err_est = ops.abs_err_est * abs(pref) / abs(cos_fac);
  return out;
}

}  // namespace

const char* to_string(EvalStatus s) {
  switch (s) {
    case EvalStatus::Converged: return "CONVERGED";
    case EvalStatus::Truncated: return "TRUNCATED";
    case EvalStatus::LimitPath: return "LIMIT_PATH";
    case EvalStatus::Pole: return "POLE";
    case EvalStatus::OutOfRegion: return "OUT_OF_REGION";
  }
  return "?";
}

unsigned working_precision_bits(const SeriesConfig& cfg) {
  double digit_bits = std::ceil(cfg.target_digits * std::log2(10.0));
  double growth_bits = std::ceil(double(cfg.n_max) *
                                 std::log2(1.0 + 1.0 / (2.0 * M_PI * cfg.w)));
  return static_cast<unsigned>(digit_bits + growth_bits) + 64;
}

HPComplex binom_extended(const HPComplex& s, unsigned n) {
  HPComplex r{HPReal(1)};
  for (unsigned k = 0; k < n; ++k) {
    r = r * (s - HPComplex(HPReal(1 + k)));
    r = r / HPReal(k + 1);
  }
  return r;
}

EvalResult operator_power_series(const HPComplex& s, const SeriesConfig& cfg) {
  unsigned bits = working_precision_bits(cfg);
  PrecisionScope scope(bits);

  bool terminating = is_positive_integer(s);
  if (!terminating && s.re < HPReal(1.0 / cfg.w) + HPReal(cfg.margin))
    return make_status_only(EvalStatus::OutOfRegion);

  auto table = InnerTable::get(cfg.w, bits);
  HPReal tol = config_tol(cfg);

  HPComplex partial{HPReal(0.5)};
  HPComplex binom{HPReal(1)};  // C(s-1, n), updated incrementally
  HPReal scale(0.5);
  unsigned consec = 0;
  unsigned long used = 0;
  EvalStatus status = EvalStatus::Truncated;
  std::deque<HPComplex> recent;  // recent partial sums, for the tail estimate

  // The outer series is asymptotic rather than convergent: term magnitudes
  // fall to a floor near n* ~ Re(s) (2 pi w)^2 and grow afterwards, so the
  // sum must be cut at the floor. The guard tracks a 32-wide running max of
  // |term| and, once it has grown well past its minimum, rewinds to the
  // partial sum recorded there. Because the tail oscillates with period
  // about 4 pi^2 w in n, the recorded value is the mean of the last period
  // of partial sums, which sits much closer to the limit than any single one.
  const size_t kTermWin = 32;
  const unsigned long kHold = 64;
  const size_t avg_len = std::max<size_t>(
      kTermWin, static_cast<size_t>(std::lround(4.0 * M_PI * M_PI * cfg.w)));
  std::deque<HPReal> term_mags;
  std::deque<HPComplex> psums;
  HPComplex running{HPReal(0)};
  HPReal best_wmax(0);
  bool have_best = false;
  unsigned long best_n = 0;
  HPComplex best_avg;
  HPReal guard_floor(0);
  bool guarded = false;

  for (unsigned long n = 1; n <= cfg.n_max; ++n) {
    binom = binom * (s - HPComplex(HPReal(n)));  // factor s-1-(n-1)
    binom = binom / HPReal(n);
    if (binom.is_zero()) {
      // s-1 is a nonnegative integer: the outer series terminates exactly.
      status = EvalStatus::Converged;
      break;
    }
    HPComplex term = binom * table->at(n);
    if (n & 1ul)
      partial -= term;
    else
      partial += term;
    used = n;
    HPReal ap = abs(partial);
    if (ap > scale) scale = ap;
    recent.push_back(partial);
    if (recent.size() > 64) recent.pop_front();

    if (psums.size() == avg_len) {
      running = running - psums.front();
      psums.pop_front();
    }
    psums.push_back(partial);
    running = running + partial;
    term_mags.push_back(abs(term));
    if (term_mags.size() > kTermWin) term_mags.pop_front();
    if (n >= kTermWin) {
      HPReal wmax(0);
      for (const HPReal& m : term_mags)
        if (m > wmax) wmax = m;
      if (!have_best || wmax < best_wmax) {
        have_best = true;
        best_wmax = wmax;
        best_n = n;
        best_avg = running / HPReal(static_cast<unsigned long>(psums.size()));
      } else if (wmax > 4 * best_wmax && n > best_n + kHold) {
        partial = best_avg;
        used = best_n;
        guard_floor = best_wmax;
        guarded = true;
        status = EvalStatus::Truncated;
        break;
      }
    }

    if (abs(term) <= tol * ap) {
      if (++consec >= cfg.k_consec) {
        status = EvalStatus::Converged;
        break;
      }
    } else {
      consec = 0;
    }
  }

  EvalResult out;
  out.status = status;
  out.terms_used = used;
  out.bracket_abs = abs(partial);
  out.bracket_scale = scale;
  HPComplex w_fac = pow_real_base(HPReal(cfg.w), s - HPComplex(HPReal(1)));
  out.value = w_fac * partial;
  HPReal w_mag = abs(w_fac);
  if (status == EvalStatus::Converged) {
    if (terminating) {
      HPReal rounding = (abs(out.value) + 1) * pow(HPReal(2), 24 - static_cast<int>(bits));
      HPReal cap = tol * (abs(out.value) < 1 ? HPReal(1) : abs(out.value));
      out.abs_err_est = rounding < cap ? rounding : cap;
    } else {
      out.abs_err_est = tol * (abs(out.value) < 1 ? HPReal(1) : abs(out.value));
    }
  } else if (guarded) {
    // Truncated at the term-size floor: the achievable accuracy is set by
    // the smallest term magnitude the series reached.
    out.abs_err_est = guard_floor * w_mag +
                      (abs(out.value) + 1) * pow(HPReal(2), 24 - static_cast<int>(bits));
  } else {
    // Tail estimate for algebraic, oscillatory convergence: the spread of
    // the recent partial sums around the last one.
    HPReal spread(0);
    for (const HPComplex& p : recent) {
      HPReal d = abs(p - partial);
      if (d > spread) spread = d;
    }
    out.abs_err_est = spread * w_mag + (abs(out.value) + 1) * pow(HPReal(2), 24 - static_cast<int>(bits));
  }
  return out;
}

EvalResult bernoulli_function(const HPComplex& s, const SeriesConfig& cfg) {
  EvalResult ops = operator_power_series(s, cfg);
  if (!ops.ok()) return ops;
  unsigned bits = working_precision_bits(cfg);
  PrecisionScope scope(bits);
  GammaResult g = gamma_complex(s + HPComplex(HPReal(1)), cfg.target_digits + 5);
  EvalResult out = ops;
  out.value = g.value * ops.value;
  out.abs_err_est = abs(g.value) * ops.abs_err_est +
                    g.rel_err_bound * abs(g.value) * abs(ops.value);
  return out;
}

EvalResult zeta_one_minus_s(const HPComplex& s, const SeriesConfig& cfg) {
  unsigned bits = working_precision_bits(cfg);
  PrecisionScope scope(bits);
  if (s.is_zero()) return make_status_only(EvalStatus::Pole);  // zeta(1) pole
  EvalResult ops = operator_power_series(s, cfg);
  if (!ops.ok()) return ops;
  GammaResult g = gamma_complex(s, cfg.target_digits + 5);
  EvalResult out = ops;
  out.value = -(g.value * ops.value);
  out.abs_err_est = abs(g.value) * ops.abs_err_est +
                    g.rel_err_bound * abs(g.value) * abs(ops.value);
  return out;
}

EvalResult zeta_one_minus_s_via_bfunc(const HPComplex& s, const SeriesConfig& cfg) {
  unsigned bits = working_precision_bits(cfg);
  PrecisionScope scope(bits);
  if (s.is_zero()) return make_status_only(EvalStatus::Pole);
  EvalResult b = bernoulli_function(s, cfg);
  if (!b.ok()) return b;
  EvalResult out = b;
  out.value = -(b.value / s);
  out.abs_err_est = b.abs_err_est / abs(s);
  return out;
}

HPComplex functional_equation_rhs(const HPComplex& s, const HPComplex& zeta_s,
                                  unsigned digits) {
  unsigned bits = static_cast<unsigned>(std::ceil(digits * 3.3219280948873623)) + 64;
  PrecisionScope scope(bits);
  GammaResult g = gamma_complex(s, digits + 5);
  HPReal two_pi = 2 * hp_pi();
  HPComplex cos_fac = cos(HPComplex(hp_pi()) * s / HPReal(2));
  return HPReal(2) * pow_real_base(two_pi, -s) * g.value * cos_fac * zeta_s;
}

EvalResult zeta_nested(const HPComplex& s, const SeriesConfig& cfg) {
  unsigned bits = working_precision_bits(cfg);
  PrecisionScope scope(bits);

  if (abs(s - HPComplex(HPReal(1))) <= HPReal(cfg.limit_eps))
    return make_status_only(EvalStatus::Pole);

  HPComplex cos_fac = cos(HPComplex(hp_pi()) * s / HPReal(2));
  if (abs(cos_fac) > sqrt(HPReal(cfg.limit_eps)))
    return zeta_nested_direct(s, cfg);

  // Limit path: cos(pi s/2) is (nearly) zero, i.e. s is at or near an odd
  // integer >= 3 where the bracket vanishes as well. Evaluate symmetrically
  // at s +- eps and average; the mean cancels the O(eps) term of the 0/0
  // ratio and the half-difference feeds the error estimate.
  HPReal eps(cfg.limit_eps);
  EvalResult hi = zeta_nested_direct(s + HPComplex(eps), cfg);
  EvalResult lo = zeta_nested_direct(s - HPComplex(eps), cfg);
  if (!hi.ok()) return hi;
  if (!lo.ok()) return lo;
  EvalResult out;
  out.status = EvalStatus::LimitPath;
  out.value = (hi.value + lo.value) / HPReal(2);
  out.abs_err_est = abs(hi.value - lo.value) / 2 + (hi.abs_err_est + lo.abs_err_est) / 2;
  out.terms_used = std::max(hi.terms_used, lo.terms_used);
  out.bracket_abs = hi.bracket_abs > lo.bracket_abs ? hi.bracket_abs : lo.bracket_abs;
  out.bracket_scale = hi.bracket_scale > lo.bracket_scale ? hi.bracket_scale : lo.bracket_scale;
  return out;
}

}  // namespace bernzeta
