#include "bernzeta/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace bernzeta {

namespace {

std::mutex g_cache_mu;
std::vector<ExactRational> g_classical = {ExactRational(1)};

// Extends the classical table through index n. Caller holds g_cache_mu.
void extend_locked(unsigned n) {
  for (unsigned i = g_classical.size(); i <= n; ++i) {
    ExactRational acc(0);
    BigInt binom(1);  // C(i+1, k), updated incrementally
    for (unsigned k = 0; k < i; ++k) {
      if (!g_classical[k].is_zero()) acc += ExactRational(binom) * g_classical[k];
      binom = binom * (i + 1 - k) / (k + 1);
    }
    g_classical.push_back(-acc / ExactRational(i + 1));
  }
}

}  // namespace

ExactRational bernoulli(unsigned n, Convention conv) {
  ExactRational b;
  {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    extend_locked(n);
    b = g_classical[n];
  }
  if (conv == Convention::Redefined && n == 1) b = -b;
  return b;
}

std::vector<ExactRational> egf_coefficients(unsigned count, Convention conv) {
  if (count == 0) throw std::invalid_argument("egf_coefficients: count must be >= 1");
  // a_k = 1/(k+1)!; c is the reciprocal series, found by back-substitution
  // from conv(a, c) = delta_0.
  std::vector<ExactRational> a(count), c(count);
  for (unsigned k = 0; k < count; ++k)
    a[k] = ExactRational(1, factorial_int(k + 1));
  c[0] = 1;
  for (unsigned n = 1; n < count; ++n) {
    ExactRational acc(0);
    for (unsigned j = 1; j <= n; ++j) acc += a[j] * c[n - j];
    c[n] = -acc;
  }
  std::vector<ExactRational> out(count);
  for (unsigned k = 0; k < count; ++k) {
    out[k] = c[k] * ExactRational(factorial_int(k));
    if (conv == Convention::Redefined && (k & 1u)) out[k] = -out[k];
  }
  return out;
}

ExactRational zeta_even_exact(unsigned n) {
  if (n == 0) throw std::invalid_argument("zeta_even_exact: n must be >= 1");
  BigInt two_pow = BigInt(1) << (2 * n);
  ExactRational r = ExactRational(two_pow, 2) * bernoulli(2 * n, Convention::Classical) /
                    ExactRational(factorial_int(2 * n));
  if ((n & 1u) == 0) r = -r;  // overall factor -(-1)^n
  return r;
}

ExactRational zeta_neg_int(unsigned n) {
  return -bernoulli(n + 1, Convention::Redefined) / ExactRational(n + 1);
}

}  // namespace bernzeta
