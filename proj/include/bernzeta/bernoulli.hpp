#pragma once

#include <vector>

#include "bernzeta/rational.hpp"

namespace bernzeta {

// Sign convention for the (only nonzero odd) Bernoulli number B_1.
// Classical fixes B_1 = -1/2; Redefined fixes B_1 = +1/2. The two agree at
// every other index.
enum class Convention { Classical, Redefined };

// B_n by the defining recurrence
//   B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k,  B_0 = 1.
// Values are memoized per process, so bernoulli(n) after bernoulli(m >= n)
// is a cache lookup. Thread safe.
ExactRational bernoulli(unsigned n, Convention conv = Convention::Classical);

// [B_0, ..., B_{count-1}] via the exact power-series reciprocal of
// sum_k z^k/(k+1)!  (the series of (e^z-1)/z), coefficient k scaled by k!.
// Deliberately shares no code with bernoulli(); it is the independent oracle
// for the recurrence.
std::vector<ExactRational> egf_coefficients(unsigned count,
                                            Convention conv = Convention::Classical);

// The rational r with zeta(2n) = r * pi^{2n}:  r = -(2^{2n}/2) (-1)^n B_{2n}/(2n)!.
// Requires n >= 1.
ExactRational zeta_even_exact(unsigned n);

// zeta(-n) = -B_{n+1}/(n+1), with B in the redefined convention so that
// n = 0 yields zeta(0) = -1/2.
ExactRational zeta_neg_int(unsigned n);

}  // namespace bernzeta
