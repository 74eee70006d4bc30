#pragma once

#include "bernzeta/bernoulli.hpp"
#include "bernzeta/series.hpp"

namespace bernzeta {

struct EmDivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// Euler-Maclaurin parameters: cut the Dirichlet sum at n_cut and apply
// m_order derivative corrections; valid for Re(s) > -2*m_order - 1.
struct EmParams {
  unsigned n_cut = 200;
  unsigned m_order = 12;
  unsigned target_digits = 30;
  double margin = 0.05;
  Convention conv = Convention::Classical;  // only even-index B_{2k} are used,
                                            // so the choice cannot matter
};

// Plain Dirichlet partial sum for Re(s) > 1; the error estimate is the
// integral tail bound terms^{1-Re(s)} / (Re(s)-1).
EvalResult zeta_dirichlet(const HPComplex& s, unsigned long terms,
                          unsigned target_digits = 30);

// Euler-Maclaurin continuation:
//   sum_{n<=N} n^-s - N^{1-s}/(-s+1) - N^-s/2
//     - sum_{k<=M} B_{2k}/(2k)! (-s)(-s-1)...(-s-2k+2) N^{-s-2k+1},
// with the first omitted correction term as the error estimate. Throws
// EmDivergenceError when the asymptotic tail has started growing (first
// omitted term larger than the last included one while still significant).
EvalResult zeta_euler_maclaurin(const HPComplex& s, const EmParams& p = {});

}  // namespace bernzeta
