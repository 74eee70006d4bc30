#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bernzeta/rational.hpp"

namespace bernzeta {

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CalibrationMismatchError : std::logic_error {
  using std::logic_error::logic_error;
};

// A node expression +-1/(a! b! ...). Arguments are kept in O_R-prepend order,
// so the two middle terms of the worked B_3 row are distinguishable as (3,2)
// and (2,3) even though their values coincide.
struct FormalTerm {
  int sign = +1;                // +1 or -1
  std::vector<unsigned> args;   // each >= 2, nonempty

  ExactRational value() const;
  bool operator==(const FormalTerm&) const = default;
};

struct TreeRow {
  unsigned depth = 0;
  std::vector<FormalTerm> terms;  // 2^depth entries, O_L branch first
};

inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t(1) << 22;

// O_L: +-1/(a! b! ...) -> +-1/((a+1)! b! ...), sign preserved.
FormalTerm apply_ol(FormalTerm t);

// O_R: +-1/(a! b! ...) -> -+1/(2! a! b! ...), sign flipped.
FormalTerm apply_or(FormalTerm t);

// Materialized row n (root row is 0, a single +1/2!). Intended for small n;
// throws BudgetExceededError when 2^n exceeds the node budget.
TreeRow tree_row(unsigned n, std::uint64_t node_budget = kDefaultNodeBudget);

// Exact S_n = sum of values over row n, computed by a depth-first streaming
// fold (memory stays O(n), the row is never materialized).
ExactRational s_row_sum(unsigned n, std::uint64_t node_budget = kDefaultNodeBudget);

// B_n = sigma * n! * S_{n-1} for n >= 2, with the module-wide calibration
// sign sigma fixed by the n = 2 case. Cross-checks the result against the
// recurrence and throws CalibrationMismatchError on disagreement.
ExactRational bernoulli_via_tree(unsigned n, std::uint64_t node_budget = kDefaultNodeBudget);

// The calibration constant relating tree row sums to Bernoulli numbers.
int tree_sigma();

// (-1)^k det(M_k) for the k x k lower-Hessenberg matrix with entries
// m_{i,j} = 1/(i-j+2)! (j <= i) and unit superdiagonal; the bridge identity
// is (-1)^k k! det(M_k) = B_k. O(k^2) exact rational operations.
ExactRational s_det(unsigned k);

}  // namespace bernzeta
