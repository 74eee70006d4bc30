#include "bernzeta/tree.hpp"

#include "bernzeta/bernoulli.hpp"

namespace bernzeta {

namespace {

std::uint64_t row_size_checked(unsigned n, std::uint64_t budget) {
  if (n >= 63 || (std::uint64_t(1) << n) > budget)
    throw BudgetExceededError("tree row " + std::to_string(n) +
                              " exceeds node budget " + std::to_string(budget));
  return std::uint64_t(1) << n;
}

// Depth-first fold over row `depth`. Carries the running denominator product
// prod(a_i!) and the first argument; O_L multiplies the product by a0+1,
// O_R multiplies it by 2! and flips the sign.
void fold_terms(unsigned depth, int sign, unsigned a0, BigInt denom, ExactRational& acc) {
  if (depth == 0) {
    if (sign > 0)
      acc += ExactRational(1, denom);
    else
      acc -= ExactRational(1, denom);
    return;
  }
  fold_terms(depth - 1, sign, a0 + 1, denom * (a0 + 1), acc);
  fold_terms(depth - 1, -sign, 2, denom * 2, acc);
}

}  // namespace

ExactRational FormalTerm::value() const {
  BigInt denom(1);
  for (unsigned a : args) denom *= factorial_int(a);
  return ExactRational(sign, denom);
}

FormalTerm apply_ol(FormalTerm t) {
  t.args.front() += 1;
  return t;
}

FormalTerm apply_or(FormalTerm t) {
  t.sign = -t.sign;
  t.args.insert(t.args.begin(), 2);
  return t;
}

TreeRow tree_row(unsigned n, std::uint64_t node_budget) {
  row_size_checked(n, node_budget);
  TreeRow row{0, {FormalTerm{+1, {2}}}};
  for (unsigned d = 1; d <= n; ++d) {
    std::vector<FormalTerm> next;
    next.reserve(row.terms.size() * 2);
    for (const FormalTerm& t : row.terms) {
      next.push_back(apply_ol(t));
      next.push_back(apply_or(t));
    }
    row = TreeRow{d, std::move(next)};
  }
  return row;
}

ExactRational s_row_sum(unsigned n, std::uint64_t node_budget) {
  row_size_checked(n, node_budget);
  ExactRational acc(0);
  fold_terms(n, +1, 2, BigInt(2), acc);
  return acc;
}

int tree_sigma() {
  // Fixed by requiring sigma * 2! * S_1 = B_2 = 1/6; the literal operator
  // rules give S_1 = 1/3! - 1/(2! 2!) = -1/12.
  static const int sigma = [] {
    ExactRational s1 = s_row_sum(1);
    ExactRational b2 = bernoulli(2, Convention::Classical);
    if (ExactRational(2) * s1 == b2) return +1;
    if (ExactRational(-2) * s1 == b2) return -1;
    throw CalibrationMismatchError("tree_sigma: neither sign matches B_2");
  }();
  return sigma;
}

ExactRational bernoulli_via_tree(unsigned n, std::uint64_t node_budget) {
  if (n < 2) throw std::invalid_argument("bernoulli_via_tree: n must be >= 2");
  ExactRational r = ExactRational(tree_sigma() * factorial_int(n)) * s_row_sum(n - 1, node_budget);
  if (r != bernoulli(n, Convention::Classical))
    throw CalibrationMismatchError("bernoulli_via_tree: sigma*n!*S_{n-1} != B_n at n = " +
                                   std::to_string(n));
  return r;
}

ExactRational s_det(unsigned k) {
  if (k == 0) throw std::invalid_argument("s_det: k must be >= 1");
  // Last-row expansion for a lower-Hessenberg matrix with unit superdiagonal:
  // d_i = sum_{j=1}^{i} (-1)^{i-j} m_{i,j} d_{j-1}, d_0 = 1.
  std::vector<ExactRational> d(k + 1);
  d[0] = 1;
  for (unsigned i = 1; i <= k; ++i) {
    ExactRational acc(0);
    for (unsigned j = 1; j <= i; ++j) {
      ExactRational contrib = d[j - 1] / ExactRational(factorial_int(i - j + 2));
      if ((i - j) & 1u)
        acc -= contrib;
      else
        acc += contrib;
    }
    d[i] = acc;
  }
  return ((k & 1u) ? -d[k] : d[k]);
}

}  // namespace bernzeta
