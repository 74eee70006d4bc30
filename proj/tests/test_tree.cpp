#include <doctest.h>

#include "bernzeta/bernoulli.hpp"
#include "bernzeta/tree.hpp"

using namespace bernzeta;

TEST_CASE("row 0 and row 1") {
  TreeRow r0 = tree_row(0);
  REQUIRE(r0.terms.size() == 1);
  CHECK(r0.terms[0].sign == 1);
  CHECK(r0.terms[0].args == std::vector<unsigned>{2});
  CHECK(s_row_sum(0) == ExactRational(1, 2));

  TreeRow r1 = tree_row(1);
  REQUIRE(r1.terms.size() == 2);
  // left child increments the leading factorial argument
  CHECK(r1.terms[0].sign == 1);
  CHECK(r1.terms[0].args == std::vector<unsigned>{3});
  // right child prepends 2! and flips the sign
  CHECK(r1.terms[1].sign == -1);
  CHECK(r1.terms[1].args == std::vector<unsigned>{2, 2});
  CHECK(s_row_sum(1) == ExactRational(-1, 12));
}

TEST_CASE("row 2 terms in tree order, including the (3,2) vs (2,3) distinction") {
  TreeRow r = tree_row(2);
  REQUIRE(r.terms.size() == 4);
  CHECK(r.terms[0].args == std::vector<unsigned>{4});
  CHECK(r.terms[0].sign == 1);
  CHECK(r.terms[1].args == std::vector<unsigned>{2, 3});
  CHECK(r.terms[1].sign == -1);
  CHECK(r.terms[2].args == std::vector<unsigned>{3, 2});
  CHECK(r.terms[2].sign == -1);
  CHECK(r.terms[3].args == std::vector<unsigned>{2, 2, 2});
  CHECK(r.terms[3].sign == 1);
  // 1/4! - 1/(2!3!) - 1/(3!2!) + 1/(2!2!2!) = 1/24 - 2/12 + 1/8
  CHECK(s_row_sum(2) == ExactRational(0));
}

TEST_CASE("term value matches sign over product of factorials") {
  FormalTerm t{-1, {3, 2}};
  CHECK(t.value() == ExactRational(-1, 12));
}

TEST_CASE("streaming row sum equals materialized row sum") {
  for (unsigned n = 0; n <= 14; ++n) {
    TreeRow row = tree_row(n);
    ExactRational sum = 0;
    for (const auto& t : row.terms) sum += t.value();
    CHECK(sum == s_row_sum(n));
  }
}

TEST_CASE("every row-n term has factorial arguments summing to n + 2 plus count") {
  // each step adds exactly 1 to sum(args) and rows start at {2}:
  // sum(a_i) - len = n + 1
  for (unsigned n = 0; n <= 10; ++n) {
    for (const auto& t : tree_row(n).terms) {
      unsigned total = 0;
      for (unsigned a : t.args) total += a;
      CHECK(total - t.args.size() == n + 1);
    }
  }
}

TEST_CASE("calibration constant is a single global sign") {
  CHECK(tree_sigma() == -1);
}

TEST_CASE("row-sum bridge to Bernoulli numbers") {
  for (unsigned n = 2; n <= 18; ++n) {
    ExactRational lhs = ExactRational(tree_sigma()) * ExactRational(factorial_int(n)) *
                        s_row_sum(n - 1);
    CHECK(lhs == bernoulli(n));
    CHECK(bernoulli_via_tree(n) == bernoulli(n));
  }
  CHECK(bernoulli_via_tree(3) == ExactRational(0));
}

TEST_CASE("node budget is enforced") {
  CHECK_THROWS_AS(tree_row(30, 1000), BudgetExceededError);
  CHECK_THROWS_AS(s_row_sum(30, 1000), BudgetExceededError);
}

TEST_CASE("Hessenberg determinant bridge") {
  CHECK(s_det(1) == ExactRational(-1, 2));
  for (unsigned k = 1; k <= 15; ++k) {
    ExactRational lhs = ExactRational(factorial_int(k)) * s_det(k);
    CHECK(lhs == bernoulli(k));
  }
  CHECK(s_det(3) == ExactRational(0));
}
