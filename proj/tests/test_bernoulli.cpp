#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernzeta/bernoulli.hpp"

using namespace bernzeta;

TEST_CASE("recurrence reproduces the classical table") {
  CHECK(bernoulli(0) == ExactRational(1));
  CHECK(bernoulli(1) == ExactRational(-1, 2));
  CHECK(bernoulli(2) == ExactRational(1, 6));
  CHECK(bernoulli(4) == ExactRational(-1, 30));
  CHECK(bernoulli(6) == ExactRational(1, 42));
  CHECK(bernoulli(8) == ExactRational(-1, 30));
  CHECK(bernoulli(10) == ExactRational(5, 66));
  CHECK(bernoulli(12) == ExactRational(-691, 2730));
  CHECK(bernoulli(20) == ExactRational(-174611, 330));
}

TEST_CASE("redefined convention flips only B_1") {
  CHECK(bernoulli(1, Convention::Redefined) == ExactRational(1, 2));
  for (unsigned n = 0; n <= 30; ++n) {
    if (n == 1) continue;
    CHECK(bernoulli(n, Convention::Classical) == bernoulli(n, Convention::Redefined));
  }
}

TEST_CASE("odd-index values vanish beyond B_1") {
  for (unsigned n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == ExactRational(0));
}

TEST_CASE("nonzero even values alternate in sign from B_2 on") {
  int expected = 1;
  for (unsigned n = 2; n <= 40; n += 2) {
    ExactRational b = bernoulli(n);
    CHECK((expected > 0 ? b > 0 : b < 0));
    expected = -expected;
  }
}

TEST_CASE("power-series reciprocal agrees with the recurrence up to n = 40") {
  for (auto conv : {Convention::Classical, Convention::Redefined}) {
    auto coeffs = egf_coefficients(41, conv);
    REQUIRE(coeffs.size() == 41);
    for (unsigned n = 0; n <= 40; ++n) CHECK(coeffs[n] == bernoulli(n, conv));
  }
}

TEST_CASE("exact even zeta values") {
  // zeta(2) = pi^2/6 corresponds to a rational factor of 1/6
  CHECK(zeta_even_exact(1) == ExactRational(1, 6));
  CHECK(zeta_even_exact(2) == ExactRational(1, 90));
  CHECK(zeta_even_exact(3) == ExactRational(1, 945));
}

TEST_CASE("zeta at nonpositive integers") {
  CHECK(zeta_neg_int(0) == ExactRational(-1, 2));
  CHECK(zeta_neg_int(1) == ExactRational(-1, 12));
  CHECK(zeta_neg_int(2) == ExactRational(0));
  CHECK(zeta_neg_int(3) == ExactRational(1, 120));
  for (unsigned n = 2; n <= 20; n += 2) CHECK(zeta_neg_int(n) == ExactRational(0));
}

TEST_CASE("fraction formatting is always p/q") {
  CHECK(to_fraction_string(ExactRational(0)) == "0/1");
  CHECK(to_fraction_string(ExactRational(-1, 2)) == "-1/2");
  CHECK(to_fraction_string(ExactRational(3)) == "3/1");
}
