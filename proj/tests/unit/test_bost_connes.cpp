#include "doctest.h"

#include <numeric>
#include "dessins/bost_connes.hpp"

using namespace dessins;

TEST_CASE("Q/Z elements reduce canonically") {
  CHECK(QZ(1, 2) == QZ(2, 4));
  CHECK(QZ(-1, 7) == QZ(6, 7));
  CHECK(QZ(5, 5) == QZ(0, 1));
  CHECK_THROWS_AS(QZ(1, 0), std::invalid_argument);
}

TEST_CASE("sigma and rho") {
  CHECK(bc_sigma(2, e_of(QZ(1, 2))) == e_of(QZ(0, 1)));
  GroupAlg r = bc_rho(2, e_of(QZ(1, 3)));
  GroupAlg expect = add(e_of(QZ(1, 6)), e_of(QZ(2, 3)));
  CHECK(r == expect);
  SUBCASE("sigma_n rho_n = n id") {
    for (long n : {2L, 3L, 5L})
      for (const QZ& q : {QZ(1, 5), QZ(2, 7), QZ(0, 1), QZ(3, 4)})
        CHECK(bc_sigma(n, bc_rho(n, e_of(q))) == scale(e_of(q), Rational(n)));
  }
}

TEST_CASE("Drinfeld-Ihara involution") {
  SUBCASE("level form k -> 1-k mod n") {
    CHECK(theta_level(5, 2) == 4);  // k=2 -> n-k+1 = 4 in 1..n labelling
    for (long n = 1; n <= 60; ++n)
      for (long k = 0; k < n; ++k) CHECK(theta_level(n, theta_level(n, k)) == k);
  }
  SUBCASE("fraction form") {
    CHECK(ihara_theta(QZ(2, 7)) == QZ(6, 7));
    CHECK(ihara_theta(e_of(QZ(2, 7))) == e_of(QZ(6, 7)));
  }
  SUBCASE("compatibility sigma_m theta_{nm} = theta_n sigma_m, nm <= 60") {
    for (long n = 1; n <= 60; ++n)
      for (long m = 1; n * m <= 60; ++m)
        for (long k = 0; k < n * m; ++k)
          CHECK(tower_sigma(m, n, theta_level(n * m, k)) ==
                theta_level(n, tower_sigma(m, n, k)));
  }
}

TEST_CASE("mGT groups") {
  CHECK(mgt_group(1).order() == 1);
  CHECK(mgt_group(2).order() == 2);
  CHECK(mgt_group(5).order() == 20);
  CHECK_THROWS_AS(mgt_group(13), GuardError);
  SUBCASE("order divisible by phi(n), and by n for n > 2") {
    auto phi = [](long n) {
      long p = 0;
      for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++p;
      return p;
    };
    for (long n = 1; n <= 12; ++n) {
      long ord = mgt_group(n).order();
      CHECK(ord % phi(n) == 0);
      if (n > 2) CHECK(ord % n == 0);
    }
  }
}
