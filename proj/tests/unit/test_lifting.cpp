#include "doctest.h"

#include "dessins/enumerate.hpp"
#include "dessins/lifting.hpp"

using namespace dessins;

namespace {
Dessin star_n(int n) { return Dessin(perm_of_type({n}), identity_perm(n)); }
}

TEST_CASE("free words") {
  CHECK(FreeWord::parse("aA").empty());
  CHECK(FreeWord::parse("abBA").empty());
  CHECK((FreeWord::parse("ab") * FreeWord::parse("Ba")) == FreeWord::parse("aa"));
  CHECK(FreeWord::parse("ab").inverse() == FreeWord::parse("BA"));
  Dessin D({1, 2, 0}, {1, 0, 2});
  CHECK(FreeWord::parse("a").act(D, 0) == 1);
  CHECK(FreeWord::parse("ab").act(D, 0) == 0);  // s1(s0(0)) = s1(1) = 0
}

TEST_CASE("power and involution schemes") {
  CHECK(scheme_power(1).sheets == 1);
  CHECK(scheme_power(3).tuple() == RamTuple{3, 1, 3, 1});
  CHECK(scheme_valid(scheme_power(5)));
  CHECK(scheme_valid(scheme_involution()));
  CHECK(scheme_involution().tuple() == RamTuple{1, 1, 1, 1});
  SUBCASE("involution twice is the identity scheme") {
    auto ff = scheme_compose(scheme_involution(), scheme_involution());
    CHECK(scheme_isomorphic(ff, scheme_identity()));
  }
  SUBCASE("apply(power_n, star_d) = star_{nd}") {
    for (int n = 1; n <= 4; ++n)
      for (int d = 1; d <= 4; ++d)
        CHECK(is_isomorphic(apply(scheme_power(n), star_n(d)), star_n(n * d)));
  }
  SUBCASE("apply(identity) is the identity") {
    Dessin D = parse_dessin("d=4; s0=(0 1 2); s1=(2 3)");
    CHECK(is_isomorphic(apply(scheme_identity(), D), D));
  }
  SUBCASE("apply(involution) swaps colours") {
    Dessin D = parse_dessin("d=4; s0=(0 1 2); s1=(2 3)");
    Dessin swapped(D.s1, D.s0);
    CHECK(is_isomorphic(apply(scheme_involution(), D), swapped));
  }
}

TEST_CASE("composition") {
  SUBCASE("power(n) o power(m) = power(nm) as automata") {
    for (long a = 1; a <= 4; ++a)
      for (long b = 1; b <= 4; ++b)
        CHECK(scheme_isomorphic(scheme_compose(scheme_power(a), scheme_power(b)),
                                scheme_power(a * b)));
  }
  SUBCASE("apply factors through composition") {
    Rng rng(11);
    std::vector<LiftingScheme> catalog = {scheme_power(2), scheme_power(3),
                                          scheme_involution(),
                                          word_to_scheme(parse_word("m2 F m2"))};
    for (const auto& s1 : catalog)
      for (const auto& s2 : catalog)
        for (int d = 1; d <= 3; ++d) {
          Dessin D(random_perm(d, rng), random_perm(d, rng));
          CHECK(is_isomorphic(apply(scheme_compose(s1, s2), D), apply(s2, apply(s1, D))));
        }
  }
  SUBCASE("tuple law matches the automaton on power pairs") {
    for (long a = 2; a <= 4; ++a)
      for (long b = 2; b <= 4; ++b) {
        auto c = scheme_compose(scheme_power(a), scheme_power(b));
        CHECK(c.tuple() == tuple_compose(scheme_power(a).tuple(), scheme_power(b).tuple()));
      }
  }
  SUBCASE("single-cycle relation 2d+1 = m+n+r is closed under composition") {
    std::vector<RamTuple> single_cycle = {{3, 1, 3, 3}, {3, 2, 2, 3}, {4, 2, 3, 4}, {5, 3, 4, 4}};
    for (const auto& t : single_cycle) CHECK(2 * t.d + 1 == t.m + t.n + t.r);
    for (const auto& a : single_cycle)
      for (const auto& b : single_cycle) {
        RamTuple c = tuple_compose(a, b);
        CHECK(2 * c.d + 1 == c.m + c.n + c.r);
      }
  }
}

TEST_CASE("matrix homomorphisms") {
  RamTuple t{6, 3, 4, 2};
  auto m2 = mat_hom(t, MatMode::kMat2);
  CHECK(m2 == IntMatrix{{6, 2}, {0, 1}});
  CHECK(mat_det2(m2) == 6);
  CHECK(mat_hom(t, MatMode::kMat2N) == IntMatrix{{6, 3}, {0, 1}});
  CHECK(mat_hom(t, MatMode::kMat3)[0] == std::vector<long>{6, 2, 3});

  SUBCASE("mat2 is a homomorphism for the tuple composition") {
    std::vector<RamTuple> tuples = {{2, 1, 2, 1}, {3, 2, 2, 2}, {4, 1, 4, 1}, {5, 2, 3, 3}};
    for (const auto& a : tuples)
      for (const auto& b : tuples) {
        CHECK(mat_hom(tuple_compose(a, b), MatMode::kMat2) ==
              mat_mul(mat_hom(a, MatMode::kMat2), mat_hom(b, MatMode::kMat2)));
        CHECK(mat_det2(mat_hom(tuple_compose(a, b), MatMode::kMat2)) == a.d * b.d);
      }
  }
}

TEST_CASE("degree multiplicativity of apply") {
  Rng rng(31);
  auto words = interior_words_up_to(6);
  for (const auto& w : words) {
    LiftingScheme s = word_to_scheme(w);
    for (int trial = 0; trial < 3; ++trial) {
      int d = 1 + static_cast<int>(rng.below(4));
      Dessin D(random_perm(d, rng), random_perm(d, rng));
      CHECK(apply(s, D).degree() == s.sheets * d);
    }
  }
  CHECK_THROWS_AS(apply(scheme_power(5000), star_n(3)), GuardError);
}

TEST_CASE("semigroup words") {
  CHECK(n_of_r(Rational(4, 3)) == 12);
  CHECK(n_of_r(Rational(1)) == 1);
  CHECK_THROWS_AS(n_of_r(Rational(-2)), std::invalid_argument);
  CHECK(word_weight_degree(parse_word("F m2 F m3")) == 6);
  CHECK(parse_word("m2 m3").factors == std::vector<Rational>{Rational(6)});
  CHECK(parse_word("F F").is_identity());

  SUBCASE("interior word counts are the ordered factorization numbers") {
    auto words = interior_words_up_to(8);
    std::map<long, int> by_degree;
    for (const auto& w : words) by_degree[static_cast<long>(word_weight_degree(w))]++;
    CHECK(by_degree[1] == 1);
    CHECK(by_degree[4] == 2);
    CHECK(by_degree[8] == 4);
    CHECK(by_degree[6] == 3);
  }

  SUBCASE("word schemes compose outermost-last") {
    // m2 F m3 means z -> (1 - z^2)^3 up to normalization: degree 6
    LiftingScheme s = word_to_scheme(parse_word("m2 F m3"));
    CHECK(s.sheets == 6);
    CHECK(scheme_valid(s));
    // the same word applied step by step
    Dessin D = star_n(2);
    Dessin step = apply(scheme_power(2), D);
    step = apply(scheme_involution(), step);
    step = apply(scheme_power(3), step);
    CHECK(is_isomorphic(apply(s, D), step));
  }
}

TEST_CASE("transport: profile data of apply depends only on tuple and profiles") {
  // group dessins of equal (mu, nu, rho) profiles; the composite profile
  // data must agree within each group for catalog words
  auto words = interior_words_up_to(4);
  std::map<std::vector<std::vector<int>>, std::vector<Dessin>> groups;
  for (int d = 1; d <= 3; ++d)
    for (const auto& D : enumerate_dessins(d)) {
      auto r = ramification(D);
      groups[{r.mu, r.nu, r.rho, {r.b0}}].push_back(D);
    }
  for (const auto& w : words) {
    LiftingScheme s = word_to_scheme(w);
    for (const auto& [key, ds] : groups) {
      if (ds.size() < 2) continue;
      auto first = ramification(apply(s, ds[0]));
      for (size_t i = 1; i < ds.size(); ++i) {
        auto r = ramification(apply(s, ds[i]));
        CHECK(r.m == first.m);
        CHECK(r.n_white == first.n_white);
        CHECK(r.r == first.r);
        CHECK(r.d == first.d);
      }
    }
  }
}
