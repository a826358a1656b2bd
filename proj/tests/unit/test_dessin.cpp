#include "doctest.h"

#include "dessins/dessin.hpp"

using namespace dessins;

static Dessin star(int n) { return Dessin(perm_of_type({n}), identity_perm(n)); }

TEST_CASE("construction and validation") {
  CHECK_NOTHROW(from_permutations({0}, {0}));
  CHECK_THROWS_AS(from_permutations({0, 1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(from_permutations({1, 1}, {0, 1}), std::invalid_argument);
  CHECK(from_permutations({0}, {0}).degree() == 1);
  // star with one trivalent black vertex, three white leaves
  Dessin s3 = from_permutations({1, 2, 0}, identity_perm(3));
  auto r = ramification(s3);
  CHECK(r.m == 1);
  CHECK(r.n_white == 3);
}

TEST_CASE("ramification profiles and genus") {
  SUBCASE("star_n is planar") {
    for (int n = 1; n <= 6; ++n) {
      auto r = ramification(star(n));
      CHECK(r.m == 1);
      CHECK(r.n_white == n);
      CHECK(r.r == 1);
      CHECK(r.genus_total == 0);
      CHECK(r.euler_surface == 2);
    }
  }
  SUBCASE("sigma0 = sigma1 = 3-cycle has genus 1") {
    Dessin D({1, 2, 0}, {1, 2, 0});
    auto r = ramification(D);
    CHECK(r.m + r.n_white == 2);
    CHECK(r.r == 1);
    CHECK(r.euler_surface == 0);
    CHECK(r.genus_total == 1);
  }
  SUBCASE("single edge") {
    auto r = ramification(from_permutations({0}, {0}));
    CHECK(r.d == 1);
    CHECK(r.m == 1);
    CHECK(r.n_white == 1);
    CHECK(r.r == 1);
    CHECK(r.genus_total == 0);
  }
  SUBCASE("profile sums equal the degree") {
    Dessin D = parse_dessin("d=5; s0=(0 1 2)(3 4); s1=(1 3)");
    auto r = ramification(D);
    auto sum = [](const std::vector<int>& v) {
      int s = 0;
      for (int x : v) s += x;
      return s;
    };
    CHECK(sum(r.mu) == 5);
    CHECK(sum(r.nu) == 5);
    CHECK(sum(r.rho) == 5);
    CHECK(r.euler_surface == -r.d + r.m + r.n_white + r.r);
  }
}

TEST_CASE("canonical form is conjugation-invariant and idempotent") {
  Rng rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + static_cast<int>(rng.below(7));
    Dessin D(random_perm(d, rng), random_perm(d, rng));
    Perm g = random_perm(d, rng);
    Dessin Dg(conjugate(g, D.s0), conjugate(g, D.s1));
    CHECK(canonical_form(D) == canonical_form(Dg));
    CHECK(is_isomorphic(D, Dg));
    CHECK(canonical_form(canonical_form(D)) == canonical_form(D));
  }
  // star_3 vs path of 3 edges: different profiles
  Dessin path3 = parse_dessin("d=3; s0=(0 1); s1=(1 2)");
  CHECK_FALSE(is_isomorphic(star(3), path3));
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(from_permutations({0}, {0})) == 1);
  CHECK(automorphism_count(Dessin({1, 0}, {1, 0})) == 2);  // double edge
  for (int n = 2; n <= 6; ++n) CHECK(automorphism_count(star(n)) == n);
  // connected bound |Aut| <= d
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 1 + static_cast<int>(rng.below(6));
    Dessin D(random_perm(d, rng), random_perm(d, rng));
    if (is_connected(D)) CHECK(automorphism_count(D) <= d);
  }
}

TEST_CASE("components and disjoint union") {
  Dessin e({0}, {0});
  Dessin two = disjoint_union(e, star(3));
  CHECK(component_edge_sets(two).size() == 2);
  auto comps = components(two);
  CHECK(comps.size() == 2);
  auto ra = ramification(two);
  CHECK(ra.d == 4);
  CHECK(ra.b0 == 2);
  CHECK(ra.m == 2);
  // additivity of d, m, n, r, b0 under disjoint union
  auto r1 = ramification(e), r2 = ramification(star(3));
  CHECK(ra.d == r1.d + r2.d);
  CHECK(ra.m == r1.m + r2.m);
  CHECK(ra.n_white == r1.n_white + r2.n_white);
  CHECK(ra.r == r1.r + r2.r);
}

TEST_CASE("clean and regular predicates") {
  CHECK_FALSE(is_clean(star(3)));
  CHECK(is_clean(parse_dessin("d=4; s0=(0 1 2 3); s1=(0 1)(2 3)")));
  CHECK(is_regular(from_permutations({0}, {0})));
  CHECK(is_regular(star(3)));  // |Aut| = 3 = d
  CHECK_FALSE(is_regular(parse_dessin("d=3; s0=(0 1); s1=(1 2)")));
}

TEST_CASE("fibered product") {
  SUBCASE("star_a x star_b") {
    auto fp = fibered_product(star(2), star(3));
    CHECK(fp.ram.d == 6);
    CHECK(fp.ram.m == 1);
    CHECK(fp.ram.n_white == 6);
    CHECK(static_cast<int>(fp.graph.edges.size()) == 6);
  }
  SUBCASE("single edge is identity-like") {
    Dessin D = parse_dessin("d=3; s0=(0 1 2); s1=(1 2)");
    auto fp = fibered_product(D, from_permutations({0}, {0}));
    auto r = ramification(D);
    CHECK(fp.ram.d == r.d);
    CHECK(fp.ram.m == r.m);
    CHECK(fp.ram.n_white == r.n_white);
    CHECK(fp.ram.mu == r.mu);
  }
  SUBCASE("profiles multiply entrywise") {
    Dessin a = parse_dessin("d=3; s0=(0 1); s1=()");   // mu = (2,1)
    Dessin b = parse_dessin("d=3; s0=(0 1 2); s1=()"); // mu = (3)
    auto fp = fibered_product(a, b);
    CHECK(fp.ram.mu == std::vector<int>{6, 3});
  }
}

TEST_CASE("text format round trip") {
  for (const char* t : {"d=2; s0=(0 1); s1=(0 1)", "d=3; s0=(0 1 2); s1=()",
                        "d=5; s0=(0 1 2)(3 4); s1=(1 3)"}) {
    Dessin D = parse_dessin(t);
    CHECK(parse_dessin(to_text(D)) == D);
  }
  CHECK_THROWS_AS(parse_dessin("d=2; s0=(0 3); s1=()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dessin("s0=(0 1)"), std::invalid_argument);
}
