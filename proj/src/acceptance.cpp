#include "dessins/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "dessins/bost_connes.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/graph_poly.hpp"
#include "dessins/hopf.hpp"
#include "dessins/lifting.hpp"
#include "dessins/omega_theta.hpp"
#include "dessins/qsm.hpp"
#include "dessins/quasi_hopf.hpp"
#include "dessins/json_io.hpp"
#include "dessins/rota_baxter.hpp"

namespace dessins {

namespace {

Quad qabs(Quad x) { return x < 0 ? Quad(-x) : x; }

Dessin star_n(int n) { return Dessin(perm_of_type({n}), identity_perm(n)); }

Dessin path_n(int n) {
  Perm s0 = identity_perm(n), s1 = identity_perm(n);
  for (int v = 1; v < n; ++v) {
    if (v % 2 == 1) std::swap(s1[v - 1], s1[v]);
    else std::swap(s0[v - 1], s0[v]);
  }
  return Dessin(s0, s1);
}

std::vector<Dessin> four_edge_fixtures() {
  return {star_n(4), path_n(4), Dessin({1, 0, 3, 2}, {3, 2, 1, 0}),
          Dessin({1, 2, 3, 0}, {1, 2, 3, 0}),
          parse_dessin("d=4; s0=(0 1 2); s1=(2 3)")};
}

std::vector<Dessin> connected_up_to(int dmax) {
  std::vector<Dessin> out;
  for (int d = 1; d <= dmax; ++d)
    for (const auto& D : enumerate_dessins(d))
      if (is_connected(D)) out.push_back(D);
  return out;
}

using Check = std::function<void(CriterionResult&, std::uint64_t)>;

void expect(CriterionResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.pass = false;
    r.details.push_back("FAILED: " + what);
  }
}

// 1 -------------------------------------------------------------------------
void crit_tree_counts(CriterionResult& r, std::uint64_t) {
  for (int d = 1; d <= 6; ++d) {
    expect(r, count_labeled_bipartite_trees(d) == oracle_labeled_trees_total(d),
           "2(d+1)^{d-1} vs exhaustive labelled trees at d=" + std::to_string(d));
    for (int m = 1; m <= d; ++m)
      expect(r,
             count_labeled_bipartite_trees(d, m) == oracle_black_rooted_bipartite_trees(d, m),
             "m^{d+1-m}(d+1-m)^{m-1} vs black-rooted oracle at d=" + std::to_string(d) +
                 ", m=" + std::to_string(m));
  }
  r.details.push_back("exhaustive enumeration matches both closed forms, d <= 6");
}

// 2 -------------------------------------------------------------------------
void crit_ncount(CriterionResult& r, std::uint64_t) {
  expect(r, count_single_cycle_belyi(3) == 1, "N(3) = 1");
  expect(r, count_single_cycle_belyi(6) == 4, "N(6) = 4");
  expect(r, count_single_cycle_belyi(7) == 6, "N(7) = 6");
  long prev = count_single_cycle_belyi(3);
  for (long d = 3; d <= 1000; ++d) {
    long v = 0;
    try {
      v = count_single_cycle_belyi(d);
    } catch (const std::exception& e) {
      expect(r, false, std::string("integrality at d=") + std::to_string(d));
      return;
    }
    expect(r, v >= prev, "monotone at d=" + std::to_string(d));
    prev = v;
  }
  r.details.push_back("N(d) integral and nondecreasing for 3 <= d <= 1000");
}

// 3 -------------------------------------------------------------------------
void crit_coassoc(CriterionResult& r, std::uint64_t) {
  HopfContext ctx;  // restricted subdessin class (the shipped default)
  int checked = 0;
  for (const auto& D : connected_up_to(3)) {
    auto rep = check_coassociative(ctx, D);
    expect(r, rep.ok, "coassociativity at " + to_text(D) + ": " + rep.counterexample);
    expect(r, check_counit(ctx, D), "counit at " + to_text(D));
    expect(r, check_antipode_convolution(ctx, D), "antipode convolution at " + to_text(D));
    ++checked;
  }
  for (const auto& D : four_edge_fixtures()) {
    auto rep = check_coassociative(ctx, D);
    expect(r, rep.ok, "coassociativity at 4-edge fixture " + to_text(D) + ": " +
                          rep.counterexample);
    expect(r, check_counit(ctx, D), "counit at " + to_text(D));
    expect(r, check_antipode_convolution(ctx, D), "antipode convolution at " + to_text(D));
    ++checked;
  }
  std::ostringstream os;
  os << "coassociativity, counit and antipode identities exact on " << checked
     << " dessins (restricted subdessin class, see README)";
  r.details.push_back(os.str());

  // the literal class keeps every proper edge subset; its coproduct is not
  // coassociative, already at two edges -- recorded as a finding
  HopfContext literal(SubdessinPolicy::kPaper);
  auto rep = check_coassociative(literal, path_n(2));
  if (!rep.ok)
    r.findings.push_back(
        "literal subdessin class: coassociativity fails at the 2-edge path; "
        "first differing term: " + rep.counterexample);
  else
    expect(r, false, "expected the literal-class coassociativity obstruction");
}

// 4 -------------------------------------------------------------------------
void crit_grading(CriterionResult& r, std::uint64_t) {
  HopfContext paper(SubdessinPolicy::kPaper);
  HopfContext restricted;
  for (const auto& D : connected_up_to(4)) {
    long base[3] = {grade(Monomial::from_dessin(D), Grading::kLoops),
                    grade(Monomial::from_dessin(D), Grading::kEdges),
                    grade(Monomial::from_dessin(D), Grading::kVertices)};
    for (HopfContext* ctx : {&paper, &restricted}) {
      for (const auto& [lr, c] : ctx->coproduct(canonical_form(D))) {
        if (lr.first == Monomial::one() || lr.second == Monomial::one()) continue;
        expect(r,
               grade(lr.first, Grading::kLoops) + grade(lr.second, Grading::kLoops) == base[0] &&
                   grade(lr.first, Grading::kEdges) + grade(lr.second, Grading::kEdges) ==
                       base[1] &&
                   grade(lr.first, Grading::kVertices) + grade(lr.second, Grading::kVertices) ==
                       base[2],
               "grading additivity on a coproduct term of " + to_text(D));
      }
    }
    // quotient count identities on every subdessin of the literal class
    auto rD = ramification(D);
    for (const auto& delta : enumerate_subdessins(D, SubdessinPolicy::kPaper)) {
      auto rs = ramification(restrict_to_edges(D, delta.edges));
      for (const auto& ch : all_quotient_choices(boundary_components(D, delta))) {
        auto rq = ramification(quotient(D, delta, ch));
        expect(r,
               rD.m + rD.n_white == rs.m + rs.n_white + rq.m + rq.n_white - 2 * rs.b0,
               "#V identity at " + to_text(D));
        expect(r, rD.d == rs.d + rq.d - rs.b0, "#E identity at " + to_text(D));
      }
    }
  }
  r.details.push_back("grading additivity and quotient count identities exact, d <= 4");
}

// 5 -------------------------------------------------------------------------
void crit_tutte(CriterionResult& r, std::uint64_t) {
  int n = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& D : enumerate_dessins(d)) {
      expect(r, tutte(D) == tutte_deletion_contraction(D),
             "state sum vs deletion-contraction at " + to_text(D));
      MultiPoly B = brt(D);
      MultiPoly collapsed;
      for (const auto& [k, c] : B.terms()) collapsed.add({k[0], k[1], 0}, c);
      expect(r, collapsed == tutte(D), "BR(x,y,1) = Tutte at " + to_text(D));
      expect(r, B.max_degree_z() == 2 * ramification(D).genus_total,
             "z-degree = 2 genus at " + to_text(D));
      ++n;
    }
  r.details.push_back("exact on all " + std::to_string(n) + " classes with d <= 5");
}

// 6 -------------------------------------------------------------------------
void crit_birkhoff(CriterionResult& r, std::uint64_t seed) {
  for (auto kind : {RBContextKind::kLaurentPolar, RBContextKind::kPiBasis}) {
    RBContext ctx(kind);
    Rng rng(seed);
    for (int i = 0; i < 200; ++i) {
      RBValue x = ctx.random_element(rng), y = ctx.random_element(rng);
      expect(r, ctx.relation_holds(x, y), "Rota-Baxter relation (random pair)");
    }
    HopfContext hopf;
    std::map<Dessin, RBValue> values;
    Rng rng2(seed + 1);
    Character<RBValue> phi(
        [&](const Dessin& D) {
          Dessin c = canonical_form(D);
          auto it = values.find(c);
          if (it == values.end()) it = values.emplace(c, ctx.random_element(rng2)).first;
          return it->second;
        },
        ctx.one());
    for (int d = 1; d <= 3; ++d)
      for (const auto& D : enumerate_dessins(d))
        expect(r, birkhoff_reconstructs(phi, ctx, hopf, D),
               "Birkhoff reconstruction at " + to_text(D));
  }
  // Prop. newGalois recursions match the generic factorization term-for-term
  HopfContext hopf;
  RBContext polar(RBContextKind::kLaurentPolar), pib(RBContextKind::kPiBasis);
  auto jc = jones_character();
  auto mc = martin_character();
  std::vector<Dessin> gens = connected_up_to(3);
  for (const auto& D : four_edge_fixtures()) gens.push_back(D);
  for (const auto& D : gens) {
    auto jf = birkhoff(jc, polar, hopf, {D});
    auto rj = refined_invariant(D, RefinedMode::kJones, hopf);
    expect(r, jf.minus.at(canonical_form(D)) == RBValue(rj.jones_minus),
           "jones refined == generic phi_- at " + to_text(D));
    expect(r, jf.plus.at(canonical_form(D)) == RBValue(rj.jones_plus),
           "jones refined == generic phi_+ at " + to_text(D));
    auto mf = birkhoff(mc, pib, hopf, {D});
    auto rm = refined_invariant(D, RefinedMode::kMartin, hopf);
    expect(r, mf.minus.at(canonical_form(D)) == RBValue(rm.martin_minus),
           "martin refined == generic phi_- at " + to_text(D));
    expect(r, mf.plus.at(canonical_form(D)) == RBValue(rm.martin_plus),
           "martin refined == generic phi_+ at " + to_text(D));
  }
  r.details.push_back(
      "relation on 200 random pairs per context; reconstruction exact d <= 3; "
      "refined recursions match (with the sign repair noted in the README)");
}

// 7 -------------------------------------------------------------------------
void crit_compose(CriterionResult& r, std::uint64_t seed) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 5; ++d)
      expect(r, is_isomorphic(apply(scheme_power(n), star_n(d)), star_n(n * d)),
             "apply(power_" + std::to_string(n) + ", star_" + std::to_string(d) + ")");
  // catalog pairs: powers and their composites (the class fixing 0,1,infty)
  std::vector<LiftingScheme> catalog;
  for (long n = 2; n <= 5; ++n) catalog.push_back(scheme_power(n));
  catalog.push_back(scheme_compose(scheme_power(2), scheme_power(3)));
  for (const auto& s1 : catalog)
    for (const auto& s2 : catalog) {
      auto c = scheme_compose(s1, s2);
      expect(r, c.tuple() == tuple_compose(s1.tuple(), s2.tuple()),
             "automaton tuple vs tuple law");
      expect(r,
             mat_hom(c.tuple(), MatMode::kMat2) ==
                 mat_mul(mat_hom(s1.tuple(), MatMode::kMat2),
                         mat_hom(s2.tuple(), MatMode::kMat2)),
             "mat2 homomorphism on catalog pair");
      expect(r, mat_det2(mat_hom(c.tuple(), MatMode::kMat2)) == c.tuple().d,
             "det(mat2) = degree");
    }
  Rng rng(seed);
  auto words = interior_words_up_to(12);
  int tested = 0;
  for (const auto& w : words) {
    LiftingScheme s = word_to_scheme(w);
    for (int trial = 0; trial < 3; ++trial) {
      long dmax = 400 / std::max(1, s.sheets);
      if (dmax < 1) continue;
      int d = 1 + static_cast<int>(rng.below(std::min<long>(dmax, 6)));
      Dessin D(random_perm(d, rng), random_perm(d, rng));
      expect(r, apply(s, D, 400).degree() == s.sheets * d, "edge-count multiplicativity");
      ++tested;
    }
  }
  r.details.push_back("power/star lifts, mat2 law, det = degree, " +
                      std::to_string(tested) + " random word/dessin products");
}

// 8 -------------------------------------------------------------------------
void crit_partition(CriterionResult& r, std::uint64_t) {
  auto s = partition_closed(FreeProductSystem::kS, Quad(2), 100000);
  expect(r, s.discrepancy <= s.direct.tail_bound,
         "S system at beta=2: |direct - closed| within tail bound");
  r.details.push_back("S beta=2: closed " + quad_str(s.closed_form, 8) + ", direct " +
                      quad_str(s.direct.value, 8) + ", |diff| " +
                      quad_str(s.discrepancy, 4) + " <= bound " +
                      quad_str(s.direct.tail_bound, 4));
  auto w = sum_two_omega(Quad(3), 1000000);
  Quad target = zeta(Quad(3)).value * zeta(Quad(3)).value / zeta(Quad(6)).value;
  expect(r, qabs(w.value - target) < Quad("1e-6"),
         "sum 2^omega(n) n^{-3} vs zeta(3)^2/zeta(6) < 1e-6");
  auto u = partition_closed(FreeProductSystem::kUpsilon, Quad(3), 100000);
  expect(r, u.discrepancy <= u.direct.tail_bound,
         "Upsilon at beta=3 within tail bound");
  bool raised = false;
  try {
    partition_closed(FreeProductSystem::kUpsilon, Quad(2));
  } catch (const DivergenceError&) {
    raised = true;
  }
  expect(r, raised, "Upsilon at beta=2 raises the divergence error");
}

// 9 -------------------------------------------------------------------------
void crit_gibbs(CriterionResult& r, std::uint64_t) {
  auto rep = gibbs_N(PuiseuxPoly::parse("t + t^2"), Quad("0.3"), Quad("2.5"));
  expect(r, rep.gap < Quad("1e-8"), "N-mode double sum vs polylog closed form < 1e-8");
  r.details.push_back("N-mode gap " + quad_str(rep.gap, 4));
  auto q = gibbs_Q(PuiseuxPoly::parse("t"), Quad("0.5"), Quad(3), 400);
  r.details.push_back("Q-mode report (no assertion): direct " + quad_str(q.direct, 10) +
                      ", closed " + quad_str(q.closed, 10) + ", gap " +
                      quad_str(q.gap, 4));
}

// 10 ------------------------------------------------------------------------
void crit_extended(CriterionResult& r, std::uint64_t) {
  auto census = eigenvalue_census(4, 4, 3, 3);
  expect(r, census.consistent, "census coincidences all within the allowed cases");
  expect(r, census.zero_eigenvalue_groups == 1, "unique ground eigenvalue");
  size_t nontrivial = 0;
  for (const auto& g : census.groups)
    if (g.size() > 1) ++nontrivial;
  std::ostringstream os;
  os << census.groups.size() << " eigenvalue groups in the window, " << nontrivial
     << " with a genuine coincidence; the boundary cases of the multiplicity "
        "formula do not occur here";
  r.details.push_back(os.str());
  auto z = z_extended(Quad(2), 8, 40);
  Quad partial = 0;
  for (size_t i = 0; i < z.block_values.size(); ++i) {
    Quad prev = partial;
    partial += z.block_values[i];
    expect(r, partial >= prev, "monotone partial sums");
    expect(r, z.block_values[i] <= z.block_bounds[i], "block within its majorant");
    if (i >= 1)
      expect(r, z.block_bounds[i] < z.block_bounds[i - 1], "shrinking block tails");
  }
  r.details.push_back("Z(beta=2) truncation " + quad_str(z.total.value, 10) +
                      " with remainder bound " + quad_str(z.total.tail_bound, 4));
}

// 11 ------------------------------------------------------------------------
void crit_kms(CriterionResult& r, std::uint64_t) {
  for (const Rational& lam : {Rational(1, 2), Rational(1, 3)}) {
    Quad lamq = Quad(numerator(lam).str()) / Quad(denominator(lam).str());
    for (int d = 1; d <= 3; ++d)
      for (const auto& D : enumerate_dessins(d)) {
        Quad target = quad_pow(lamq, Quad(D.degree()));
        Quad prev = -1;
        for (double beta : {5.0, 10.0, 20.0}) {
          Quad diff = qabs(kms_state(D, lam, Quad(beta), 8).value - target);
          if (prev >= 0)
            expect(r, diff < prev,
                   "strictly decreasing distance to phi(D) at " + to_text(D));
          prev = diff;
        }
      }
  }
  r.details.push_back(
      "psi_{beta,phi}(D) -> phi(D) strictly in beta = 5, 10, 20 for lambda = 1/2, 1/3");
}

// 12 ------------------------------------------------------------------------
void crit_bc(CriterionResult& r, std::uint64_t) {
  for (long n = 1; n <= 60; ++n)
    for (long k = 0; k < n; ++k)
      expect(r, theta_level(n, theta_level(n, k)) == k, "theta^2 = id");
  for (long n = 1; n <= 60; ++n)
    for (long m = 1; n * m <= 60; ++m)
      for (long k = 0; k < n * m; ++k)
        expect(r,
               tower_sigma(m, n, theta_level(n * m, k)) ==
                   theta_level(n, tower_sigma(m, n, k)),
               "sigma_m theta_{nm} = theta_n sigma_m");
  expect(r, mgt_group(2).order() == 2, "mGT_2 order 2");
  expect(r, mgt_group(5).order() == 20, "mGT_5 order 20");
  std::ostringstream orders;
  for (long n = 1; n <= 12; ++n) orders << (n > 1 ? ", " : "") << mgt_group(n).order();
  r.details.push_back("mGT orders for n = 1..12: " + orders.str());
  for (long n : {2L, 3L, 5L, 7L})
    for (const QZ& q : {QZ(1, 5), QZ(2, 7), QZ(0, 1), QZ(3, 4), QZ(5, 9)})
      expect(r, bc_sigma(n, bc_rho(n, e_of(q))) == scale(e_of(q), Rational(n)),
             "sigma_n rho_n = n id");
}

// 13 ------------------------------------------------------------------------
void crit_double(CriterionResult& r, std::uint64_t) {
  for (int m = 2; m <= 6; ++m)
    for (int a = 0; a < m; ++a)
      expect(r, cocycle_identity_holds(m, a),
             "3-cocycle identity at m=" + std::to_string(m) + ", a=" + std::to_string(a));
  for (int m = 2; m <= 6; ++m) {
    auto rep = verify_axioms(m, 0);
    expect(r, rep.pentagon && rep.quasi_assoc && rep.counit && rep.r_conjugation,
           "untwisted double axioms at m=" + std::to_string(m));
  }
  // twisted doubles: exact reports, recorded as findings where they fail
  for (int m = 2; m <= 4; ++m)
    for (int a = 1; a < m; ++a) {
      auto rep = verify_axioms(m, a);
      std::ostringstream os;
      os << "twisted double m=" << m << ", a=" << a << ": pentagon="
         << rep.pentagon << " quasi_assoc=" << rep.quasi_assoc << " counit="
         << rep.counit << " r_conj=" << rep.r_conjugation;
      if (rep.pentagon && rep.quasi_assoc && rep.counit && rep.r_conjugation)
        r.details.push_back(os.str());
      else
        r.findings.push_back(os.str() + " (conventions for a != 0 vary; recorded)");
    }
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    auto rep = system_maps(n, m);
    expect(r, rep.r_transport_exact,
           "rho transport R_" + std::to_string(m) + " -> R_" + std::to_string(n * m));
    expect(r, rep.pullback_is_cocycle, "pullback cocycle identity");
  }
}

// 14 ------------------------------------------------------------------------
void crit_divergence(CriterionResult& r, std::uint64_t) {
  for (double beta : {5.0, 10.0, 50.0}) {
    auto rep = partition_enumerated(EnumeratedMode::kDegreeAllTrees, Quad(beta));
    expect(r, rep.divergent,
           "term growth flags divergence at beta=" + std::to_string(beta));
    r.details.push_back("beta=" + std::to_string(beta) + ": " + rep.note);
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& only, std::uint64_t seed) {
  struct Entry {
    int id;
    std::string name;
    std::string block;
    Check fn;
  };
  std::vector<Entry> entries = {
      {1, "tree counts vs exhaustive enumeration", "enum", crit_tree_counts},
      {2, "N(d) integrality and spot values", "enum", crit_ncount},
      {3, "Hopf coassociativity, counit, antipode", "hopf", crit_coassoc},
      {4, "grading additivity and quotient counts", "hopf", crit_grading},
      {5, "Tutte and Bollobas-Riordan identities", "poly", crit_tutte},
      {6, "Rota-Baxter relation and Birkhoff factorization", "birkhoff", crit_birkhoff},
      {7, "lifting-scheme composition laws", "compose", crit_compose},
      {8, "free-product partition functions", "qsm", crit_partition},
      {9, "Gibbs states, N and Q modes", "qsm", crit_gibbs},
      {10, "extended Omega_theta system", "qsm", crit_extended},
      {11, "KMS zero-temperature limits", "qsm", crit_kms},
      {12, "Bost-Connes tower and mGT", "bc", crit_bc},
      {13, "twisted doubles and direct system", "double", crit_double},
      {14, "divergence reproduction", "qsm", crit_divergence},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    if (!only.empty() && e.block != only && std::to_string(e.id) != only) continue;
    CriterionResult res;
    res.id = e.id;
    res.name = e.name;
    res.pass = true;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(res, seed);
    } catch (const std::exception& ex) {
      res.pass = false;
      res.details.push_back(std::string("exception: ") + ex.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace dessins
