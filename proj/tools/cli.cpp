// Batch front-end: parse dessins, run each module's computations, emit
// JSON/CSV/text reports, and drive the verification suite.
//
// Exit codes: 0 success, 1 usage/parse error, 2 guard or resource error,
// 3 verification finding (an identity check that failed).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "dessins/acceptance.hpp"
#include "dessins/bost_connes.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/json_io.hpp"
#include "dessins/omega_theta.hpp"

namespace ds = dessins;
using ds::Quad;

namespace {

ds::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  ds::Json j;
  in >> j;
  return j;
}

ds::SubdessinPolicy parse_policy(const std::string& s) {
  if (s == "paper") return ds::SubdessinPolicy::kPaper;
  if (s == "min2") return ds::SubdessinPolicy::kMin2;
  if (s == "min2co2" || s == "default") return ds::SubdessinPolicy::kMin2Co2;
  throw std::invalid_argument("subdessin class must be paper, min2 or min2co2");
}

ds::Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return ds::Rational(ds::Int(s));
  return ds::Rational(ds::Int(s.substr(0, slash)), ds::Int(s.substr(slash + 1)));
}

struct Output {
  std::string format = "json";
  void emit(const ds::Json& j, const std::string& text_form = "") const {
    if (format == "text" && !text_form.empty()) std::cout << text_form << "\n";
    else std::cout << j.dump(2) << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dessins: combinatorics, Hopf-algebra invariants and partition "
               "functions of dessins d'enfant"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "output format: json, text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string dessin_text, dessin2_text, orbits_path, scheme_path, word_text;
  std::string policy_name = "min2co2", h_text = "t";
  double beta = 2, tau = 0.5, tol = 1e-10;
  long n_arg = 2, m_arg = 2, d_arg = 3, cutoff = 100000, word_cutoff = 8;
  int a_arg = 0;
  std::string lambda_text = "1/2";
  std::string mode;
  std::uint64_t seed = 20200505;
  std::string only;
  bool connected_only = false, csv = false, literal_three = false;

  // ---- dessin ----------------------------------------------------------------
  auto* dessin = app.add_subcommand("dessin", "parse and basic invariants");
  dessin->add_option("--dessin", dessin_text, "dessin text: d=<n>; s0=<cycles>; s1=<cycles>")
      ->required();
  dessin->add_option("--other", dessin2_text, "second dessin (iso / union / product)");
  std::string dessin_op = "ram";
  dessin->add_option("--op", dessin_op,
                     "ram | canonical | aut | clean | regular | iso | union | fibered")
      ->check(CLI::IsMember({"ram", "canonical", "aut", "clean", "regular", "iso",
                             "union", "fibered"}));

  // ---- enum ------------------------------------------------------------------
  auto* enm = app.add_subcommand("enum", "enumeration and counting");
  std::string enum_op = "dessins";
  enm->add_option("--op", enum_op, "dessins | trees | ncount | coverings")
      ->check(CLI::IsMember({"dessins", "trees", "ncount", "coverings"}));
  enm->add_option("--d", d_arg, "degree");
  enm->add_option("--m", m_arg, "black vertex count (trees)");
  std::vector<int> mu_arg, nu_arg;
  int genus_arg = 0;
  enm->add_option("--mu", mu_arg, "profile over 0 (coverings)");
  enm->add_option("--nu", nu_arg, "profile over 1 (coverings)");
  enm->add_option("--g", genus_arg, "genus (coverings)");
  enm->add_flag("--connected", connected_only, "restrict to connected dessins");
  enm->add_flag("--csv", csv, "emit d,m,count CSV (trees)");

  // ---- hopf ------------------------------------------------------------------
  auto* hopf = app.add_subcommand("hopf", "coproduct, antipode, gradings");
  std::string hopf_op = "coproduct";
  hopf->add_option("--op", hopf_op,
                   "coproduct | antipode | grade | subdessins | check-coassoc | balanced")
      ->check(CLI::IsMember({"coproduct", "antipode", "grade", "subdessins",
                             "check-coassoc", "balanced"}));
  hopf->add_option("--dessin", dessin_text)->required();
  hopf->add_option("--class", policy_name, "subdessin class: paper | min2 | min2co2");
  hopf->add_option("--orbits", orbits_path, "orbit table JSON (balanced mode)");

  // ---- poly ------------------------------------------------------------------
  auto* poly = app.add_subcommand("poly", "Tutte / BRT polynomials and specializations");
  std::string poly_op = "tutte";
  poly->add_option("--op", poly_op, "tutte | brt | jones | martin | kauffman | "
                                    "kauffman-alt | invariance")
      ->check(CLI::IsMember({"tutte", "brt", "jones", "martin", "kauffman",
                             "kauffman-alt", "invariance"}));
  poly->add_option("--dessin", dessin_text);
  poly->add_option("--orbits", orbits_path, "orbit table JSON (invariance mode)");

  // ---- birkhoff ----------------------------------------------------------------
  auto* birk = app.add_subcommand("birkhoff", "Rota-Baxter factorization of characters");
  std::string birk_op = "factor";
  birk->add_option("--op", birk_op, "factor | structure-constants")
      ->check(CLI::IsMember({"factor", "structure-constants"}));
  std::string context_name = "polar";
  birk->add_option("--context", context_name, "polar | pi")
      ->check(CLI::IsMember({"polar", "pi"}));
  std::string character_name = "jones";
  birk->add_option("--character", character_name, "jones | martin")
      ->check(CLI::IsMember({"jones", "martin"}));
  birk->add_option("--dessin", dessin_text);
  birk->add_option("--m", m_arg, "pi_m (structure constants)");
  birk->add_option("--n", n_arg, "pi_n (structure constants)");
  birk->add_option("--class", policy_name, "subdessin class");

  // ---- compose -----------------------------------------------------------------
  auto* comp = app.add_subcommand("compose", "Belyi-extending lifting schemes");
  std::string comp_op = "apply";
  comp->add_option("--op", comp_op,
                   "power | involution | word | apply | mat2 | mat3 | weight | nofr")
      ->check(CLI::IsMember({"power", "involution", "word", "apply", "mat2", "mat3",
                             "weight", "nofr"}));
  comp->add_option("--n", n_arg, "power exponent");
  comp->add_option("--word", word_text, "semigroup word, e.g. 'm2 F m3'");
  comp->add_option("--scheme", scheme_path, "scheme JSON file");
  comp->add_option("--dessin", dessin_text);
  std::string rational_text = "1";
  comp->add_option("--r", rational_text, "positive rational (nofr)");

  // ---- qsm ----------------------------------------------------------------------
  auto* qsm = app.add_subcommand("qsm", "partition functions, Gibbs and KMS states");
  std::string qsm_op = "zeta";
  qsm->add_option("--op", qsm_op,
                  "zeta | polylog | partition | enumerated | gibbs | kms | nested | "
                  "extended-z | extended-census | extended-gibbs")
      ->check(CLI::IsMember({"zeta", "polylog", "partition", "enumerated", "gibbs", "kms",
                             "nested", "extended-z", "extended-census", "extended-gibbs"}));
  qsm->add_option("--beta", beta);
  qsm->add_option("--tau", tau);
  qsm->add_option("--tol", tol);
  std::string system_name = "S";
  qsm->add_option("--system", system_name, "S | Upsilon (partition)")
      ->check(CLI::IsMember({"S", "Upsilon"}));
  std::string enum_mode = "bc";
  qsm->add_option("--mode", enum_mode, "bc | zdeg | additive | multiplicative | profile "
                                       "(enumerated); N | Q (gibbs); sigma | rho (nested)");
  qsm->add_option("--cutoff", cutoff);
  qsm->add_option("--word-cutoff", word_cutoff);
  qsm->add_option("--puiseux", h_text, "Puiseux polynomial, e.g. 't + t^2'");
  qsm->add_option("--word", word_text);
  qsm->add_option("--lambda", lambda_text, "character value, rational in (0,1]");
  qsm->add_option("--dessin", dessin_text);
  qsm->add_option("--d", d_arg);
  qsm->add_option("--m", m_arg);

  // ---- bc -------------------------------------------------------------------------
  auto* bc = app.add_subcommand("bc", "Bost-Connes maps and mGT");
  std::string bc_op = "mgt";
  bc->add_option("--op", bc_op, "sigma | rho | theta | mgt")
      ->check(CLI::IsMember({"sigma", "rho", "theta", "mgt"}));
  bc->add_option("--n", n_arg);
  std::string fraction_text = "1/2";
  bc->add_option("--r", fraction_text, "element of Q/Z as a/b");

  // ---- double -----------------------------------------------------------------------
  auto* dbl = app.add_subcommand("double", "twisted Drinfeld doubles of Z/mZ");
  std::string dbl_op = "axioms";
  dbl->add_option("--op", dbl_op, "cocycle | axioms | system")
      ->check(CLI::IsMember({"cocycle", "axioms", "system"}));
  dbl->add_option("--m", m_arg);
  dbl->add_option("--a", a_arg);
  dbl->add_option("--n", n_arg, "tower step (system)");
  dbl->add_flag("--literal-three", literal_three,
                "use the printed divisor 3 in the cocycle exponent");

  // ---- verify-all --------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify-all", "run the acceptance criteria");
  verify->add_option("--only", only, "restrict to a block (enum, hopf, poly, birkhoff, "
                                     "compose, qsm, bc, double) or a criterion number");
  verify->add_option("--seed", seed, "seed for the randomized property checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dessin) {
      ds::Dessin D = ds::parse_dessin(dessin_text);
      if (dessin_op == "ram") out.emit(ds::ramification_to_json(ds::ramification(D)));
      else if (dessin_op == "canonical") {
        ds::Dessin c = ds::canonical_form(D);
        out.emit(ds::dessin_to_json(c), ds::to_text(c));
      } else if (dessin_op == "aut")
        out.emit(ds::Json{{"aut", ds::automorphism_count(D)}});
      else if (dessin_op == "clean")
        out.emit(ds::Json{{"clean", ds::is_clean(D)}});
      else if (dessin_op == "regular")
        out.emit(ds::Json{{"regular", ds::is_regular(D)}});
      else if (dessin_op == "iso") {
        ds::Dessin E = ds::parse_dessin(dessin2_text);
        out.emit(ds::Json{{"isomorphic", ds::is_isomorphic(D, E)}});
      } else if (dessin_op == "union") {
        ds::Dessin E = ds::parse_dessin(dessin2_text);
        ds::Dessin U = ds::disjoint_union(D, E);
        out.emit(ds::dessin_to_json(U), ds::to_text(U));
      } else if (dessin_op == "fibered") {
        ds::Dessin E = ds::parse_dessin(dessin2_text);
        auto fp = ds::fibered_product(D, E);
        ds::Json j{{"blacks", fp.graph.blacks},
                   {"whites", fp.graph.whites},
                   {"edges", fp.graph.edges},
                   {"ram", ds::ramification_to_json(fp.ram)},
                   {"display_order", fp.display_order}};
        out.emit(j);
      }
      return 0;
    }

    if (*enm) {
      if (enum_op == "dessins") {
        auto filter = connected_only
                          ? std::function<bool(const ds::Dessin&)>(
                                [](const ds::Dessin& D) { return ds::is_connected(D); })
                          : nullptr;
        auto classes = ds::enumerate_dessins(static_cast<int>(d_arg), filter);
        ds::Json arr = ds::Json::array();
        for (const auto& D : classes) arr.push_back(ds::dessin_to_json(D));
        std::string text;
        for (const auto& D : classes) text += ds::to_text(D) + "\n";
        out.emit(ds::Json{{"count", classes.size()}, {"classes", arr}}, text);
      } else if (enum_op == "trees") {
        if (csv) {
          std::cout << ds::csv_tree_counts(static_cast<int>(d_arg));
          return 0;
        }
        ds::Json j{{"d", d_arg},
                   {"total", ds::count_labeled_bipartite_trees(static_cast<int>(d_arg)).str()}};
        if (enm->count("--m"))
          j["by_m"] = ds::count_labeled_bipartite_trees(static_cast<int>(d_arg),
                                                        static_cast<int>(m_arg))
                          .str();
        out.emit(j);
      } else if (enum_op == "ncount") {
        out.emit(ds::Json{{"d", d_arg}, {"N", ds::count_single_cycle_belyi(d_arg)}});
      } else if (enum_op == "coverings") {
        auto h = ds::count_coverings(genus_arg, mu_arg, nu_arg);
        out.emit(ds::Json{{"h", ds::to_string(h)}}, ds::to_string(h));
      }
      return 0;
    }

    if (*hopf) {
      ds::HopfContext ctx(parse_policy(policy_name));
      ds::Dessin D = ds::parse_dessin(dessin_text);
      if (hopf_op == "coproduct") {
        out.emit(ds::tensor2_to_json(ctx.coproduct(ds::hopf_of(D))),
                 ds::to_string(ctx.coproduct(ds::hopf_of(D))));
      } else if (hopf_op == "antipode") {
        out.emit(ds::hopf_to_json(ctx.antipode(ds::hopf_of(D))));
      } else if (hopf_op == "grade") {
        ds::Monomial m = ds::Monomial::from_dessin(D);
        out.emit(ds::Json{{"b1", ds::grade(m, ds::Grading::kLoops)},
                          {"edges", ds::grade(m, ds::Grading::kEdges)},
                          {"vertices", ds::grade(m, ds::Grading::kVertices)}});
      } else if (hopf_op == "subdessins") {
        ds::Json arr = ds::Json::array();
        for (const auto& delta : ds::enumerate_subdessins(D, parse_policy(policy_name)))
          arr.push_back(delta.edges);
        out.emit(arr);
      } else if (hopf_op == "check-coassoc") {
        auto rep = ds::check_coassociative(ctx, D);
        out.emit(ds::Json{{"coassociative", rep.ok}, {"counterexample", rep.counterexample}});
        return rep.ok ? 0 : 3;
      } else if (hopf_op == "balanced") {
        ds::OrbitTable table(ds::orbit_table_from_json(load_json(orbits_path)));
        out.emit(ds::tensor2_to_json(ctx.coproduct_balanced(ds::hopf_of(D), table)));
      }
      return 0;
    }

    if (*poly) {
      if (poly_op == "invariance") {
        auto orbits = ds::orbit_table_from_json(load_json(orbits_path));
        auto rep = ds::invariance_check(orbits);
        ds::Json fj = ds::Json::array();
        for (const auto& f : rep.findings)
          fj.push_back(ds::Json{{"orbit", f.orbit},
                                {"which", f.which},
                                {"a", ds::dessin_to_json(f.a)},
                                {"b", ds::dessin_to_json(f.b)}});
        out.emit(ds::Json{{"all_equal", rep.all_equal}, {"findings", fj}});
        return rep.all_equal ? 0 : 3;
      }
      ds::Dessin D = ds::parse_dessin(dessin_text);
      if (poly_op == "tutte") out.emit(ds::multipoly_to_json(ds::tutte(D)), ds::tutte(D).str());
      else if (poly_op == "brt") out.emit(ds::multipoly_to_json(ds::brt(D)), ds::brt(D).str());
      else {
        ds::Specialization s = poly_op == "jones" ? ds::Specialization::kJones
                               : poly_op == "martin" ? ds::Specialization::kMartin
                               : poly_op == "kauffman" ? ds::Specialization::kKauffman
                                                       : ds::Specialization::kKauffmanAlt;
        auto L = ds::specialize(D, s);
        out.emit(ds::laurent_to_json(L), L.str());
      }
      return 0;
    }

    if (*birk) {
      if (birk_op == "structure-constants") {
        auto u = ds::structure_constants(static_cast<int>(m_arg), static_cast<int>(n_arg));
        ds::Json arr = ds::Json::array();
        for (const auto& c : u) arr.push_back(ds::to_string(c));
        out.emit(arr);
        return 0;
      }
      ds::HopfContext hctx(parse_policy(policy_name));
      ds::RBContext ctx(character_name == "jones" ? ds::RBContextKind::kLaurentPolar
                                                  : ds::RBContextKind::kPiBasis);
      if (birk->count("--context"))
        ctx = ds::RBContext(context_name == "polar" ? ds::RBContextKind::kLaurentPolar
                                                    : ds::RBContextKind::kPiBasis);
      auto phi = character_name == "jones" ? ds::jones_character() : ds::martin_character();
      ds::Dessin D = ds::parse_dessin(dessin_text);
      auto f = ds::birkhoff(phi, ctx, hctx, {D});
      out.emit(ds::birkhoff_to_json(f, ctx, phi, hctx));
      return 0;
    }

    if (*comp) {
      if (comp_op == "power") {
        out.emit(ds::scheme_to_json(ds::scheme_power(n_arg)));
      } else if (comp_op == "involution") {
        out.emit(ds::scheme_to_json(ds::scheme_involution()));
      } else if (comp_op == "word") {
        out.emit(ds::scheme_to_json(ds::word_to_scheme(ds::parse_word(word_text))));
      } else if (comp_op == "apply") {
        ds::LiftingScheme s;
        if (!scheme_path.empty()) s = ds::scheme_from_json(load_json(scheme_path));
        else if (!word_text.empty()) s = ds::word_to_scheme(ds::parse_word(word_text));
        else s = ds::scheme_power(n_arg);
        ds::Dessin D = ds::parse_dessin(dessin_text);
        ds::Dessin img = ds::apply(s, D);
        out.emit(ds::dessin_to_json(img), ds::to_text(img));
      } else if (comp_op == "mat2" || comp_op == "mat3") {
        ds::LiftingScheme s = !word_text.empty()
                                  ? ds::word_to_scheme(ds::parse_word(word_text))
                                  : ds::scheme_power(n_arg);
        out.emit(ds::Json(ds::mat_hom(s.tuple(),
                                      comp_op == "mat2" ? ds::MatMode::kMat2
                                                        : ds::MatMode::kMat3)));
      } else if (comp_op == "weight") {
        auto w = ds::parse_word(word_text);
        out.emit(ds::Json{{"degree", ds::word_weight_degree(w).str()},
                          {"mat2", ds::word_weight_mat2(w)}});
      } else if (comp_op == "nofr") {
        out.emit(ds::Json{{"n", ds::n_of_r(parse_rational(rational_text)).str()}});
      }
      return 0;
    }

    if (*qsm) {
      Quad b(beta), t(tau);
      if (qsm_op == "zeta") out.emit(ds::series_to_json(ds::zeta(b, Quad(tol))));
      else if (qsm_op == "polylog")
        out.emit(ds::series_to_json(ds::polylog(b, t, Quad(tol))));
      else if (qsm_op == "partition") {
        auto sys = system_name == "S" ? ds::FreeProductSystem::kS
                                      : ds::FreeProductSystem::kUpsilon;
        out.emit(ds::partition_report_to_json(system_name, b,
                                              ds::partition_closed(sys, b, cutoff)));
      } else if (qsm_op == "enumerated") {
        ds::EnumeratedMode m = enum_mode == "bc" ? ds::EnumeratedMode::kDegreeBostConnes
                               : enum_mode == "zdeg" ? ds::EnumeratedMode::kDegreeAllTrees
                               : enum_mode == "additive" ? ds::EnumeratedMode::kAdditive
                               : enum_mode == "multiplicative"
                                   ? ds::EnumeratedMode::kMultiplicative
                                   : ds::EnumeratedMode::kProfileDirichlet;
        ds::EnumeratedParams p;
        p.cutoff = cutoff;
        auto rep = ds::partition_enumerated(m, b, p);
        ds::Json j{{"series", ds::series_to_json(rep.series)},
                   {"divergent", rep.divergent},
                   {"note", rep.note}};
        out.emit(j);
      } else if (qsm_op == "gibbs") {
        auto h = ds::PuiseuxPoly::parse(h_text);
        auto rep = enum_mode == "Q" ? ds::gibbs_Q(h, t, b, cutoff)
                                    : ds::gibbs_N(h, t, b, Quad(tol));
        out.emit(ds::gibbs_report_to_json(rep));
      } else if (qsm_op == "kms") {
        ds::Dessin D = ds::parse_dessin(dessin_text);
        auto rep = ds::kms_state(D, parse_rational(lambda_text), b, word_cutoff);
        out.emit(ds::Json{{"value", ds::quad_str(rep.value)},
                          {"z", ds::quad_str(rep.z_value)},
                          {"words", rep.words}});
      } else if (qsm_op == "nested") {
        auto h = ds::PuiseuxPoly::parse(h_text);
        auto dir = enum_mode == "rho" ? ds::WordDirection::kRho : ds::WordDirection::kSigma;
        Quad v = ds::nested_eval(ds::parse_word(word_text), h, t, dir);
        out.emit(ds::Json{{"value", ds::quad_str(v)}});
      } else if (qsm_op == "extended-z") {
        auto z = ds::z_extended(b);
        ds::Json blocks = ds::Json::array();
        for (size_t i = 0; i < z.block_values.size(); ++i)
          blocks.push_back(ds::Json{{"d", i + 1},
                                    {"value", ds::quad_str(z.block_values[i])},
                                    {"bound", ds::quad_str(z.block_bounds[i])}});
        out.emit(ds::Json{{"series", ds::series_to_json(z.total)}, {"blocks", blocks}});
      } else if (qsm_op == "extended-census") {
        auto c = ds::eigenvalue_census(d_arg, d_arg, 3, 3);
        ds::Json groups = ds::Json::array();
        for (const auto& g : c.groups) {
          ds::Json slots = ds::Json::array();
          for (const auto& s : g)
            slots.push_back(ds::Json{{"d", s.d}, {"m", s.m}, {"a", s.a}, {"b", s.b}});
          groups.push_back(slots);
        }
        out.emit(ds::Json{{"consistent", c.consistent},
                          {"groups", groups.size()},
                          {"zero_groups", c.zero_eigenvalue_groups}});
        return c.consistent ? 0 : 3;
      } else if (qsm_op == "extended-gibbs") {
        ds::Dessin D = ds::parse_dessin(dessin_text);
        ds::Rational lam = parse_rational(lambda_text);
        Quad lamq = Quad(numerator(lam).str()) / Quad(denominator(lam).str());
        out.emit(ds::Json{
            {"value", ds::quad_str(ds::gibbs_extended(D.degree(), lamq, b))}});
      }
      return 0;
    }

    if (*bc) {
      if (bc_op == "mgt") {
        auto g = ds::mgt_group(n_arg);
        out.emit(ds::Json{{"n", n_arg}, {"order", g.order()}},
                 "order " + std::to_string(g.order()));
      } else {
        auto slash = fraction_text.find('/');
        ds::QZ r(std::stol(fraction_text.substr(0, slash)),
                 std::stol(fraction_text.substr(slash + 1)));
        ds::GroupAlg x = ds::e_of(r);
        ds::GroupAlg y = bc_op == "sigma" ? ds::bc_sigma(n_arg, x)
                         : bc_op == "rho" ? ds::bc_rho(n_arg, x)
                                          : ds::ihara_theta(x);
        ds::Json arr = ds::Json::array();
        for (const auto& [q, c] : y)
          arr.push_back(ds::Json{{"r", q.str()}, {"coef", ds::to_string(c)}});
        out.emit(arr);
      }
      return 0;
    }

    if (*dbl) {
      if (dbl_op == "cocycle") {
        bool ok = ds::cocycle_identity_holds(static_cast<int>(m_arg), a_arg, literal_three);
        out.emit(ds::Json{{"m", m_arg}, {"a", a_arg}, {"cocycle_identity", ok}});
        return ok ? 0 : 3;
      } else if (dbl_op == "axioms") {
        auto rep = ds::verify_axioms(static_cast<int>(m_arg), a_arg, literal_three);
        out.emit(ds::axiom_report_to_json(rep));
        return (rep.pentagon && rep.quasi_assoc && rep.counit && rep.r_conjugation) ? 0 : 3;
      } else {
        auto rep = ds::system_maps(static_cast<int>(n_arg), static_cast<int>(m_arg), 1);
        out.emit(ds::Json{{"pullback_is_cocycle", rep.pullback_is_cocycle},
                          {"r_transport_exact", rep.r_transport_exact}});
        return (rep.pullback_is_cocycle && rep.r_transport_exact) ? 0 : 3;
      }
    }

    if (*verify) {
      auto results = ds::run_acceptance(only, seed);
      bool all = true;
      for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds);
        for (const auto& d : r.details) std::printf("         %s\n", d.c_str());
        for (const auto& f : r.findings) std::printf("         FINDING: %s\n", f.c_str());
        all = all && r.pass;
      }
      return all ? 0 : 3;
    }
  } catch (const ds::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const ds::DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
