#include "dessins/json_io.hpp"

#include <iomanip>
#include <sstream>

#include "dessins/enumerate.hpp"

namespace dessins {

std::string quad_str(const Quad& q, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << q;
  return os.str();
}

Json dessin_to_json(const Dessin& D) {
  return Json{{"degree", D.degree()}, {"sigma0", D.s0}, {"sigma1", D.s1}};
}

Dessin dessin_from_json(const Json& j) {
  if (!j.contains("sigma0") || !j.contains("sigma1"))
    throw std::invalid_argument("dessin json: sigma0/sigma1 required");
  Perm s0 = j.at("sigma0").get<Perm>();
  Perm s1 = j.at("sigma1").get<Perm>();
  if (j.contains("degree") && j.at("degree").get<int>() != static_cast<int>(s0.size()))
    throw std::invalid_argument("dessin json: degree does not match sigma0");
  return Dessin(s0, s1);
}

Json ramification_to_json(const RamificationData& r) {
  return Json{{"d", r.d},       {"m", r.m},           {"n", r.n_white},
              {"r", r.r},       {"mu", r.mu},         {"nu", r.nu},
              {"rho", r.rho},   {"b0", r.b0},         {"euler", r.euler_surface},
              {"genus", r.genus_total}};
}

Json hopf_to_json(const HopfElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x) {
    Json mono = Json::array();
    for (const auto& D : m.factors) mono.push_back(dessin_to_json(D));
    terms.push_back(Json{{"coefficient", to_string(c)}, {"monomial", mono}});
  }
  return terms;
}

Json tensor2_to_json(const Tensor2& t) {
  Json terms = Json::array();
  for (const auto& [lr, c] : t) {
    Json l = Json::array(), r = Json::array();
    for (const auto& D : lr.first.factors) l.push_back(dessin_to_json(D));
    for (const auto& D : lr.second.factors) r.push_back(dessin_to_json(D));
    terms.push_back(Json{{"coefficient", to_string(c)}, {"left", l}, {"right", r}});
  }
  return terms;
}

Json orbit_table_to_json(const std::vector<std::vector<Dessin>>& orbits) {
  Json out = Json::array();
  for (const auto& orb : orbits) {
    Json o = Json::array();
    for (const auto& D : orb) o.push_back(dessin_to_json(D));
    out.push_back(o);
  }
  return out;
}

std::vector<std::vector<Dessin>> orbit_table_from_json(const Json& j) {
  std::vector<std::vector<Dessin>> out;
  for (const auto& orb : j) {
    std::vector<Dessin> o;
    for (const auto& dj : orb) o.push_back(dessin_from_json(dj));
    out.push_back(std::move(o));
  }
  return out;
}

Json multipoly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back(Json{{"exp", {k[0], k[1], k[2]}}, {"coef", to_string(c)}});
  return Json{{"vars", {"x", "y", "z"}}, {"terms", terms}};
}

Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"exp", e}, {"coef", to_string(c)}});
  return Json{{"denom", p.denom()}, {"terms", terms}};
}

Json scheme_to_json(const LiftingScheme& s) {
  Json words = Json::array();
  for (const auto& w : s.words) words.push_back(Json::array({w[0].str(), w[1].str()}));
  RamTuple t = s.tuple();
  return Json{{"sheets", s.sheets},
              {"alpha0", s.alpha0},
              {"alpha1", s.alpha1},
              {"words", words},
              {"tuple", {t.d, t.m, t.n, t.r}},
              {"fixes_three_points", s.fixes_three_points}};
}

LiftingScheme scheme_from_json(const Json& j) {
  LiftingScheme s;
  s.sheets = j.at("sheets").get<int>();
  s.alpha0 = j.at("alpha0").get<Perm>();
  s.alpha1 = j.at("alpha1").get<Perm>();
  for (const auto& w : j.at("words"))
    s.words.push_back({FreeWord::parse(w.at(0).get<std::string>()),
                       FreeWord::parse(w.at(1).get<std::string>())});
  s.fixes_three_points = j.value("fixes_three_points", true);
  if (!scheme_valid(s))
    throw std::invalid_argument(
        "scheme json: Riemann-Hurwitz validation failed (-d+m+n+r != 2)");
  return s;
}

Json series_to_json(const SeriesValue& v) {
  return Json{{"value", quad_str(v.value)},
              {"tail_bound", quad_str(v.tail_bound)},
              {"cutoff", v.cutoff},
              {"divergent", v.divergent}};
}

Json partition_report_to_json(const std::string& system, Quad beta,
                              const PartitionReport& rep) {
  return Json{{"system", system},
              {"beta", quad_str(beta, 8)},
              {"cutoff", rep.direct.cutoff},
              {"value", quad_str(rep.direct.value)},
              {"tail_bound", quad_str(rep.direct.tail_bound)},
              {"closed_form", quad_str(rep.closed_form)},
              {"discrepancy", quad_str(rep.discrepancy)},
              {"divergent", false}};
}

Json gibbs_report_to_json(const GibbsReport& rep) {
  return Json{{"direct", quad_str(rep.direct)},
              {"closed", quad_str(rep.closed)},
              {"gap", quad_str(rep.gap)},
              {"direct_tail", quad_str(rep.direct_tail)}};
}

Json axiom_report_to_json(const AxiomReport& rep) {
  Json out{{"m", rep.m},
           {"a", rep.a},
           {"cocycle", rep.cocycle_ok},
           {"pentagon", rep.pentagon},
           {"quasi_assoc", rep.quasi_assoc},
           {"counit", rep.counit},
           {"r_conj", rep.r_conjugation}};
  if (!rep.counterexample.empty()) out["counterexample"] = rep.counterexample;
  return out;
}

Json birkhoff_to_json(const BirkhoffFactorization& f, const RBContext& ctx,
                      const Character<RBValue>& phi, HopfContext& hopf) {
  Json out = Json::array();
  for (const auto& [D, minus] : f.minus) {
    bool ok = birkhoff_reconstructs(phi, ctx, hopf, D);
    out.push_back(Json{{"dessin", dessin_to_json(D)},
                       {"phi", phi(D).str()},
                       {"phi_minus", minus.str()},
                       {"phi_plus", f.plus.at(D).str()},
                       {"reconstruction_check", ok}});
  }
  return out;
}

std::string csv_tree_counts(int dmax) {
  std::ostringstream os;
  os << "d,m,count\n";
  for (int d = 1; d <= dmax; ++d)
    for (int m = 1; m <= d; ++m)
      os << d << "," << m << "," << count_labeled_bipartite_trees(d, m) << "\n";
  return os.str();
}

}  // namespace dessins
