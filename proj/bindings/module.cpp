// Python bindings for the main operations. Exact values cross the boundary
// as strings (rationals, big integers) or doubles (series values); dessins
// travel in their text format.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dessins/acceptance.hpp"
#include "dessins/bost_connes.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/json_io.hpp"
#include "dessins/omega_theta.hpp"

namespace py = pybind11;
namespace ds = dessins;

namespace {

ds::Dessin parse(const std::string& text) { return ds::parse_dessin(text); }

py::dict ram_dict(const ds::Dessin& D) {
  auto r = ds::ramification(D);
  py::dict d;
  d["d"] = r.d;
  d["m"] = r.m;
  d["n"] = r.n_white;
  d["r"] = r.r;
  d["mu"] = r.mu;
  d["nu"] = r.nu;
  d["rho"] = r.rho;
  d["b0"] = r.b0;
  d["euler"] = r.euler_surface;
  d["genus"] = r.genus_total;
  return d;
}

ds::SubdessinPolicy policy_of(const std::string& name) {
  if (name == "paper") return ds::SubdessinPolicy::kPaper;
  if (name == "min2") return ds::SubdessinPolicy::kMin2;
  return ds::SubdessinPolicy::kMin2Co2;
}

}  // namespace

PYBIND11_MODULE(_dessins, m) {
  m.doc() = "dessins d'enfant: combinatorics, Hopf-algebra invariants, "
            "Belyi-extending maps, partition functions and twisted doubles";

  py::register_exception<ds::GuardError>(m, "GuardError");
  py::register_exception<ds::DivergenceError>(m, "DivergenceError");

  // ---- dessins ------------------------------------------------------------
  m.def("ramification", [](const std::string& t) { return ram_dict(parse(t)); },
        py::arg("dessin"));
  m.def("canonical_form",
        [](const std::string& t) { return ds::to_text(ds::canonical_form(parse(t))); });
  m.def("is_isomorphic", [](const std::string& a, const std::string& b) {
    return ds::is_isomorphic(parse(a), parse(b));
  });
  m.def("automorphism_count",
        [](const std::string& t) { return ds::automorphism_count(parse(t)); });
  m.def("is_clean", [](const std::string& t) { return ds::is_clean(parse(t)); });
  m.def("is_regular", [](const std::string& t) { return ds::is_regular(parse(t)); });
  m.def("components", [](const std::string& t) {
    std::vector<std::string> out;
    for (const auto& c : ds::components(parse(t))) out.push_back(ds::to_text(c));
    return out;
  });
  m.def("dessin_json",
        [](const std::string& t) { return ds::dessin_to_json(parse(t)).dump(); });

  // ---- enumeration ----------------------------------------------------------
  m.def("enumerate_dessins",
        [](int d, bool connected) {
          auto filter = connected ? std::function<bool(const ds::Dessin&)>(
                                        [](const ds::Dessin& D) { return ds::is_connected(D); })
                                  : nullptr;
          std::vector<std::string> out;
          for (const auto& D : ds::enumerate_dessins(d, filter)) out.push_back(ds::to_text(D));
          return out;
        },
        py::arg("d"), py::arg("connected") = false);
  m.def("count_labeled_bipartite_trees", [](int d, int m) {
    return (m > 0 ? ds::count_labeled_bipartite_trees(d, m)
                  : ds::count_labeled_bipartite_trees(d))
        .str();
  }, py::arg("d"), py::arg("m") = 0);
  m.def("count_single_cycle_belyi", &ds::count_single_cycle_belyi);
  m.def("count_coverings", [](int g, std::vector<int> mu, std::vector<int> nu) {
    return ds::to_string(ds::count_coverings(g, mu, nu));
  });

  // ---- Hopf -------------------------------------------------------------------
  m.def("coproduct_json",
        [](const std::string& t, const std::string& policy) {
          ds::HopfContext ctx(policy_of(policy));
          return ds::tensor2_to_json(ctx.coproduct(ds::hopf_of(parse(t)))).dump();
        },
        py::arg("dessin"), py::arg("subdessin_class") = "min2co2");
  m.def("antipode_json",
        [](const std::string& t, const std::string& policy) {
          ds::HopfContext ctx(policy_of(policy));
          return ds::hopf_to_json(ctx.antipode(ds::hopf_of(parse(t)))).dump();
        },
        py::arg("dessin"), py::arg("subdessin_class") = "min2co2");
  m.def("is_coassociative",
        [](const std::string& t, const std::string& policy) {
          ds::HopfContext ctx(policy_of(policy));
          return ds::check_coassociative(ctx, parse(t)).ok;
        },
        py::arg("dessin"), py::arg("subdessin_class") = "min2co2");

  // ---- polynomials ---------------------------------------------------------------
  m.def("tutte", [](const std::string& t) { return ds::tutte(parse(t)).str(); });
  m.def("brt", [](const std::string& t) { return ds::brt(parse(t)).str(); });
  m.def("specialize", [](const std::string& t, const std::string& mode) {
    ds::Specialization s = mode == "jones" ? ds::Specialization::kJones
                           : mode == "martin" ? ds::Specialization::kMartin
                           : mode == "kauffman" ? ds::Specialization::kKauffman
                                                : ds::Specialization::kKauffmanAlt;
    return ds::specialize(parse(t), s).str();
  });

  // ---- Rota-Baxter ----------------------------------------------------------------
  m.def("structure_constants", [](int mm, int nn) {
    std::vector<std::string> out;
    for (const auto& u : ds::structure_constants(mm, nn)) out.push_back(ds::to_string(u));
    return out;
  });
  m.def("birkhoff_json", [](const std::string& t, const std::string& mode) {
    ds::HopfContext hopf;
    ds::RBContext ctx(mode == "jones" ? ds::RBContextKind::kLaurentPolar
                                      : ds::RBContextKind::kPiBasis);
    auto phi = mode == "jones" ? ds::jones_character() : ds::martin_character();
    auto f = ds::birkhoff(phi, ctx, hopf, {parse(t)});
    return ds::birkhoff_to_json(f, ctx, phi, hopf).dump();
  }, py::arg("dessin"), py::arg("mode") = "jones");

  // ---- lifting schemes ---------------------------------------------------------------
  m.def("apply_power", [](long n, const std::string& t) {
    return ds::to_text(ds::apply(ds::scheme_power(n), parse(t)));
  });
  m.def("apply_word", [](const std::string& word, const std::string& t) {
    return ds::to_text(ds::apply(ds::word_to_scheme(ds::parse_word(word)), parse(t)));
  });
  m.def("scheme_json", [](const std::string& word) {
    return ds::scheme_to_json(ds::word_to_scheme(ds::parse_word(word))).dump();
  });
  m.def("n_of_r", [](const std::string& r) {
    auto slash = r.find('/');
    ds::Rational q = slash == std::string::npos
                         ? ds::Rational(ds::Int(r))
                         : ds::Rational(ds::Int(r.substr(0, slash)),
                                        ds::Int(r.substr(slash + 1)));
    return ds::n_of_r(q).str();
  });

  // ---- series and states ---------------------------------------------------------------
  m.def("zeta", [](double beta, double tol) {
    auto v = ds::zeta(ds::Quad(beta), ds::Quad(tol));
    return py::make_tuple(static_cast<double>(v.value), static_cast<double>(v.tail_bound));
  }, py::arg("beta"), py::arg("tol") = 1e-15);
  m.def("polylog", [](double beta, double z, double tol) {
    auto v = ds::polylog(ds::Quad(beta), ds::Quad(z), ds::Quad(tol));
    return py::make_tuple(static_cast<double>(v.value), static_cast<double>(v.tail_bound));
  }, py::arg("beta"), py::arg("z"), py::arg("tol") = 1e-15);
  m.def("ordered_factorizations",
        [](long n) { return ds::ordered_factorizations(n).str(); });
  m.def("omega_distinct", &ds::omega_distinct);
  m.def("partition_closed", [](const std::string& system, double beta, long cutoff) {
    auto rep = ds::partition_closed(system == "S" ? ds::FreeProductSystem::kS
                                                  : ds::FreeProductSystem::kUpsilon,
                                    ds::Quad(beta), cutoff);
    py::dict d;
    d["closed"] = static_cast<double>(rep.closed_form);
    d["direct"] = static_cast<double>(rep.direct.value);
    d["tail_bound"] = static_cast<double>(rep.direct.tail_bound);
    d["discrepancy"] = static_cast<double>(rep.discrepancy);
    return d;
  }, py::arg("system"), py::arg("beta"), py::arg("cutoff") = 100000);
  m.def("gibbs", [](const std::string& mode, const std::string& h, double tau, double beta) {
    auto hp = ds::PuiseuxPoly::parse(h);
    auto rep = mode == "Q" ? ds::gibbs_Q(hp, ds::Quad(tau), ds::Quad(beta))
                           : ds::gibbs_N(hp, ds::Quad(tau), ds::Quad(beta));
    py::dict d;
    d["direct"] = static_cast<double>(rep.direct);
    d["closed"] = static_cast<double>(rep.closed);
    d["gap"] = static_cast<double>(rep.gap);
    return d;
  });
  m.def("kms_state", [](const std::string& t, const std::string& lambda, double beta,
                        long cutoff) {
    auto slash = lambda.find('/');
    ds::Rational lam = slash == std::string::npos
                           ? ds::Rational(ds::Int(lambda))
                           : ds::Rational(ds::Int(lambda.substr(0, slash)),
                                          ds::Int(lambda.substr(slash + 1)));
    return static_cast<double>(ds::kms_state(parse(t), lam, ds::Quad(beta), cutoff).value);
  }, py::arg("dessin"), py::arg("lambda"), py::arg("beta"), py::arg("word_cutoff") = 8);
  m.def("nested_eval", [](const std::string& word, const std::string& h, double tau,
                          const std::string& dir) {
    return static_cast<double>(
        ds::nested_eval(ds::parse_word(word), ds::PuiseuxPoly::parse(h), ds::Quad(tau),
                        dir == "rho" ? ds::WordDirection::kRho : ds::WordDirection::kSigma));
  }, py::arg("word"), py::arg("h") = "t", py::arg("tau") = 0.5, py::arg("dir") = "sigma");
  m.def("extended_multiplicity",
        [](long d, long mm) { return ds::multiplicity(d, mm).str(); });
  m.def("extended_census_consistent", [](long dmax) {
    auto c = ds::eigenvalue_census(dmax, dmax, 3, 3);
    return c.consistent;
  });

  // ---- Bost-Connes and doubles -----------------------------------------------------------
  m.def("theta_level", &ds::theta_level);
  m.def("mgt_order", [](long n) { return ds::mgt_group(n).order(); });
  m.def("cocycle_identity_holds",
        [](int mm, int a) { return ds::cocycle_identity_holds(mm, a); });
  m.def("verify_double_axioms", [](int mm, int a) {
    auto rep = ds::verify_axioms(mm, a);
    py::dict d;
    d["cocycle"] = rep.cocycle_ok;
    d["pentagon"] = rep.pentagon;
    d["quasi_assoc"] = rep.quasi_assoc;
    d["counit"] = rep.counit;
    d["r_conj"] = rep.r_conjugation;
    return d;
  });
  m.def("system_maps_exact", [](int n, int mm) {
    auto rep = ds::system_maps(n, mm);
    return rep.pullback_is_cocycle && rep.r_transport_exact;
  });

  // ---- acceptance --------------------------------------------------------------------------
  m.def("verify_all", [](const std::string& only) {
    auto results = ds::run_acceptance(only);
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["findings"] = r.findings;
      out.append(d);
    }
    return out;
  }, py::arg("only") = "");
}
