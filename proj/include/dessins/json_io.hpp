#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dessins/graph_poly.hpp"
#include "dessins/hopf.hpp"
#include "dessins/lifting.hpp"
#include "dessins/qsm.hpp"
#include "dessins/quasi_hopf.hpp"
#include "dessins/rota_baxter.hpp"

namespace dessins {

using Json = nlohmann::json;

Json dessin_to_json(const Dessin& D);
Dessin dessin_from_json(const Json& j);

Json ramification_to_json(const RamificationData& r);

Json hopf_to_json(const HopfElement& x);
Json tensor2_to_json(const Tensor2& t);

Json orbit_table_to_json(const std::vector<std::vector<Dessin>>& orbits);
std::vector<std::vector<Dessin>> orbit_table_from_json(const Json& j);

Json multipoly_to_json(const MultiPoly& p);
Json laurent_to_json(const LaurentPoly& p);

Json scheme_to_json(const LiftingScheme& s);
LiftingScheme scheme_from_json(const Json& j);

Json series_to_json(const SeriesValue& v);
Json partition_report_to_json(const std::string& system, Quad beta,
                              const PartitionReport& rep);
Json gibbs_report_to_json(const GibbsReport& rep);
Json axiom_report_to_json(const AxiomReport& rep);
Json birkhoff_to_json(const BirkhoffFactorization& f, const RBContext& ctx,
                      const Character<RBValue>& phi, HopfContext& hopf);

std::string csv_tree_counts(int dmax);

std::string quad_str(const Quad& q, int digits = 20);

}  // namespace dessins
