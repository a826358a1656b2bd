#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dessins/lifting.hpp"
#include "dessins/series.hpp"

namespace dessins {

// finite Puiseux polynomial sum a_k t^{k/denom}, k >= 1
struct PuiseuxPoly {
  int denom = 1;
  std::map<long, Rational> coeffs;  // exponent numerator -> coefficient

  Quad eval(Quad t) const;
  Quad abs_coeff_sum() const;
  long min_exponent_num() const;
  static PuiseuxPoly parse(const std::string& text);  // e.g. "t + t^2", "t^(1/2)"
};

// sigma/rho evaluation of words in Upsilon = Q*_+ * Z/2Z on a point of (0,1):
// generators r act by t -> t^r (sigma direction) or t -> t^{1/r} (rho),
// F by t -> 1 - t; letters are applied left to right
enum class WordDirection { kSigma, kRho };

Quad nested_point(const SemigroupWord& word, Quad tau, WordDirection dir);
Quad nested_eval(const SemigroupWord& word, const PuiseuxPoly& h, Quad tau,
                 WordDirection dir = WordDirection::kSigma);

// ---- Gibbs states --------------------------------------------------------------

struct GibbsReport {
  Quad direct = 0;       // truncated double sum, normalized
  Quad closed = 0;       // polylog closed form
  Quad gap = 0;          // |direct - closed|
  Quad direct_tail = 0;  // bound on the truncation error of the double sum
};

// N-mode: phi_{tau,beta}(h) = (1/zeta(beta)) sum_n h(tau^n) n^{-beta}
//       = (1/zeta(beta)) sum_k a_k Li_beta(tau^{k/N})
GibbsReport gibbs_N(const PuiseuxPoly& h, Quad tau, Quad beta, Quad tol = Quad("1e-12"),
                    long cutoff = 200000);

// Q-mode: direct sum over Q*_+ (all sign patterns per n) against the printed
// closed form; the gap is reported, never asserted
GibbsReport gibbs_Q(const PuiseuxPoly& h, Quad tau, Quad beta, long cutoff = 400);

// ---- KMS states of the interior-word semigroup ----------------------------------

struct KmsReport {
  Quad value = 0;
  Quad z_value = 0;   // truncated partition sum used for normalization
  long words = 0;
};

// psi_{beta,phi}(D) for the edge-count character phi = lambda^{#E}, summing
// over interior words mu_{n1} F ... F mu_{nk} of degree <= word_cutoff
KmsReport kms_state(const Dessin& D, const Rational& lambda, Quad beta, long word_cutoff);

// ---- enumerated partition functions ----------------------------------------------

enum class EnumeratedMode {
  kDegreeBostConnes,   // multiplicity one per degree: partial sums of zeta
  kDegreeAllTrees,     // 2 (d+1)^{d-1} d^{-beta}: everywhere divergent
  kAdditive,           // generating function of an additive invariant
  kMultiplicative,     // Dirichlet series of a multiplicative invariant
  kProfileDirichlet,   // h_{r;mu,nu} r^{-s} mu^{-s1} nu^{-sigma1}
};

enum class AdditiveInvariant { kEdges, kVertices, kGenus };

struct EnumeratedParams {
  long cutoff = 30;
  AdditiveInvariant additive = AdditiveInvariant::kEdges;
  Quad s = 2, s1 = 2, sigma1 = 2;  // profile-Dirichlet exponents
};

struct EnumeratedReport {
  SeriesValue series;
  std::vector<Quad> terms;            // per-index term values
  std::map<long, Int> counts;         // invariant value -> count (when enumerated)
  bool divergent = false;
  std::string note;
};

EnumeratedReport partition_enumerated(EnumeratedMode mode, Quad beta,
                                      const EnumeratedParams& params = {});

}  // namespace dessins
