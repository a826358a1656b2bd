#pragma once

#include <map>
#include <vector>

#include "dessins/series.hpp"

namespace dessins {

// element of Q(theta) with theta^3 = 2 (theta = 2^{1/3} > 1, with {1, theta,
// theta^2} independent over Q): c0 + c1 theta + c2 theta^2
struct QTheta {
  Rational c0 = 0, c1 = 0, c2 = 0;

  QTheta() = default;
  QTheta(Rational a, Rational b, Rational c)
      : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}

  QTheta operator+(const QTheta& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  QTheta operator-(const QTheta& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  QTheta operator*(const QTheta& o) const;
  QTheta operator*(const Rational& r) const { return {c0 * r, c1 * r, c2 * r}; }
  bool operator==(const QTheta& o) const = default;
  bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }

  Quad to_quad() const;  // evaluate at theta = 2^{1/3}
  std::string str() const;
};

// lambda = a theta + b in Omega_theta = N theta + Z_+
struct OmegaElem {
  long a = 1, b = 0;
  QTheta value() const { return {Rational(b), Rational(a), 0}; }
};

// alpha_eta(lambda) = d lambda + m - 1
OmegaElem alpha_act(long d, long m, const OmegaElem& lam);

// alpha_eta^{-1}(lambda) in Omega_theta iff d | a, b+1-m >= 0 and d | (b+1-m)
bool alpha_inv_membership(long d, long m, const OmegaElem& lam);

// H eigenvalue data: v = F(alpha(lambda)) - F(theta) exactly in Q(theta)
// (with F(x) = x^2), times log(d) for d > 1, times 1 for d = 1
struct ExtEigenvalue {
  QTheta v;
  long d = 1;
  Quad to_quad() const;
};

ExtEigenvalue eigenvalue(long d, long m, const OmegaElem& lam);

// exact equality of eigenvalues: rational log-dependence of the d's plus
// Q(theta) equality of the rescaled algebraic parts (Baker for the
// independent case)
bool eigenvalues_equal(const ExtEigenvalue& x, const ExtEigenvalue& y);

// multiplicity per the closed form M(d,m,lambda) = 2 + #T_{d,m} for d > 1,
// 1 for d = 1
Int multiplicity(long d, long m);

// exhaustive coincidence census over a window, exact arithmetic throughout
struct CensusSlot {
  long d, m, a, b;
};

struct CensusReport {
  std::vector<std::vector<CensusSlot>> groups;  // grouped by equal eigenvalue
  bool consistent = true;   // every group fits the allowed case analysis
  bool extra_cases_seen = false;  // the m=1/m=d boundary identifications
  long zero_eigenvalue_groups = 0;
};

CensusReport eigenvalue_census(long dmax, long mmax, long amax, long bmax);

// truncated partition function of the extended system (trace over basis
// vectors: T_{d,m} trees per (d,m), the d=1 slice with multiplicity one),
// with per-d block majorants from the convergence proof
struct ExtendedZ {
  SeriesValue total;
  std::vector<Quad> block_values;  // per degree d = 1..dmax
  std::vector<Quad> block_bounds;  // rigorous majorant per block
};

ExtendedZ z_extended(Quad beta, long dmax = 8, long abmax = 40);

// Gibbs state of the extended system on an edge-count character
// phi(D) = lambda^{#E(D)}; returns psi_{beta,phi}(D)
Quad gibbs_extended(int edges_of_D, Quad lambda, Quad beta, long dmax = 8, long abmax = 40);

}  // namespace dessins
