#pragma once

#include <cstdint>
#include <vector>

#include "dessins/common.hpp"

namespace dessins {

// truncated series value with a rigorous tail bound
struct SeriesValue {
  Quad value = 0;
  Quad tail_bound = 0;
  long cutoff = 0;
  bool divergent = false;
};

class DivergenceError : public std::domain_error {
public:
  explicit DivergenceError(const std::string& w) : std::domain_error(w) {}
};

Quad quad_pow(Quad base, Quad exp);
inline Quad npow(long n, Quad beta) { return quad_pow(Quad(n), beta); }

// zeta(beta) for beta > 1 by direct summation, tail bounded by the integral
// comparison sum_{n>N} n^{-beta} <= N^{1-beta}/(beta-1)
SeriesValue zeta(Quad beta, Quad tol = Quad("1e-30"), long max_terms = 20000000);

// rigorous one-sided bounds used inside other tail estimates
Quad zeta_upper(Quad s, long terms = 200000);
Quad zeta_lower(Quad s, long terms = 200000);

// Li_beta(z) for 0 < z < 1, beta > 1
SeriesValue polylog(Quad beta, Quad z, Quad tol = Quad("1e-30"), long max_terms = 20000000);

// ordered factorizations into parts >= 2 (P_1 = 1)
std::vector<std::uint64_t> ordered_factorization_sieve(long n);
Int ordered_factorizations(long n);

// number of distinct prime factors, for all n <= N
std::vector<std::uint8_t> omega_sieve(long n);
int omega_distinct(long n);

// multiplicities of the Upsilon = Q*_+ * Z/2Z system:
// Q_n = sum over ordered factorizations of prod 2^{omega(n_i)}
std::vector<std::uint64_t> upsilon_multiplicity_sieve(long n);

// sum_{n<=N} 2^{omega(n)} n^{-beta} with tail bound (beta > 2)
SeriesValue sum_two_omega(Quad beta, long N);

enum class FreeProductSystem { kS, kUpsilon };

struct PartitionReport {
  SeriesValue direct;      // 4 sum P_n n^{-beta} resp. 4 sum Q_n n^{-beta}
  Quad closed_form = 0;    // 4/(2-zeta) resp. 4 zeta(2b)/(2 zeta(2b)-zeta(b)^2)
  Quad discrepancy = 0;
};

// closed forms of the free-product partition functions, with the truncated
// direct sum and a rigorous comparison-tail bound. Throws DivergenceError
// outside the convergence domain (zeta(beta) < 2, resp.
// zeta(beta)^2/zeta(2 beta) < 2), naming the threshold.
PartitionReport partition_closed(FreeProductSystem system, Quad beta, long cutoff = 100000);

}  // namespace dessins
