#include "dessins/series.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace dessins {

Quad quad_pow(Quad base, Quad e) { return boost::multiprecision::pow(base, e); }

namespace {

// Euler-Maclaurin refinement of the integral comparison: the tail past N is
//   N^{1-s}/(s-1) - N^{-s}/2 + s N^{-s-1}/12 - s(s+1)(s+2) N^{-s-3}/720 + R,
// with |R| at most the first omitted Bernoulli term.
struct ZetaTail {
  Quad correction;
  Quad error;
};

ZetaTail zeta_tail(Quad s, long N) {
  Quad Nq(N);
  Quad c = quad_pow(Nq, 1 - s) / (s - 1) - quad_pow(Nq, -s) / 2 +
           s * quad_pow(Nq, -s - 1) / 12 -
           s * (s + 1) * (s + 2) * quad_pow(Nq, -s - 3) / 720;
  Quad err = s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * quad_pow(Nq, -s - 5) / 30240;
  return {c, err};
}

}  // namespace

SeriesValue zeta(Quad beta, Quad tol, long max_terms) {
  if (beta <= 1) throw std::domain_error("zeta: beta > 1 required");
  SeriesValue out;
  long N = 64;
  while (true) {
    ZetaTail t = zeta_tail(beta, N);
    if (t.error <= tol || 2 * N > max_terms) {
      Quad sum = 0;
      for (long n = 1; n <= N; ++n) sum += 1 / npow(n, beta);
      out.value = sum + t.correction;
      out.tail_bound = t.error;
      out.cutoff = N;
      return out;
    }
    N *= 2;
  }
}

Quad zeta_upper(Quad s, long terms) {
  auto z = zeta(s, Quad("1e-35"), terms);
  return z.value + z.tail_bound;
}

Quad zeta_lower(Quad s, long terms) {
  auto z = zeta(s, Quad("1e-35"), terms);
  return z.value - z.tail_bound;
}

SeriesValue polylog(Quad beta, Quad z, Quad tol, long max_terms) {
  if (beta <= 1) throw std::domain_error("polylog: beta > 1 required");
  if (!(z > 0 && z < 1)) throw std::domain_error("polylog: z in (0,1) required");
  SeriesValue out;
  Quad sum = 0, zp = 1;
  long n = 0;
  while (n < max_terms) {
    ++n;
    zp *= z;
    sum += zp / npow(n, beta);
    Quad tail = zp * z / ((1 - z) * npow(n + 1, beta));
    if (tail <= tol) {
      out.value = sum;
      out.tail_bound = tail;
      out.cutoff = n;
      return out;
    }
  }
  out.value = sum;
  out.tail_bound = zp * z / ((1 - z) * npow(n + 1, beta));
  out.cutoff = n;
  return out;
}

std::vector<std::uint64_t> ordered_factorization_sieve(long n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  if (n >= 1) p[1] = 1;
  for (long d = 1; d <= n; ++d) {
    if (p[d] == 0) continue;
    for (long m = 2 * d; m <= n; m += d) p[m] += p[d];
  }
  return p;
}

Int ordered_factorizations(long n) {
  if (n < 1) throw std::invalid_argument("ordered_factorizations: n >= 1");
  auto sieve = ordered_factorization_sieve(n);
  return Int(sieve[n]);
}

std::vector<std::uint8_t> omega_sieve(long n) {
  std::vector<std::uint8_t> w(n + 1, 0);
  std::vector<long> spf(n + 1, 0);
  for (long i = 2; i <= n; ++i) {
    if (spf[i] == 0)
      for (long j = i; j <= n; j += i)
        if (spf[j] == 0) spf[j] = i;
  }
  for (long i = 2; i <= n; ++i) {
    long p = spf[i], j = i;
    while (j % p == 0) j /= p;
    w[i] = static_cast<std::uint8_t>(w[j] + 1);
  }
  return w;
}

int omega_distinct(long n) {
  if (n < 1) throw std::invalid_argument("omega: n >= 1");
  int w = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++w;
      while (n % p == 0) n /= p;
    }
  }
  return w + (n > 1 ? 1 : 0);
}

std::vector<std::uint64_t> upsilon_multiplicity_sieve(long n) {
  auto w = omega_sieve(n);
  std::vector<std::uint64_t> q(n + 1, 0);
  if (n >= 1) q[1] = 1;
  for (long d = 1; d <= n; ++d) {
    if (q[d] == 0) continue;
    for (long m = 2 * d; m <= n; m += d) q[m] += q[d] << w[m / d];
  }
  return q;
}

SeriesValue sum_two_omega(Quad beta, long N) {
  if (beta <= 2) throw std::domain_error("sum_two_omega: beta > 2 required for the tail bound");
  auto w = omega_sieve(N);
  SeriesValue out;
  Quad sum = 0;
  for (long n = 1; n <= N; ++n) sum += Quad(1ull << w[n]) / npow(n, beta);
  out.value = sum;
  // 2^{omega(n)} <= n, so the tail is at most sum_{n>N} n^{1-beta}
  out.tail_bound = quad_pow(Quad(N), 2 - beta) / (beta - 2);
  out.cutoff = N;
  return out;
}

namespace {

// tail bound for sum_{n>N} c_n n^{-beta} given the full Dirichlet value
// F(s) = sum c_n n^{-s} at auxiliary exponents s < beta:
//   tail <= N^{s-beta} * (F_upper(s) - partial(s))
template <typename Coeff>
Quad comparison_tail(const std::vector<Coeff>& c, long N, Quad beta,
                     const std::vector<Quad>& s_grid,
                     const std::function<Quad(Quad)>& full_upper) {
  Quad best = -1;
  for (const Quad& s : s_grid) {
    if (!(s < beta)) continue;
    Quad full = full_upper(s);
    if (full <= 0) continue;  // outside the auxiliary convergence domain
    Quad partial = 0;
    for (long n = 1; n <= N && n < static_cast<long>(c.size()); ++n)
      partial += Quad(c[n]) / npow(n, s);
    Quad tail_s = full - partial;
    if (tail_s < 0) tail_s = 0;
    Quad bound = quad_pow(Quad(N), s - beta) * tail_s;
    if (best < 0 || bound < best) best = bound;
  }
  if (best < 0) throw std::logic_error("comparison_tail: no usable auxiliary exponent");
  return best;
}

}  // namespace

PartitionReport partition_closed(FreeProductSystem system, Quad beta, long cutoff) {
  PartitionReport rep;
  Quad zb = zeta(beta).value;
  if (system == FreeProductSystem::kS) {
    if (!(zb < 2)) {
      std::ostringstream os;
      os << "partition_closed(S): requires zeta(beta) < 2, i.e. beta > 1.7286 "
            "(Kalmar constant); got zeta(" << beta << ") = " << zb;
      throw DivergenceError(os.str());
    }
    rep.closed_form = 4 / (2 - zb);
    auto P = ordered_factorization_sieve(cutoff);
    Quad sum = 0;
    for (long n = 1; n <= cutoff; ++n) sum += Quad(P[n]) / npow(n, beta);
    rep.direct.value = 4 * sum;
    rep.direct.cutoff = cutoff;
    std::vector<Quad> grid;
    for (double s : {1.78, 1.82, 1.86, 1.90, 1.94, 1.98}) grid.push_back(Quad(s));
    rep.direct.tail_bound =
        4 * comparison_tail(P, cutoff, beta, grid, [&](Quad s) -> Quad {
          Quad zu = zeta_upper(s);
          if (!(zu < 2)) return -1;
          return 1 / (2 - zu);
        });
  } else {
    Quad z2b = zeta(2 * beta).value;
    Quad ratio = zb * zb / z2b;
    if (!(ratio < 2)) {
      std::ostringstream os;
      os << "partition_closed(Upsilon): requires zeta(beta)^2/zeta(2 beta) < 2 "
            "(threshold beta ~ 2.3645); got " << ratio << " at beta = " << beta;
      throw DivergenceError(os.str());
    }
    rep.closed_form = 4 * z2b / (2 * z2b - zb * zb);
    auto Q = upsilon_multiplicity_sieve(cutoff);
    Quad sum = 0;
    for (long n = 1; n <= cutoff; ++n) sum += Quad(Q[n]) / npow(n, beta);
    rep.direct.value = 4 * sum;
    rep.direct.cutoff = cutoff;
    std::vector<Quad> grid;
    for (double s : {2.45, 2.55, 2.65, 2.75, 2.85, 2.95}) grid.push_back(Quad(s));
    rep.direct.tail_bound =
        4 * comparison_tail(Q, cutoff, beta, grid, [&](Quad s) -> Quad {
          Quad num = zeta_upper(s);
          Quad den = zeta_lower(2 * s);
          Quad r = num * num / den;
          if (!(r < 2)) return -1;
          return 1 / (2 - r);
        });
  }
  Quad d = rep.direct.value - rep.closed_form;
  rep.discrepancy = d < 0 ? Quad(-d) : d;
  return rep;
}

}  // namespace dessins
