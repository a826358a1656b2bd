#include "dessins/qsm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dessins/enumerate.hpp"

namespace dessins {

Quad PuiseuxPoly::eval(Quad t) const {
  Quad acc = 0;
  for (const auto& [k, c] : coeffs) {
    Quad coeff = Quad(numerator(c).str()) / Quad(denominator(c).str());
    acc += coeff * quad_pow(t, Quad(k) / denom);
  }
  return acc;
}

Quad PuiseuxPoly::abs_coeff_sum() const {
  Quad acc = 0;
  for (const auto& [k, c] : coeffs) {
    Rational a = c < 0 ? Rational(-c) : c;
    acc += Quad(numerator(a).str()) / Quad(denominator(a).str());
  }
  return acc;
}

long PuiseuxPoly::min_exponent_num() const {
  return coeffs.empty() ? 0 : coeffs.begin()->first;
}

PuiseuxPoly PuiseuxPoly::parse(const std::string& text) {
  // terms separated by + / -; each term c*t^(p/q) with optional parts
  PuiseuxPoly out;
  std::vector<std::pair<Rational, Rational>> terms;  // (coeff, exponent)
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  Rational sign = 1;
  skip();
  while (i < text.size()) {
    if (text[i] == '+') { sign = 1; ++i; skip(); continue; }
    if (text[i] == '-') { sign = -1; ++i; skip(); continue; }
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      long num = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        num = num * 10 + (text[i++] - '0');
      long den = 1;
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          den = den * 10 + (text[i++] - '0');
      }
      coeff = Rational(num, den);
      if (i < text.size() && text[i] == '*') ++i;
      skip();
    }
    Rational expo = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      expo = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool paren = i < text.size() && text[i] == '(';
        if (paren) ++i;
        long num = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          num = num * 10 + (text[i++] - '0');
        long den = 1;
        if (i < text.size() && text[i] == '/') {
          ++i;
          den = 0;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            den = den * 10 + (text[i++] - '0');
        }
        if (paren) {
          if (i >= text.size() || text[i] != ')')
            throw std::invalid_argument("puiseux: missing ')'");
          ++i;
        }
        expo = Rational(num, den);
      }
    }
    if (expo == 0) throw std::invalid_argument("puiseux: constant terms not allowed");
    terms.emplace_back(sign * coeff, expo);
    skip();
  }
  long denom = 1;
  for (const auto& [c, e] : terms)
    denom = std::lcm(denom, static_cast<long>(denominator(e)));
  out.denom = static_cast<int>(denom);
  for (const auto& [c, e] : terms) {
    long key = static_cast<long>(numerator(e) * (denom / denominator(e)));
    out.coeffs[key] += c;
  }
  return out;
}

Quad nested_point(const SemigroupWord& word, Quad tau, WordDirection dir) {
  if (!(tau > 0 && tau < 1)) throw std::domain_error("nested_point: tau in (0,1) required");
  auto check = [](Quad p) {
    if (!(p > 0 && p < 1))
      throw std::logic_error("nested_point: intermediate value left (0,1)");
    return p;
  };
  Quad p = tau;
  auto apply_factor = [&](const Rational& r) {
    Quad e = Quad(numerator(r).str()) / Quad(denominator(r).str());
    if (dir == WordDirection::kRho) e = 1 / e;
    p = check(quad_pow(p, e));
  };
  auto apply_F = [&] { p = check(1 - p); };
  if (word.eps0) apply_F();
  for (size_t i = 0; i < word.factors.size(); ++i) {
    if (i) apply_F();
    apply_factor(word.factors[i]);
  }
  if (word.eps1) apply_F();
  return p;
}

Quad nested_eval(const SemigroupWord& word, const PuiseuxPoly& h, Quad tau,
                 WordDirection dir) {
  return h.eval(nested_point(word, tau, dir));
}

// ---- Gibbs -------------------------------------------------------------------------

GibbsReport gibbs_N(const PuiseuxPoly& h, Quad tau, Quad beta, Quad tol, long cutoff) {
  if (!(tau > 0 && tau < 1)) throw std::domain_error("gibbs_N: tau in (0,1)");
  if (!(beta > 1)) throw std::domain_error("gibbs_N: beta > 1");
  GibbsReport rep;
  Quad zb = zeta(beta, tol / 100).value;
  Quad direct = 0;
  Quad H = h.abs_coeff_sum();
  Quad qmin = quad_pow(tau, Quad(h.min_exponent_num()) / h.denom);
  long n = 0;
  Quad tail = 0;
  while (n < cutoff) {
    ++n;
    direct += h.eval(quad_pow(tau, Quad(n))) / npow(n, beta);
    // |h(tau^u)| <= H * qmin^u for u >= 1; geometric tail
    tail = H * quad_pow(qmin, Quad(n + 1)) / (1 - qmin);
    if (tail <= tol) break;
  }
  rep.direct = direct / zb;
  rep.direct_tail = tail / zb;
  Quad closed = 0;
  for (const auto& [k, c] : h.coeffs) {
    Quad coeff = Quad(numerator(c).str()) / Quad(denominator(c).str());
    closed += coeff * polylog(beta, quad_pow(tau, Quad(k) / h.denom), tol / 100).value;
  }
  rep.closed = closed / zb;
  Quad g = rep.direct - rep.closed;
  rep.gap = g < 0 ? Quad(-g) : g;
  return rep;
}

GibbsReport gibbs_Q(const PuiseuxPoly& h, Quad tau, Quad beta, long cutoff) {
  if (!(tau > 0 && tau < 1)) throw std::domain_error("gibbs_Q: tau in (0,1)");
  if (!(beta > 1)) throw std::domain_error("gibbs_Q: beta > 1");
  GibbsReport rep;
  Quad zb = zeta(beta).value, z2b = zeta(2 * beta).value;
  Quad norm = z2b / (zb * zb);
  // direct: sum over n of all sign patterns r_j = prod p^{+-k}
  Quad direct = 0;
  for (long n = 1; n <= cutoff; ++n) {
    // factor n
    long rest = n;
    std::vector<std::pair<long, int>> pf;
    for (long p = 2; p * p <= rest; ++p)
      if (rest % p == 0) {
        int k = 0;
        while (rest % p == 0) {
          rest /= p;
          ++k;
        }
        pf.emplace_back(p, k);
      }
    if (rest > 1) pf.emplace_back(rest, 1);
    int w = static_cast<int>(pf.size());
    for (int mask = 0; mask < (1 << w); ++mask) {
      Quad r = 1;
      for (int i = 0; i < w; ++i) {
        Quad pk = quad_pow(Quad(pf[i].first), Quad(pf[i].second));
        r *= (mask & (1 << i)) ? 1 / pk : pk;
      }
      direct += h.eval(quad_pow(tau, r)) / npow(n, beta);
    }
  }
  rep.direct = norm * direct;
  Quad closed = 0;
  for (const auto& [k, c] : h.coeffs) {
    Quad coeff = Quad(numerator(c).str()) / Quad(denominator(c).str());
    closed += coeff * polylog(beta, quad_pow(tau, Quad(k) / h.denom)).value;
  }
  rep.closed = norm * closed;
  Quad g = rep.direct - rep.closed;
  rep.gap = g < 0 ? Quad(-g) : g;
  return rep;
}

// ---- KMS ----------------------------------------------------------------------------

KmsReport kms_state(const Dessin& D, const Rational& lambda, Quad beta, long word_cutoff) {
  if (abs(numerator(lambda)) > abs(denominator(lambda)))
    throw std::invalid_argument("kms_state: |lambda| <= 1 required (unbounded character)");
  if (!(beta > Quad("1.7286")))
    throw DivergenceError("kms_state: beta must exceed the Kalmar threshold ~1.7286 "
                          "where sum P_n n^{-beta} converges");
  KmsReport rep;
  Quad lam = Quad(numerator(lambda).str()) / Quad(denominator(lambda).str());
  Quad num = 0, den = 0;
  for (const auto& w : interior_words_up_to(word_cutoff)) {
    LiftingScheme s = word_to_scheme(w);
    Dessin image = apply(s, D);
    Quad weight = 1 / quad_pow(Quad(word_weight_degree(w).str()), beta);
    num += quad_pow(lam, Quad(image.degree())) * weight;
    den += weight;
    rep.words++;
  }
  rep.z_value = den;
  rep.value = num / den;
  return rep;
}

// ---- enumerated partition functions ---------------------------------------------------

EnumeratedReport partition_enumerated(EnumeratedMode mode, Quad beta,
                                      const EnumeratedParams& params) {
  EnumeratedReport rep;
  switch (mode) {
    case EnumeratedMode::kDegreeBostConnes: {
      // multiplicity of Upsilon(eta) = d is one on the Bost-Connes
      // subsemigroup: the partial sums of zeta(beta)
      Quad acc = 0;
      for (long d = 1; d <= params.cutoff; ++d) {
        Quad t = 1 / npow(d, beta);
        rep.terms.push_back(t);
        acc += t;
      }
      rep.series.value = acc;
      rep.series.cutoff = params.cutoff;
      if (beta > 1)
        rep.series.tail_bound = quad_pow(Quad(params.cutoff), 1 - beta) / (beta - 1);
      else
        rep.divergent = true;
      return rep;
    }
    case EnumeratedMode::kDegreeAllTrees: {
      // 2 (d+1)^{d-1} d^{-beta}: term growth flags divergence at every beta
      Quad acc = 0;
      long window = std::max<long>(params.cutoff, static_cast<long>(3 * double(beta)) + 40);
      Quad prev = 0;
      long argmin = 1;
      Quad minval = -1;
      for (long d = 1; d <= window; ++d) {
        Quad ln_t = boost::multiprecision::log(Quad(2)) +
                    (d - 1) * boost::multiprecision::log(Quad(d + 1)) -
                    beta * boost::multiprecision::log(Quad(d));
        Quad t = boost::multiprecision::exp(ln_t);
        rep.terms.push_back(t);
        acc += t;
        if (minval < 0 || t < minval) {
          minval = t;
          argmin = d;
        }
        prev = t;
      }
      rep.series.value = acc;
      rep.series.cutoff = window;
      // divergent if the terms grow monotonically after their minimum and
      // end far above it
      bool growing = true;
      for (size_t i = argmin; i + 1 < rep.terms.size(); ++i)
        if (rep.terms[i + 1] <= rep.terms[i]) growing = false;
      rep.divergent = growing && rep.terms.back() > 10 * minval;
      rep.series.divergent = rep.divergent;
      std::ostringstream os;
      os << "terms reach their minimum at d = " << argmin
         << (rep.divergent ? " and grow without bound afterwards" : "");
      rep.note = os.str();
      return rep;
    }
    case EnumeratedMode::kAdditive: {
      long guard = std::min<long>(params.cutoff, 5);
      for (long d = 1; d <= guard; ++d) {
        for (const auto& D : enumerate_dessins(static_cast<int>(d))) {
          auto r = ramification(D);
          long key = 0;
          switch (params.additive) {
            case AdditiveInvariant::kEdges: key = r.d; break;
            case AdditiveInvariant::kVertices: key = r.m + r.n_white; break;
            case AdditiveInvariant::kGenus: key = r.genus_total; break;
          }
          rep.counts[key] += 1;
        }
      }
      Quad acc = 0;
      for (const auto& [k, c] : rep.counts)
        acc += Quad(c.str()) * boost::multiprecision::exp(-beta * Quad(k));
      rep.series.value = acc;
      rep.series.cutoff = guard;
      rep.note = "generating polynomial in e^{-beta} over enumerated dessins";
      return rep;
    }
    case EnumeratedMode::kMultiplicative: {
      long guard = std::min<long>(params.cutoff, 5);
      Quad acc = 0;
      for (long d = 1; d <= guard; ++d) {
        Int count(enumerate_dessins(static_cast<int>(d)).size());
        rep.counts[d] = count;
        Quad t = Quad(count.str()) / npow(d, beta);
        rep.terms.push_back(t);
        acc += t;
      }
      rep.series.value = acc;
      rep.series.cutoff = guard;
      // class counts grow super-exponentially; the Dirichlet series is a
      // formal object, flagged as such
      rep.divergent = true;
      rep.series.divergent = true;
      rep.note = "formal Dirichlet series; isomorphism-class counts grow too fast";
      return rep;
    }
    case EnumeratedMode::kProfileDirichlet: {
      long guard = std::min<long>(params.cutoff, 6);
      Quad acc = 0;
      for (long d = 1; d <= guard; ++d) {
        Quad dterm = 0;
        Int fact = 1;
        for (long i = 2; i <= d; ++i) fact *= i;
        for (const auto& mu : partitions_of(static_cast<int>(d))) {
          Int csize;
          {
            std::map<int, int> mult;
            for (int t : mu) mult[t]++;
            Int z = 1;
            for (auto [len, k] : mult) {
              for (int i = 0; i < k; ++i) z *= len;
              for (int i = 2; i <= k; ++i) z *= i;
            }
            csize = fact / z;
          }
          Perm s0 = perm_of_type(mu);
          for (const auto& nu : partitions_of(static_cast<int>(d))) {
            std::vector<int> nu_s = nu;
            // count pairs by face count r
            std::map<int, Int> by_r;
            Perm s1 = identity_perm(static_cast<int>(d));
            do {
              if (cycle_type(s1) != nu_s) continue;
              by_r[cycle_count(compose(s0, s1))] += 1;
            } while (std::next_permutation(s1.begin(), s1.end()));
            Quad profile_weight = 1;
            for (int x : mu) profile_weight *= 1 / quad_pow(Quad(x), params.s1);
            for (int x : nu) profile_weight *= 1 / quad_pow(Quad(x), params.sigma1);
            for (const auto& [r, cnt] : by_r) {
              Rational h(csize * cnt, fact);
              Quad hq = Quad(numerator(h).str()) / Quad(denominator(h).str());
              dterm += hq / quad_pow(Quad(r), params.s) * profile_weight;
            }
          }
        }
        rep.terms.push_back(dterm);
        acc += dterm;
      }
      rep.series.value = acc;
      rep.series.cutoff = guard;
      bool growing = rep.terms.size() >= 2 &&
                     rep.terms.back() > rep.terms[rep.terms.size() - 2];
      rep.divergent = growing;
      rep.series.divergent = growing;
      rep.note = "truncation of the formal profile Dirichlet series";
      return rep;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace dessins
