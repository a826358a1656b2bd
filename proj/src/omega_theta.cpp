#include "dessins/omega_theta.hpp"

#include <algorithm>
#include <sstream>

#include "dessins/enumerate.hpp"

namespace dessins {

QTheta QTheta::operator*(const QTheta& o) const {
  // (a0 + a1 t + a2 t^2)(b0 + b1 t + b2 t^2) mod t^3 = 2
  Rational r0 = c0 * o.c0 + 2 * (c1 * o.c2 + c2 * o.c1);
  Rational r1 = c0 * o.c1 + c1 * o.c0 + 2 * c2 * o.c2;
  Rational r2 = c0 * o.c2 + c1 * o.c1 + c2 * o.c0;
  return {r0, r1, r2};
}

Quad QTheta::to_quad() const {
  static const Quad theta = quad_pow(Quad(2), Quad(1) / 3);
  auto q = [](const Rational& r) {
    return Quad(numerator(r).str()) / Quad(denominator(r).str());
  };
  return q(c0) + q(c1) * theta + q(c2) * theta * theta;
}

std::string QTheta::str() const {
  std::ostringstream os;
  os << c0 << " + " << c1 << "·θ + " << c2 << "·θ²";
  return os.str();
}

OmegaElem alpha_act(long d, long m, const OmegaElem& lam) {
  if (d < 1 || m < 1 || m > d) throw std::invalid_argument("alpha_act: need 1 <= m <= d");
  return {d * lam.a, d * lam.b + m - 1};
}

bool alpha_inv_membership(long d, long m, const OmegaElem& lam) {
  if (d < 1 || m < 1 || m > d) throw std::invalid_argument("membership: need 1 <= m <= d");
  return lam.a % d == 0 && lam.b + 1 - m >= 0 && (lam.b + 1 - m) % d == 0;
}

ExtEigenvalue eigenvalue(long d, long m, const OmegaElem& lam) {
  ExtEigenvalue e;
  e.d = d;
  QTheta theta_sq(0, 0, 1);
  QTheta x = d == 1 ? lam.value() : alpha_act(d, m, lam).value();
  e.v = x * x - theta_sq;
  return e;
}

Quad ExtEigenvalue::to_quad() const {
  Quad base = v.to_quad();
  if (d == 1) return base;
  return base * boost::multiprecision::log(Quad(d));
}

namespace {

// d = c^k with c minimal (the primitive base of the multiplicative group
// generated by d)
std::pair<long, int> primitive_base(long d) {
  for (long c = 2; c * c <= d; ++c) {
    long p = c;
    int k = 1;
    while (p < d) {
      p *= c;
      ++k;
    }
    if (p == d) return {c, k};
  }
  return {d, 1};
}

}  // namespace

bool eigenvalues_equal(const ExtEigenvalue& x, const ExtEigenvalue& y) {
  if (x.d == 1 && y.d == 1) return x.v == y.v;
  if (x.d == 1 || y.d == 1) {
    // mixed case: a pure algebraic number equals algebraic * log(d) only
    // when both vanish (log d is transcendental for d > 1)
    return x.v.is_zero() && y.v.is_zero();
  }
  auto [cx, kx] = primitive_base(x.d);
  auto [cy, ky] = primitive_base(y.d);
  if (cx != cy) {
    // log(d_x), log(d_y) linearly independent over Q; by the Baker-style
    // argument used in the source, a nontrivial equality is impossible
    return x.v.is_zero() && y.v.is_zero();
  }
  return x.v * Rational(kx) == y.v * Rational(ky);
}

Int multiplicity(long d, long m) {
  if (d == 1) return 1;
  return 2 + count_labeled_bipartite_trees(static_cast<int>(d), static_cast<int>(m));
}

CensusReport eigenvalue_census(long dmax, long mmax, long amax, long bmax) {
  CensusReport rep;
  std::vector<std::pair<CensusSlot, ExtEigenvalue>> slots;
  for (long d = 1; d <= dmax; ++d)
    for (long m = 1; m <= std::min(d, mmax); ++m) {
      if (d == 1 && m != 1) continue;
      for (long a = 1; a <= amax; ++a)
        for (long b = 0; b <= bmax; ++b)
          slots.push_back({{d, m, a, b}, eigenvalue(d, m, {a, b})});
    }
  std::vector<char> grouped(slots.size(), 0);
  for (size_t i = 0; i < slots.size(); ++i) {
    if (grouped[i]) continue;
    std::vector<CensusSlot> group{slots[i].first};
    grouped[i] = 1;
    for (size_t j = i + 1; j < slots.size(); ++j) {
      if (grouped[j]) continue;
      if (eigenvalues_equal(slots[i].second, slots[j].second)) {
        group.push_back(slots[j].first);
        grouped[j] = 1;
      }
    }
    if (slots[i].second.v.is_zero()) rep.zero_eigenvalue_groups++;
    // allowed coincidences: identical slots in (d, a, and the remainder
    // data (m,b)), or the boundary identification m=1 <-> m=d with a unit
    // shift in b
    for (size_t p = 0; p < group.size(); ++p)
      for (size_t q = p + 1; q < group.size(); ++q) {
        const auto& A = group[p];
        const auto& B = group[q];
        bool same = A.d == B.d && A.a == B.a && A.m == B.m && A.b == B.b;
        bool boundary =
            A.d == B.d && A.a == B.a &&
            ((A.m == 1 && B.m == A.d && B.b == A.b - 1) ||
             (A.m == A.d && B.m == 1 && B.b == A.b + 1));
        if (boundary) rep.extra_cases_seen = true;
        if (!same && !boundary) rep.consistent = false;
      }
    rep.groups.push_back(std::move(group));
  }
  return rep;
}

namespace {

Quad theta_quad() { return quad_pow(Quad(2), Quad(1) / 3); }

// sum over the (a,b) window of e^{-beta (F(d(a theta + b) + m - 1) - F(theta))}
Quad ab_window_sum(Quad beta, long d, long m, long abmax) {
  Quad th = theta_quad();
  Quad acc = 0;
  for (long a = 1; a <= abmax; ++a)
    for (long b = 0; b <= abmax; ++b) {
      Quad x = Quad(d) * (Quad(a) * th + Quad(b)) + Quad(m - 1);
      acc += boost::multiprecision::exp(-beta * (x * x - th * th));
    }
  return acc;
}

}  // namespace

ExtendedZ z_extended(Quad beta, long dmax, long abmax) {
  if (!(beta > 1)) throw std::domain_error("z_extended: beta > 1 required");
  ExtendedZ out;
  Quad th = theta_quad();
  Quad total = 0;
  for (long d = 1; d <= dmax; ++d) {
    Quad block = 0;
    if (d == 1) {
      block = ab_window_sum(beta, 1, 1, abmax);
    } else {
      for (long m = 1; m <= d; ++m) {
        Quad trees(count_labeled_bipartite_trees(static_cast<int>(d),
                                                 static_cast<int>(m)).str());
        block += trees * ab_window_sum(beta, d, m, abmax) / npow(d, beta);
      }
    }
    out.block_values.push_back(block);
    total += block;

    // majorant from the convergence proof: #T_{d,m} <= d^{2d},
    // F(d lambda + m - 1) >= theta^2 d^2 lambda >= theta^2 d^2 (a theta + b)
    Quad q = boost::multiprecision::exp(-beta * th * Quad(d) * Quad(d));
    Quad geom = quad_pow(q, th) / ((1 - quad_pow(q, th)) * (1 - q));
    Quad bound = d == 1
                     ? boost::multiprecision::exp(beta * th * th) * geom
                     : boost::multiprecision::exp(beta * th * th) *
                           quad_pow(Quad(d), Quad(2 * d + 1)) / npow(d, beta) * geom;
    out.block_bounds.push_back(bound);
  }
  out.total.value = total;
  out.total.cutoff = dmax;
  // remainder over d > dmax: the block majorants decay faster than
  // geometrically with ratio < 1/2 in this range
  Quad q = boost::multiprecision::exp(-beta * th * Quad(dmax + 1) * Quad(dmax + 1));
  Quad geom = quad_pow(q, th) / ((1 - quad_pow(q, th)) * (1 - q));
  Quad next = boost::multiprecision::exp(beta * th * th) *
              quad_pow(Quad(dmax + 1), Quad(2 * (dmax + 1) + 1)) /
              npow(dmax + 1, beta) * geom;
  out.total.tail_bound = 2 * next;
  return out;
}

Quad gibbs_extended(int edges_of_D, Quad lambda, Quad beta, long dmax, long abmax) {
  // psi = Z^{-1} ( sum_{d>1,m} #T_{d,m} lambda^{d #E(D)} S_{d,m}(beta)
  //                + lambda^{#E(D)} S_1(beta) )
  Quad num = 0, den = 0;
  for (long d = 1; d <= dmax; ++d) {
    if (d == 1) {
      Quad s = ab_window_sum(beta, 1, 1, abmax);
      num += quad_pow(lambda, Quad(edges_of_D)) * s;
      den += s;
      continue;
    }
    for (long m = 1; m <= d; ++m) {
      Quad trees(count_labeled_bipartite_trees(static_cast<int>(d),
                                               static_cast<int>(m)).str());
      Quad s = trees * ab_window_sum(beta, d, m, abmax) / npow(d, beta);
      num += quad_pow(lambda, Quad(d) * edges_of_D) * s;
      den += s;
    }
  }
  return num / den;
}

}  // namespace dessins
