#include "dessins/bost_connes.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace dessins {

QZ::QZ(long num, long den) {
  if (den < 1) throw std::invalid_argument("QZ: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  long g = std::gcd(num, den);
  a = num / g;
  b = den / g;
  if (a == 0) b = 1;
}

std::string QZ::str() const {
  std::ostringstream os;
  os << a << "/" << b;
  return os.str();
}

GroupAlg e_of(const QZ& r) { return {{r, Rational(1)}}; }

GroupAlg add(const GroupAlg& x, const GroupAlg& y) {
  GroupAlg out = x;
  for (const auto& [r, c] : y) {
    out[r] += c;
    if (out[r] == 0) out.erase(r);
  }
  return out;
}

GroupAlg scale(const GroupAlg& x, const Rational& c) {
  GroupAlg out;
  if (c == 0) return out;
  for (const auto& [r, co] : x) out[r] = co * c;
  return out;
}

GroupAlg bc_sigma(long n, const GroupAlg& x) {
  if (n < 1) throw std::invalid_argument("bc_sigma: n >= 1");
  GroupAlg out;
  for (const auto& [r, c] : x) {
    QZ img(r.a * n, r.b);
    out[img] += c;
    if (out[img] == 0) out.erase(img);
  }
  return out;
}

GroupAlg bc_rho(long n, const GroupAlg& x) {
  if (n < 1) throw std::invalid_argument("bc_rho: n >= 1");
  GroupAlg out;
  for (const auto& [r, c] : x) {
    // solutions of n s = r mod 1: s = (a + k b) / (n b), k = 0..n-1
    for (long k = 0; k < n; ++k) {
      QZ s(r.a + k * r.b, n * r.b);
      out[s] += c;
      if (out[s] == 0) out.erase(s);
    }
  }
  return out;
}

long theta_level(long n, long k) {
  if (n < 1) throw std::invalid_argument("theta_level: n >= 1");
  long v = (1 - k) % n;
  return v < 0 ? v + n : v;
}

QZ ihara_theta(const QZ& r) { return QZ(1 - r.a, r.b); }

GroupAlg ihara_theta(const GroupAlg& x) {
  GroupAlg out;
  for (const auto& [r, c] : x) {
    QZ img = ihara_theta(r);
    out[img] += c;
    if (out[img] == 0) out.erase(img);
  }
  return out;
}

long tower_sigma(long m, long n, long k) {
  (void)m;
  long v = k % n;
  return v < 0 ? v + n : v;
}

MgtGroup mgt_group(long n, long guard) {
  if (n < 1 || n > guard)
    throw GuardError("mgt_group: n outside guard 1.." + std::to_string(guard));
  MgtGroup g;
  g.n = n;
  std::vector<Perm> gens;
  for (long u = 1; u < std::max(n, 2L); ++u) {
    if (std::gcd(u, n) != 1) continue;
    Perm p(n);
    for (long k = 0; k < n; ++k) p[k] = static_cast<int>((u * k) % n);
    gens.push_back(p);
  }
  {
    Perm p(n);
    for (long k = 0; k < n; ++k) p[k] = static_cast<int>(theta_level(n, k));
    gens.push_back(p);
  }
  std::set<Perm> closure(gens.begin(), gens.end());
  closure.insert(identity_perm(static_cast<int>(n)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(closure.begin(), closure.end());
    for (const auto& x : snapshot)
      for (const auto& y : gens) {
        Perm z = compose(x, y);
        if (closure.insert(z).second) grew = true;
      }
  }
  g.elements.assign(closure.begin(), closure.end());
  return g;
}

}  // namespace dessins
