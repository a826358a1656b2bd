#pragma once

#include <map>
#include <string>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

// element of Q/Z as a reduced fraction a/b with 0 <= a < b
struct QZ {
  long a = 0, b = 1;

  QZ() = default;
  QZ(long num, long den);  // reduces mod 1
  auto operator<=>(const QZ&) const = default;
  std::string str() const;
};

// finitely supported rational combination of group-like generators e(r)
using GroupAlg = std::map<QZ, Rational>;

GroupAlg e_of(const QZ& r);
GroupAlg add(const GroupAlg& x, const GroupAlg& y);
GroupAlg scale(const GroupAlg& x, const Rational& c);

// sigma_n(e(r)) = e(nr)
GroupAlg bc_sigma(long n, const GroupAlg& x);
// rho~_n(e(r)) = sum_{s : ns = r} e(s)
GroupAlg bc_rho(long n, const GroupAlg& x);

// Drinfeld-Ihara involution. The level maps theta_n : k -> 1-k mod n are the
// authoritative family (they commute with the projections sigma_m of the
// tower); on a reduced fraction the formula reads e(a/b) -> e((1-a)/b).
long theta_level(long n, long k);
QZ ihara_theta(const QZ& r);
GroupAlg ihara_theta(const GroupAlg& x);

// sigma_m : Z/nmZ -> Z/nZ, k -> k mod n (power map on roots of unity)
long tower_sigma(long m, long n, long k);

// mGT_n: closure of the multiplication maps by (Z/nZ)^* and theta_n inside
// the symmetric group on Z/nZ
struct MgtGroup {
  long n = 1;
  std::vector<Perm> elements;
  long order() const { return static_cast<long>(elements.size()); }
};

MgtGroup mgt_group(long n, long guard = 12);

}  // namespace dessins
