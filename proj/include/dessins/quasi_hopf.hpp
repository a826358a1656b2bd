#pragma once

#include <map>
#include <string>
#include <vector>

#include "dessins/common.hpp"

namespace dessins {

// exact scalar in Q[x]/(x^m - 1); root-of-unity monomials and their sums
class Cyc {
public:
  Cyc() = default;
  explicit Cyc(int m) : m_(m), c_(m, Rational(0)) {}
  static Cyc zero(int m) { return Cyc(m); }
  static Cyc one(int m) { return root(m, 0); }
  static Cyc root(int m, long k);  // zeta_m^k

  int order() const { return m_; }
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  bool operator==(const Cyc& o) const { return m_ == o.m_ && c_ == o.c_; }
  bool is_zero() const;
  Cyc inverse_root() const;  // inverse of a +-monomial (throws otherwise)
  const std::vector<Rational>& coeffs() const { return c_; }
  std::string str() const;

private:
  int m_ = 0;
  std::vector<Rational> c_;
};

// omega_a(i1,i2,i3) = zeta_m^{a i1 floor((i2+i3)/m)} (the reading under
// which the 3-cocycle identity holds for every m); the literal variant
// reads the printed divisor 3 instead of m
Cyc cocycle(int m, int a, long i1, long i2, long i3, bool literal_three = false);

// standard 3-cocycle (pentagon) identity, exhaustively on (Z/mZ)^4
bool cocycle_identity_holds(int m, int a, bool literal_three = false);
// the printed (garbled) identity, for the record
bool printed_cocycle_identity_holds(int m, int a);

// ---- the twisted double D^omega(Z/mZ) -------------------------------------------

// basis element e^g (x) e_h of the double; tensors are sparse maps from
// index tuples to scalars
using DoubleBasis = std::pair<int, int>;
using Tensor = std::map<std::vector<DoubleBasis>, Cyc>;

struct DoubleAlgebra {
  int m = 2;
  int a = 0;
  bool literal_three = false;

  Cyc omega(long x, long y, long z) const { return cocycle(m, a, x, y, z, literal_three); }
  Cyc theta_g(long g, long h, long hp) const;
  Cyc gamma_h(long h, long x, long y) const;

  Tensor unit(int slots) const;          // tensor power of sum_g e^g (x) e_0
  Tensor basis(int g, int h) const;      // single slot
  Tensor associator() const;             // Phi, 3 slots
  Tensor associator_inverse() const;
  Tensor r_matrix() const;               // R, 2 slots

  Tensor multiply(const Tensor& x, const Tensor& y) const;  // slotwise product
  // coproduct applied to one slot (expands to slots+1), with gamma twist
  Tensor coproduct_slot(const Tensor& x, int slot) const;
  Tensor coproduct_slot_transposed(const Tensor& x, int slot) const;
  // counit applied to one slot (contracts)
  Tensor counit_slot(const Tensor& x, int slot) const;
  // tensor with extra unit slots appended/prepended
  Tensor pad(const Tensor& x, int before, int after) const;
};

struct AxiomReport {
  int m = 0, a = 0;
  bool cocycle_ok = false;
  bool pentagon = false;
  bool quasi_assoc = false;
  bool counit = false;
  bool r_conjugation = false;
  std::string counterexample;
};

AxiomReport verify_axioms(int m, int a, bool literal_three = false, int guard = 6);

struct SystemMapsReport {
  bool pullback_is_cocycle = false;
  bool r_transport_exact = false;  // rho~_n(R_m) == R_{nm}
};

SystemMapsReport system_maps(int n, int m, int a = 1, int guard = 12);

}  // namespace dessins
