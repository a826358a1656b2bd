#pragma once

#include <map>
#include <vector>

#include "dessins/graph_poly.hpp"
#include "dessins/hopf.hpp"

namespace dessins {

// polynomial in the basis pi_n(t) = t(t+1)...(t+n-1)/n!, pi_0 = 1
class PiPoly {
public:
  static PiPoly zero() { return {}; }
  static PiPoly basis(int n, const Rational& c = 1);
  static PiPoly from_monomial_coeffs(const std::vector<Rational>& c);

  PiPoly operator+(const PiPoly& o) const;
  PiPoly operator-(const PiPoly& o) const;
  PiPoly operator*(const PiPoly& o) const;
  PiPoly operator*(const Rational& c) const;
  bool operator==(const PiPoly& o) const { return coeff_ == o.coeff_; }

  void add(int n, const Rational& c);
  const std::map<int, Rational>& coeffs() const { return coeff_; }
  Rational coeff(int n) const;
  std::vector<Rational> monomial_coeffs() const;
  Rational eval(const Rational& t) const;

  PiPoly shift() const;  // the Rota-Baxter operator T: pi_n -> pi_{n+1}
  std::string str() const;

private:
  std::map<int, Rational> coeff_;
};

// u_{m,n,k}: pi_m pi_n = sum_k u_{m,n,k} pi_k; exact, k = 0..m+n
std::vector<Rational> structure_constants(int m, int n, int guard = 30);

// ---- the two Rota-Baxter contexts of weight -1 --------------------------------

// A value in either carrier algebra. Polar context: Laurent polynomials
// with T = projection onto strictly negative exponents. Pi context: Q[t]
// in the pi basis with T(pi_n) = pi_{n+1}.
class RBValue {
public:
  RBValue() = default;
  explicit RBValue(LaurentPoly p) : laurent_(std::move(p)), is_pi_(false) {}
  explicit RBValue(PiPoly p) : pi_(std::move(p)), is_pi_(true) {}

  bool is_pi() const { return is_pi_; }
  const LaurentPoly& laurent() const { return laurent_; }
  const PiPoly& pi() const { return pi_; }

  RBValue operator+(const RBValue& o) const;
  RBValue operator-(const RBValue& o) const;
  RBValue operator*(const RBValue& o) const;
  RBValue operator*(const Rational& c) const;
  bool operator==(const RBValue& o) const;
  std::string str() const;

private:
  LaurentPoly laurent_{1};
  PiPoly pi_;
  bool is_pi_ = false;
};

enum class RBContextKind { kLaurentPolar, kPiBasis };

// Carrier algebra plus its weight -1 operator; construction self-tests the
// Rota-Baxter relation on a deterministic sample.
class RBContext {
public:
  explicit RBContext(RBContextKind kind, bool self_test = true);

  RBContextKind kind() const { return kind_; }
  RBValue zero() const;
  RBValue one() const;
  RBValue apply_T(const RBValue& v) const;
  RBValue random_element(Rng& rng) const;
  bool in_minus_part(const RBValue& v) const;  // image of T (plus scalars for pi)
  bool in_plus_part(const RBValue& v) const;   // image of 1 - T
  bool relation_holds(const RBValue& x, const RBValue& y) const;

private:
  RBContextKind kind_;
};

// ---- Birkhoff factorization ----------------------------------------------------

struct BirkhoffFactorization {
  std::map<Dessin, RBValue> minus, plus;  // values on connected generators
  RBValue value_minus(const Monomial& m, const RBContext& ctx) const;
  RBValue value_plus(const Monomial& m, const RBContext& ctx) const;
};

// phi is a character given on connected canonical dessins
BirkhoffFactorization birkhoff(const Character<RBValue>& phi, const RBContext& ctx,
                               HopfContext& hopf, const std::vector<Dessin>& generators);

// reconstruction check: (phi_minus o S) * phi_plus == phi on D
bool birkhoff_reconstructs(const Character<RBValue>& phi, const RBContext& ctx,
                           HopfContext& hopf, const Dessin& D);

// ---- refined invariants (Prop. newGalois shape) --------------------------------

struct RefinedInvariant {
  LaurentPoly jones_minus{1}, jones_plus{1};
  PiPoly martin_minus, martin_plus;
};

enum class RefinedMode { kJones, kMartin };

// direct recursion in the printed shape (jones: polar projection of the
// specialization; martin: coefficient recursion through u_{m,n,k})
RefinedInvariant refined_invariant(const Dessin& D, RefinedMode mode, HopfContext& hopf);

// characters feeding the generic Birkhoff route for the cross-check
Character<RBValue> jones_character();
Character<RBValue> martin_character();

}  // namespace dessins
