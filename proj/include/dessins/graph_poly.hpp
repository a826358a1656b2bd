#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

// sparse polynomial in x, y, z with rational coefficients
class MultiPoly {
public:
  using Key = std::array<int, 3>;

  static MultiPoly zero() { return {}; }
  static MultiPoly constant(const Rational& c);
  static MultiPoly monomial(int i, int j, int k, const Rational& c = 1);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  void add(const Key& k, const Rational& c);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool depends_on_z() const;
  int max_degree_z() const;
  std::string str() const;

private:
  std::map<Key, Rational> terms_;
};

MultiPoly multipoly_pow(const MultiPoly& p, int e);

// Laurent polynomial in t^{1/denom}; keys are exponents in units of 1/denom
class LaurentPoly {
public:
  explicit LaurentPoly(int denom = 1) : denom_(denom) {}
  static LaurentPoly constant(const Rational& c, int denom = 1);
  static LaurentPoly monomial(long num_exp, const Rational& c = 1, int denom = 1);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& c) const;
  bool operator==(const LaurentPoly& o) const;
  bool is_zero() const { return terms_.empty(); }

  void add(long num_exp, const Rational& c);
  const std::map<long, Rational>& terms() const { return terms_; }
  int denom() const { return denom_; }

  // projection onto strictly negative exponents (the polar part)
  LaurentPoly polar_part() const;
  bool has_negative_exponent() const;
  bool has_nonnegative_exponent() const;
  std::string str() const;

private:
  int denom_;
  std::map<long, Rational> terms_;
};

LaurentPoly laurent_pow(const LaurentPoly& p, int e);

// ---- graph polynomials -------------------------------------------------------

// Tutte polynomial by the spanning-subgraph state sum (2^d states)
MultiPoly tutte(const Dessin& D, int guard = 12);

// Tutte polynomial by deletion-contraction on the underlying multigraph
MultiPoly tutte_deletion_contraction(const Dessin& D);

// Bollobas-Riordan-Tutte state sum; z-exponent of each state is twice the
// genus of the state's surface
MultiPoly brt(const Dessin& D, int guard = 12);

enum class Specialization { kJones, kMartin, kKauffman, kKauffmanAlt };

LaurentPoly specialize(const Dessin& D, Specialization mode);

struct InvarianceFinding {
  int orbit = 0;
  Dessin a, b;
  std::string which;  // "tutte" or "brt"
};

struct InvarianceReport {
  bool all_equal = true;
  std::vector<InvarianceFinding> findings;
};

class OrbitTable;  // from hopf.hpp
InvarianceReport invariance_check(const std::vector<std::vector<Dessin>>& orbits);

}  // namespace dessins
