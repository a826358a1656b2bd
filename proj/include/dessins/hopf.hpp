#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

// Which edge subsets enter the coproduct sum. `kPaper` is the literal
// convention (every proper nonempty edge subset). The restricted classes
// exclude single-edge components, and `kMin2Co2` additionally requires at
// least two edges outside the subdessin; that class keeps the coproduct
// coassociative through degree 4 (see README and the coassociativity
// checks in the acceptance suite for the exact scope of each class).
enum class SubdessinPolicy { kPaper, kMin2, kMin2Co2 };

// A subdessin of a fixed ambient dessin: an edge subset, vertices induced.
struct Subdessin {
  std::vector<int> edges;
};

// flag = half-edge: (edge, 0) is the black end, (edge, 1) the white end
struct Flag {
  int edge;
  int color;
  bool operator==(const Flag& o) const = default;
  auto operator<=>(const Flag& o) const = default;
};

// One boundary circle of a tubular neighborhood of a subdessin component:
// the cyclic sequence of external flags met while tracing it. Canonically
// rotated to start at the least flag.
using BoundaryCircle = std::vector<Flag>;

struct ComponentBoundary {
  std::vector<int> edges;                 // the component's internal edges
  std::vector<BoundaryCircle> circles;    // its boundary circles
};

// ribbon choice: for every component, a cyclic ordering of its circles
// (permutation of circle indices, canonical representative starting at 0)
using QuotientChoice = std::vector<std::vector<int>>;

std::vector<Subdessin> enumerate_subdessins(
    const Dessin& D, SubdessinPolicy policy = SubdessinPolicy::kPaper, int guard = 6);

std::vector<ComponentBoundary> boundary_components(const Dessin& D, const Subdessin& delta);

std::vector<QuotientChoice> all_quotient_choices(const std::vector<ComponentBoundary>& b);

Dessin quotient(const Dessin& D, const Subdessin& delta, const QuotientChoice& choice);

// number of boundary circles == number of faces of the closure (used both
// here and by the Bollobas-Riordan state sum)
int face_count_of_closure(const Dessin& D, const std::vector<int>& edges);

// ---- the Hopf algebra ------------------------------------------------------

// monomial: multiset of connected canonical dessins; empty = 1
struct Monomial {
  std::vector<Dessin> factors;

  static Monomial one() { return {}; }
  static Monomial from_dessin(const Dessin& D);  // splits and canonicalizes
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const = default;
  bool operator<(const Monomial& o) const { return factors < o.factors; }
  int total_edges() const;
};

using HopfElement = std::map<Monomial, Rational>;
using Tensor2 = std::map<std::pair<Monomial, Monomial>, Rational>;
using Tensor3 = std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>;

HopfElement hopf_zero();
HopfElement hopf_scalar(const Rational& c);
HopfElement hopf_of(const Dessin& D);
void add_to(HopfElement& a, const Monomial& m, const Rational& c);
HopfElement hopf_mul(const HopfElement& a, const HopfElement& b);

enum class Grading { kLoops, kEdges, kVertices };
long grade(const Monomial& m, Grading g);

// orbit tables drive the balanced coproduct and invariance checks
class OrbitTable {
public:
  OrbitTable() = default;
  explicit OrbitTable(const std::vector<std::vector<Dessin>>& orbits);
  // orbit id of a canonical dessin; throws CoverageError when absent
  int orbit_of(const Dessin& canonical) const;
  bool covers(const Dessin& canonical) const;
  bool same_orbit(const Dessin& a, const Dessin& b) const;
  const std::vector<std::vector<Dessin>>& orbits() const { return orbits_; }

private:
  std::vector<std::vector<Dessin>> orbits_;
  std::map<Dessin, int> index_;
};

class CoverageError : public std::invalid_argument {
public:
  explicit CoverageError(const std::string& w) : std::invalid_argument(w) {}
};

class HopfContext {
public:
  explicit HopfContext(SubdessinPolicy policy = SubdessinPolicy::kMin2Co2, int guard = 6)
      : policy_(policy), guard_(guard) {}

  SubdessinPolicy policy() const { return policy_; }
  int guard() const { return guard_; }

  Tensor2 coproduct(const Dessin& connected);  // memoized, canonical input
  Tensor2 coproduct(const HopfElement& x);
  Tensor2 coproduct(const Monomial& m);

  // restricted to strongly balanced subdessins w.r.t. the orbit table
  Tensor2 coproduct_balanced(const HopfElement& x, const OrbitTable& table);

  HopfElement antipode(const HopfElement& x);

private:
  Tensor2 coproduct_monomial(const Monomial& m);
  HopfElement antipode_connected(const Dessin& canonical);
  bool pair_balanced(const Dessin& D, const Subdessin& delta, const OrbitTable& table);
  bool strongly_balanced(const Dessin& D, const Subdessin& delta, const OrbitTable& table);

  SubdessinPolicy policy_;
  int guard_;
  std::map<Dessin, Tensor2> coproduct_cache_;
  std::map<Dessin, HopfElement> antipode_cache_;
};

// counit: coefficient of the empty monomial
Rational counit(const HopfElement& x);

// ---- characters ------------------------------------------------------------

// characters are generator maps on connected canonical dessins, extended
// multiplicatively; T is the (commutative) target algebra
template <typename T>
class Character {
public:
  using Fn = std::function<T(const Dessin&)>;
  Character(Fn fn, T one) : fn_(std::move(fn)), one_(std::move(one)) {}

  T operator()(const Monomial& m) const {
    T acc = one_;
    for (const auto& D : m.factors) acc = acc * fn_(D);
    return acc;
  }
  T operator()(const Dessin& D) const { return (*this)(Monomial::from_dessin(D)); }
  const T& one() const { return one_; }
  const Fn& generator_map() const { return fn_; }

private:
  Fn fn_;
  T one_;
};

template <typename T>
T convolve(const Character<T>& f, const Character<T>& g, const Tensor2& delta) {
  T acc = f.one() - f.one();  // zero
  for (const auto& [lr, c] : delta) {
    T term = f(lr.first) * g(lr.second);
    acc = acc + term * c;
  }
  return acc;
}

// edge-count character D -> lambda^{#E(D)}, |lambda| <= 1 enforced
Character<Rational> character_edgecount(const Rational& lambda);

// ---- verification helpers ---------------------------------------------------

struct CoassocReport {
  bool ok = true;
  std::string counterexample;  // first differing tensor term, if any
};

CoassocReport check_coassociative(HopfContext& ctx, const Dessin& D);
bool check_counit(HopfContext& ctx, const Dessin& D);
bool check_antipode_convolution(HopfContext& ctx, const Dessin& D);

std::string to_string(const Monomial& m);
std::string to_string(const Tensor2& t);

}  // namespace dessins
