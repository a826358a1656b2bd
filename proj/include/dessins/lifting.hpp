#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

// word in the free group on x0, x1; letters +1/-1 = x0^{±1}, +2/-2 = x1^{±1}
class FreeWord {
public:
  FreeWord() = default;
  static FreeWord gen(int which, bool inv = false);  // which in {0,1}
  static FreeWord parse(const std::string& letters);  // a,A,b,B

  FreeWord operator*(const FreeWord& o) const;  // concatenate + reduce
  FreeWord inverse() const;
  bool operator==(const FreeWord& o) const = default;
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }
  std::string str() const;

  // evaluate in the monodromy of a dessin, letters acting left to right
  int act(const Dessin& D, int e) const;

private:
  void reduce();
  std::vector<int> letters_;
};

struct RamTuple {
  long d = 1, m = 1, n = 1, r = 1;
  bool operator==(const RamTuple&) const = default;
};

// 2x2 / 3x3 integer matrices as flat row-major vectors
using IntMatrix = std::vector<std::vector<long>>;

enum class MatMode { kMat2, kMat2N, kMat3 };
IntMatrix mat_hom(const RamTuple& t, MatMode mode);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
long mat_det2(const IntMatrix& a);

// tuple composition law for normalized maps fixing {0,1,infty} pointwise;
// compose(a, b) is "a first, b after"
RamTuple tuple_compose(const RamTuple& first, const RamTuple& after);

// A Belyi-extending map as a lifting automaton: sheet permutations for the
// loops around 0 and 1 plus, per sheet and generator, the word traced in
// the covered space.
struct LiftingScheme {
  int sheets = 1;
  Perm alpha0, alpha1;
  std::vector<std::array<FreeWord, 2>> words;  // words[i][g]
  bool fixes_three_points = true;  // maps 0,1,infty to themselves pointwise

  RamTuple tuple() const;  // cycle counts of (alpha0, alpha1, alpha0 alpha1)
  Dessin dessin() const { return Dessin(alpha0, alpha1); }
};

LiftingScheme scheme_identity();
LiftingScheme scheme_power(long n);
LiftingScheme scheme_involution();

// compose(first, after): the scheme acting as `after ∘ first` on dessins,
// i.e. apply(compose(s1, s2), D) = apply(s2, apply(s1, D))
LiftingScheme scheme_compose(const LiftingScheme& first, const LiftingScheme& after);

bool scheme_isomorphic(const LiftingScheme& a, const LiftingScheme& b);

// wreath substitution action on dessins; edge (i, e) -> i * deg(D) + e
Dessin apply(const LiftingScheme& s, const Dessin& D, long guard = 10000);

// Riemann-Hurwitz sanity for genus-zero schemes: -d + m + n + r == 2
bool scheme_valid(const LiftingScheme& s);

// ---- words in S = N * Z/2Z and Upsilon = Q*_+ * Z/2Z ---------------------------

struct SemigroupWord {
  int eps0 = 0, eps1 = 0;
  std::vector<Rational> factors;  // each != 1; integral > 1 for S-words

  bool is_identity() const { return eps0 == 0 && eps1 == 0 && factors.empty(); }
  bool integral() const;
  std::string str() const;
};

// n(r) = product of p^{|a_p|} over the prime factorization of r
Int n_of_r(const Rational& r);

// degree weight: product of n(r_i)
Int word_weight_degree(const SemigroupWord& w);
// matrix weight: product of the factors' mat2 images (F acts trivially)
IntMatrix word_weight_mat2(const SemigroupWord& w);

// scheme of an S-word (integral factors), composing outermost-last
LiftingScheme word_to_scheme(const SemigroupWord& w);

// interior words mu_{n1} F mu_{n2} F ... F mu_{nk} with degree <= cutoff;
// exactly P_n words of degree n, the identity for n = 1
std::vector<SemigroupWord> interior_words_up_to(long degree_cutoff);

SemigroupWord parse_word(const std::string& text);  // e.g. "m2 F m3"

}  // namespace dessins
