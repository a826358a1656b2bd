#include "dessins/lifting.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dessins {

FreeWord FreeWord::gen(int which, bool inv) {
  FreeWord w;
  w.letters_.push_back((which + 1) * (inv ? -1 : 1));
  return w;
}

FreeWord FreeWord::parse(const std::string& letters) {
  FreeWord w;
  for (char c : letters) {
    switch (c) {
      case 'a': w.letters_.push_back(1); break;
      case 'A': w.letters_.push_back(-1); break;
      case 'b': w.letters_.push_back(2); break;
      case 'B': w.letters_.push_back(-2); break;
      case ' ': break;
      default: throw std::invalid_argument("word letters must be a, A, b or B");
    }
  }
  w.reduce();
  return w;
}

void FreeWord::reduce() {
  std::vector<int> out;
  for (int l : letters_) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  letters_ = std::move(out);
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord w = *this;
  w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
  w.reduce();
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

std::string FreeWord::str() const {
  std::string s;
  for (int l : letters_) s += (l == 1 ? 'a' : l == -1 ? 'A' : l == 2 ? 'b' : 'B');
  return s;
}

int FreeWord::act(const Dessin& D, int e) const {
  Perm inv0 = dessins::inverse(D.s0), inv1 = dessins::inverse(D.s1);
  for (int l : letters_) {
    switch (l) {
      case 1: e = D.s0[e]; break;
      case -1: e = inv0[e]; break;
      case 2: e = D.s1[e]; break;
      case -2: e = inv1[e]; break;
    }
  }
  return e;
}

// ---- tuples and matrices --------------------------------------------------------

IntMatrix mat_hom(const RamTuple& t, MatMode mode) {
  switch (mode) {
    case MatMode::kMat2: return {{t.d, t.m - 1}, {0, 1}};
    case MatMode::kMat2N: return {{t.d, t.n - 1}, {0, 1}};
    case MatMode::kMat3:
      return {{t.d, t.m - 1, t.n - 1}, {0, 1, 0}, {0, 0, 1}};
  }
  throw std::logic_error("unreachable");
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  IntMatrix r(n, std::vector<long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t l = 0; l < k; ++l) r[i][j] += a[i][l] * b[l][j];
  return r;
}

long mat_det2(const IntMatrix& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

RamTuple tuple_compose(const RamTuple& first, const RamTuple& after) {
  RamTuple t;
  t.d = first.d * after.d;
  t.m = first.d * (after.m - 1) + first.m;
  t.n = first.d * (after.n - 1) + first.n;
  t.r = first.d * (after.r - 1) + first.r;
  return t;
}

// ---- schemes ----------------------------------------------------------------------

RamTuple LiftingScheme::tuple() const {
  RamTuple t;
  t.d = sheets;
  t.m = cycle_count(alpha0);
  t.n = cycle_count(alpha1);
  t.r = cycle_count(compose(alpha0, alpha1));
  return t;
}

LiftingScheme scheme_identity() { return scheme_power(1); }

LiftingScheme scheme_power(long n) {
  if (n < 1) throw std::invalid_argument("scheme_power: n >= 1 required");
  LiftingScheme s;
  s.sheets = static_cast<int>(n);
  s.alpha0.resize(n);
  for (long i = 0; i < n; ++i) s.alpha0[i] = static_cast<int>((i + 1) % n);
  s.alpha1 = identity_perm(static_cast<int>(n));
  s.words.resize(n);
  s.words[n - 1][0] = FreeWord::gen(0);
  s.words[0][1] = FreeWord::gen(1);
  s.fixes_three_points = true;
  return s;
}

LiftingScheme scheme_involution() {
  LiftingScheme s;
  s.sheets = 1;
  s.alpha0 = {0};
  s.alpha1 = {0};
  s.words.resize(1);
  s.words[0][0] = FreeWord::gen(1);
  s.words[0][1] = FreeWord::gen(0);
  s.fixes_three_points = false;  // swaps 0 and 1
  return s;
}

LiftingScheme scheme_compose(const LiftingScheme& first, const LiftingScheme& after) {
  LiftingScheme s;
  s.sheets = after.sheets * first.sheets;
  s.alpha0.resize(s.sheets);
  s.alpha1.resize(s.sheets);
  s.words.resize(s.sheets);
  s.fixes_three_points = first.fixes_three_points && after.fixes_three_points;
  Perm inv_a0 = dessins::inverse(first.alpha0), inv_a1 = dessins::inverse(first.alpha1);
  for (int j = 0; j < after.sheets; ++j) {
    for (int i = 0; i < first.sheets; ++i) {
      int id = j * first.sheets + i;
      for (int g = 0; g < 2; ++g) {
        // push the outer word through the inner automaton letter by letter
        int cur = i;
        FreeWord emitted;
        for (int l : after.words[j][g].letters()) {
          int h = std::abs(l) - 1;
          if (l > 0) {
            emitted = emitted * first.words[cur][h];
            cur = (h == 0 ? first.alpha0 : first.alpha1)[cur];
          } else {
            cur = (h == 0 ? inv_a0 : inv_a1)[cur];
            emitted = emitted * first.words[cur][h].inverse();
          }
        }
        int jg = (g == 0 ? after.alpha0 : after.alpha1)[j];
        (g == 0 ? s.alpha0 : s.alpha1)[id] = jg * first.sheets + cur;
        s.words[id][g] = emitted;
      }
    }
  }
  return s;
}

bool scheme_isomorphic(const LiftingScheme& a, const LiftingScheme& b) {
  if (a.sheets != b.sheets) return false;
  int n = a.sheets;
  Perm ia0 = dessins::inverse(a.alpha0), ia1 = dessins::inverse(a.alpha1);
  // propagate candidate images through the alpha graph from sheet 0
  for (int seed = 0; seed < n; ++seed) {
    std::vector<int> img(n, -1);
    img[0] = seed;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      if (!(a.words[i][0] == b.words[img[i]][0]) || !(a.words[i][1] == b.words[img[i]][1])) {
        ok = false;
        break;
      }
      auto push = [&](int from, int to) {
        if (img[from] < 0) {
          img[from] = to;
          stack.push_back(from);
        } else if (img[from] != to) {
          ok = false;
        }
      };
      push(a.alpha0[i], b.alpha0[img[i]]);
      push(a.alpha1[i], b.alpha1[img[i]]);
      push(ia0[i], dessins::inverse(b.alpha0)[img[i]]);
      push(ia1[i], dessins::inverse(b.alpha1)[img[i]]);
    }
    if (!ok) continue;
    bool total = true;
    std::vector<char> used(n, 0);
    for (int v : img) {
      if (v < 0 || used[v]) {
        total = false;
        break;
      }
      used[v] = 1;
    }
    if (total) return true;  // fully propagated bijection with matching words
  }
  return false;
}

Dessin apply(const LiftingScheme& s, const Dessin& D, long guard) {
  long total = static_cast<long>(s.sheets) * D.degree();
  if (total > guard)
    throw GuardError("apply: composite degree " + std::to_string(total) +
                     " above guard " + std::to_string(guard));
  int dD = D.degree();
  Perm s0(total), s1(total);
  for (int i = 0; i < s.sheets; ++i) {
    for (int e = 0; e < dD; ++e) {
      s0[i * dD + e] = s.alpha0[i] * dD + s.words[i][0].act(D, e);
      s1[i * dD + e] = s.alpha1[i] * dD + s.words[i][1].act(D, e);
    }
  }
  return Dessin(s0, s1);
}

bool scheme_valid(const LiftingScheme& s) {
  if (static_cast<int>(s.alpha0.size()) != s.sheets ||
      static_cast<int>(s.alpha1.size()) != s.sheets ||
      static_cast<int>(s.words.size()) != s.sheets)
    return false;
  if (!is_permutation(s.alpha0) || !is_permutation(s.alpha1)) return false;
  RamTuple t = s.tuple();
  return -t.d + t.m + t.n + t.r == 2;  // genus zero
}

// ---- semigroup words ----------------------------------------------------------------

bool SemigroupWord::integral() const {
  for (const auto& r : factors)
    if (denominator(r) != 1) return false;
  return true;
}

std::string SemigroupWord::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& tok) {
    if (!first) os << " ";
    os << tok;
    first = false;
  };
  if (eps0) emit("F");
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) emit("F");
    std::ostringstream f;
    f << "m" << factors[i];
    emit(f.str());
  }
  if (eps1) emit("F");
  if (first) emit("1");
  return os.str();
}

Int n_of_r(const Rational& r) {
  if (r <= 0) throw std::invalid_argument("n_of_r: positive rationals only");
  // in lowest terms, numerator and denominator share no primes, so
  // prod p^{|a_p|} is just numerator * denominator
  return numerator(r) * denominator(r);
}

Int word_weight_degree(const SemigroupWord& w) {
  Int acc = 1;
  for (const auto& r : w.factors) acc *= n_of_r(r);
  return acc;
}

IntMatrix word_weight_mat2(const SemigroupWord& w) {
  IntMatrix acc = {{1, 0}, {0, 1}};
  for (const auto& r : w.factors) {
    if (denominator(r) != 1)
      throw std::invalid_argument("word_weight_mat2: integral words only");
    RamTuple t;
    t.d = static_cast<long>(numerator(r));
    t.m = 1;
    t.n = t.d;
    t.r = 1;
    acc = mat_mul(acc, mat_hom(t, MatMode::kMat2));
  }
  return acc;
}

LiftingScheme word_to_scheme(const SemigroupWord& w) {
  if (!w.integral()) throw std::invalid_argument("word_to_scheme: integral words only");
  // outermost-last: fold the letters left to right, each new letter the
  // outer factor
  LiftingScheme acc = scheme_identity();
  auto push = [&](const LiftingScheme& outer) { acc = scheme_compose(acc, outer); };
  if (w.eps0) push(scheme_involution());
  for (size_t i = 0; i < w.factors.size(); ++i) {
    if (i) push(scheme_involution());
    push(scheme_power(static_cast<long>(numerator(w.factors[i]))));
  }
  if (w.eps1) push(scheme_involution());
  return acc;
}

std::vector<SemigroupWord> interior_words_up_to(long degree_cutoff) {
  std::vector<SemigroupWord> out;
  SemigroupWord cur;
  std::function<void(long)> rec = [&](long degree) {
    out.push_back(cur);
    for (long f = 2; degree * f <= degree_cutoff; ++f) {
      cur.factors.push_back(Rational(f));
      rec(degree * f);
      cur.factors.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const SemigroupWord& a, const SemigroupWord& b) {
    Int da = word_weight_degree(a), db = word_weight_degree(b);
    if (da != db) return da < db;
    return a.factors < b.factors;
  });
  return out;
}

SemigroupWord parse_word(const std::string& text) {
  SemigroupWord w;
  std::istringstream is(text);
  std::string tok;
  std::vector<std::pair<bool, Rational>> toks;  // (is_F, factor)
  while (is >> tok) {
    if (tok == "F" || tok == "f") toks.emplace_back(true, 0);
    else if (tok == "1") continue;
    else if (tok[0] == 'm') {
      std::string num = tok.substr(1);
      auto slash = num.find('/');
      Rational r = slash == std::string::npos
                       ? Rational(Int(num))
                       : Rational(Int(num.substr(0, slash)), Int(num.substr(slash + 1)));
      if (r == 1) continue;
      toks.emplace_back(false, r);
    } else {
      throw std::invalid_argument("word token must be F, 1 or m<n>: got " + tok);
    }
  }
  // normalize: merge adjacent factors, cancel FF
  std::vector<std::pair<bool, Rational>> norm;
  for (const auto& t : toks) {
    if (!norm.empty() && norm.back().first && t.first) {
      norm.pop_back();  // F F = 1
      continue;
    }
    if (!norm.empty() && !norm.back().first && !t.first) {
      norm.back().second *= t.second;
      if (norm.back().second == 1) norm.pop_back();
      continue;
    }
    norm.push_back(t);
  }
  for (size_t i = 0; i < norm.size(); ++i) {
    if (norm[i].first) {
      if (i == 0) w.eps0 = 1;
      else if (i + 1 == norm.size()) w.eps1 = 1;
      // interior F's are implied by the alternating normal form
    } else {
      w.factors.push_back(norm[i].second);
    }
  }
  return w;
}

}  // namespace dessins
