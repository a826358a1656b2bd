#include "dessins/graph_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dessins/hopf.hpp"

namespace dessins {

MultiPoly MultiPoly::constant(const Rational& c) { return monomial(0, 0, 0, c); }

MultiPoly MultiPoly::monomial(int i, int j, int k, const Rational& c) {
  MultiPoly p;
  p.add({i, j, k}, c);
  return p;
}

void MultiPoly::add(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
  return r;
}

bool MultiPoly::depends_on_z() const {
  for (const auto& [k, c] : terms_)
    if (k[2] != 0) return true;
  return false;
}

int MultiPoly::max_degree_z() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k[2]);
  return m;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = c < 0 ? Rational(-c) : c;
    bool unit = (a == 1) && (k[0] || k[1] || k[2]);
    if (!unit) os << a;
    const char* names[3] = {"x", "y", "z"};
    for (int v = 0; v < 3; ++v) {
      if (k[v] == 0) continue;
      os << names[v];
      if (k[v] != 1) os << "^" << k[v];
    }
    first = false;
  }
  return os.str();
}

MultiPoly multipoly_pow(const MultiPoly& p, int e) {
  MultiPoly r = MultiPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

LaurentPoly LaurentPoly::constant(const Rational& c, int denom) {
  return monomial(0, c, denom);
}

LaurentPoly LaurentPoly::monomial(long num_exp, const Rational& c, int denom) {
  LaurentPoly p(denom);
  p.add(num_exp, c);
  return p;
}

void LaurentPoly::add(long num_exp, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(num_exp);
  if (it == terms_.end()) {
    terms_[num_exp] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

static void align(int da, int db, int& d, long& ma, long& mb) {
  d = std::lcm(da, db);
  ma = d / da;
  mb = d / db;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  int d;
  long ma, mb;
  align(denom_, o.denom_, d, ma, mb);
  LaurentPoly r(d);
  for (const auto& [e, c] : terms_) r.add(e * ma, c);
  for (const auto& [e, c] : o.terms_) r.add(e * mb, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + o * Rational(-1);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  int d;
  long ma, mb;
  align(denom_, o.denom_, d, ma, mb);
  LaurentPoly r(d);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add(ea * ma + eb * mb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly r(denom_);
  for (const auto& [e, co] : terms_) r.add(e, co * c);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  int d;
  long ma, mb;
  align(denom_, o.denom_, d, ma, mb);
  std::map<long, Rational> a, b;
  for (const auto& [e, c] : terms_) a[e * ma] = c;
  for (const auto& [e, c] : o.terms_) b[e * mb] = c;
  return a == b;
}

LaurentPoly LaurentPoly::polar_part() const {
  LaurentPoly r(denom_);
  for (const auto& [e, c] : terms_)
    if (e < 0) r.add(e, c);
  return r;
}

bool LaurentPoly::has_negative_exponent() const {
  return !terms_.empty() && terms_.begin()->first < 0;
}

bool LaurentPoly::has_nonnegative_exponent() const {
  return !terms_.empty() && terms_.rbegin()->first >= 0;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << "t";
      if (e != denom_) {
        os << "^";
        if (e % denom_ == 0) os << (e / denom_);
        else os << "(" << e << "/" << denom_ << ")";
      }
    }
    first = false;
  }
  return os.str();
}

LaurentPoly laurent_pow(const LaurentPoly& p, int e) {
  LaurentPoly r = LaurentPoly::constant(1, p.denom());
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

// ---- state sums ---------------------------------------------------------------

namespace {

struct VertexModel {
  std::vector<int> black, white;  // vertex id per edge
  int vcount = 0;
};

VertexModel vertex_model(const Dessin& D) {
  VertexModel m;
  m.black.assign(D.degree(), 0);
  m.white.assign(D.degree(), 0);
  auto cb = cycles(D.s0), cw = cycles(D.s1);
  for (size_t i = 0; i < cb.size(); ++i)
    for (int e : cb[i]) m.black[e] = static_cast<int>(i);
  for (size_t i = 0; i < cw.size(); ++i)
    for (int e : cw[i]) m.white[e] = static_cast<int>(cb.size() + i);
  m.vcount = static_cast<int>(cb.size() + cw.size());
  return m;
}

int spanning_b0(const VertexModel& m, const std::vector<int>& edges) {
  std::vector<int> parent(m.vcount);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = m.vcount;
  for (int e : edges) {
    int a = find(m.black[e]), b = find(m.white[e]);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace

MultiPoly tutte(const Dessin& D, int guard) {
  int d = D.degree();
  if (d > guard) throw GuardError("tutte: 2^d state sum guard exceeded");
  VertexModel m = vertex_model(D);
  int b0_D = spanning_b0(m, [&] {
    std::vector<int> all(d);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  MultiPoly xm1 = MultiPoly::monomial(1, 0, 0) - MultiPoly::constant(1);
  MultiPoly ym1 = MultiPoly::monomial(0, 1, 0) - MultiPoly::constant(1);
  MultiPoly acc;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> edges;
    for (int e = 0; e < d; ++e)
      if (mask & (1u << e)) edges.push_back(e);
    int b0 = spanning_b0(m, edges);
    int b1 = static_cast<int>(edges.size()) - m.vcount + b0;
    acc = acc + multipoly_pow(xm1, b0 - b0_D) * multipoly_pow(ym1, b1);
  }
  return acc;
}

namespace {

struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

MultiPoly tutte_rec(MultiGraph g) {
  if (g.edges.empty()) return MultiPoly::constant(1);
  auto [a, b] = g.edges.back();
  g.edges.pop_back();
  if (a == b) return MultiPoly::monomial(0, 1, 0) * tutte_rec(g);  // loop
  // bridge test: are a and b still connected without the edge?
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges) parent[find(u)] = find(v);
  bool bridge = find(a) != find(b);
  // contraction: relabel b to a
  MultiGraph contracted = g;
  for (auto& [u, v] : contracted.edges) {
    if (u == b) u = a;
    if (v == b) v = a;
  }
  if (bridge) return MultiPoly::monomial(1, 0, 0) * tutte_rec(contracted);
  return tutte_rec(g) + tutte_rec(contracted);
}

}  // namespace

MultiPoly tutte_deletion_contraction(const Dessin& D) {
  VertexModel m = vertex_model(D);
  MultiGraph g;
  g.n = m.vcount;
  for (int e = 0; e < D.degree(); ++e) g.edges.emplace_back(m.black[e], m.white[e]);
  return tutte_rec(g);
}

MultiPoly brt(const Dessin& D, int guard) {
  int d = D.degree();
  if (d > guard) throw GuardError("brt: 2^d state sum guard exceeded");
  VertexModel m = vertex_model(D);
  std::vector<int> all(d);
  std::iota(all.begin(), all.end(), 0);
  int b0_D = spanning_b0(m, all);
  MultiPoly xm1 = MultiPoly::monomial(1, 0, 0) - MultiPoly::constant(1);
  MultiPoly ym1 = MultiPoly::monomial(0, 1, 0) - MultiPoly::constant(1);
  MultiPoly acc;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> edges;
    for (int e = 0; e < d; ++e)
      if (mask & (1u << e)) edges.push_back(e);
    int b0 = spanning_b0(m, edges);
    int b1 = static_cast<int>(edges.size()) - m.vcount + b0;
    // faces of the state: face-traced on the spanned part plus one disk per
    // isolated vertex
    std::vector<char> touched(m.vcount, 0);
    for (int e : edges) touched[m.black[e]] = touched[m.white[e]] = 1;
    int isolated = 0;
    for (char t : touched) isolated += !t;
    int f = face_count_of_closure(D, edges) + isolated;
    int zexp = b0 + b1 - f;
    if (zexp < 0) throw std::logic_error("brt: negative genus exponent");
    acc = acc + multipoly_pow(xm1, b0 - b0_D) * multipoly_pow(ym1, b1) *
                    MultiPoly::monomial(0, 0, zexp);
  }
  return acc;
}

LaurentPoly specialize(const Dessin& D, Specialization mode) {
  if (mode == Specialization::kJones || mode == Specialization::kMartin) {
    MultiPoly P = tutte(D);
    LaurentPoly out(1);
    for (const auto& [k, c] : P.terms()) {
      auto [i, j, z] = std::tuple{k[0], k[1], k[2]};
      if (mode == Specialization::kJones) {
        Rational sign = (i + j) % 2 == 0 ? 1 : -1;  // (-t)^i (-1/t)^j
        out.add(i - j, c * sign);
      } else {
        out.add(i + j, c);  // diagonal t, t
      }
    }
    return out;
  }
  // Kauffman bracket: t^{2-2#V+#E} BR(-t^4, 1 - t^{-2}(t^2+t^{-2}), (t^2+t^{-2})^2),
  // substituted exactly as printed; the alternate mode reads the second
  // argument as the y-1 shift instead.
  MultiPoly B = brt(D);
  LaurentPoly t2 = LaurentPoly::monomial(2), tm2 = LaurentPoly::monomial(-2);
  LaurentPoly X = LaurentPoly::monomial(4, Rational(-1));
  LaurentPoly printed = LaurentPoly::constant(1) - tm2 * (t2 + tm2);
  LaurentPoly Y = mode == Specialization::kKauffman ? printed
                                                    : LaurentPoly::constant(1) + printed;
  LaurentPoly Z = laurent_pow(t2 + tm2, 2);
  auto r = ramification(D);
  long pre = 2 - 2 * (r.m + r.n_white) + r.d;
  LaurentPoly out = LaurentPoly::monomial(pre, Rational(0));
  out = LaurentPoly(1);
  for (const auto& [k, c] : B.terms()) {
    LaurentPoly term = LaurentPoly::constant(c);
    term = term * laurent_pow(X, k[0]) * laurent_pow(Y, k[1]) * laurent_pow(Z, k[2]);
    out = out + term;
  }
  return out * LaurentPoly::monomial(pre);
}

InvarianceReport invariance_check(const std::vector<std::vector<Dessin>>& orbits) {
  InvarianceReport rep;
  for (size_t oi = 0; oi < orbits.size(); ++oi) {
    const auto& orb = orbits[oi];
    for (size_t i = 0; i + 1 < orb.size(); ++i) {
      if (!(tutte(orb[i]) == tutte(orb[i + 1]))) {
        rep.all_equal = false;
        rep.findings.push_back({static_cast<int>(oi), orb[i], orb[i + 1], "tutte"});
      }
      if (!(brt(orb[i]) == brt(orb[i + 1]))) {
        rep.all_equal = false;
        rep.findings.push_back({static_cast<int>(oi), orb[i], orb[i + 1], "brt"});
      }
    }
  }
  return rep;
}

}  // namespace dessins
