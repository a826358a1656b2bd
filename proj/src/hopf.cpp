#include "dessins/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace dessins {

namespace {

// black/white vertex id of each edge (index of its s0/s1 cycle)
struct VertexIds {
  std::vector<int> black, white;
  int blacks = 0, whites = 0;
};

VertexIds vertex_ids(const Dessin& D) {
  VertexIds v;
  v.black.assign(D.degree(), -1);
  v.white.assign(D.degree(), -1);
  auto cb = cycles(D.s0);
  auto cw = cycles(D.s1);
  v.blacks = static_cast<int>(cb.size());
  v.whites = static_cast<int>(cw.size());
  for (size_t i = 0; i < cb.size(); ++i)
    for (int e : cb[i]) v.black[e] = static_cast<int>(i);
  for (size_t i = 0; i < cw.size(); ++i)
    for (int e : cw[i]) v.white[e] = static_cast<int>(i);
  return v;
}

std::vector<std::vector<int>> edge_subset_components(const Dessin& D,
                                                     const std::vector<int>& edges) {
  VertexIds v = vertex_ids(D);
  std::map<int, int> parent;  // edge -> representative
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : edges) parent[e] = e;
  std::map<int, int> by_black, by_white;
  for (int e : edges) {
    auto link = [&](std::map<int, int>& seen, int vid) {
      auto [it, fresh] = seen.try_emplace(vid, e);
      if (!fresh) parent[find(it->second)] = find(e);
    };
    link(by_black, v.black[e]);
    link(by_white, v.white[e]);
  }
  std::map<int, std::vector<int>> groups;
  for (int e : edges) groups[find(e)].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& [rep, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

bool policy_admits(const Dessin& D, const std::vector<int>& edges, SubdessinPolicy p) {
  if (p == SubdessinPolicy::kPaper) return true;
  for (const auto& comp : edge_subset_components(D, edges))
    if (comp.size() < 2) return false;
  if (p == SubdessinPolicy::kMin2Co2 &&
      D.degree() - static_cast<int>(edges.size()) < 2)
    return false;
  return true;
}

}  // namespace

std::vector<Subdessin> enumerate_subdessins(const Dessin& D, SubdessinPolicy policy,
                                            int guard) {
  int d = D.degree();
  if (d > guard)
    throw GuardError("enumerate_subdessins: degree " + std::to_string(d) +
                     " above guard " + std::to_string(guard));
  std::vector<Subdessin> out;
  for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
    std::vector<int> edges;
    for (int e = 0; e < d; ++e)
      if (mask & (1u << e)) edges.push_back(e);
    if (policy_admits(D, edges, policy)) out.push_back({edges});
  }
  return out;
}

std::vector<ComponentBoundary> boundary_components(const Dessin& D, const Subdessin& delta) {
  VertexIds v = vertex_ids(D);
  std::set<int> in_delta(delta.edges.begin(), delta.edges.end());
  std::vector<ComponentBoundary> out;
  for (const auto& comp : edge_subset_components(D, delta.edges)) {
    ComponentBoundary cb;
    cb.edges = comp;
    std::set<int> comp_edges(comp.begin(), comp.end());
    std::set<int> blacks, whites;
    for (int e : comp) {
      blacks.insert(v.black[e]);
      whites.insert(v.white[e]);
    }
    // all flags at the component's vertices
    std::set<Flag> flags;
    for (int e = 0; e < D.degree(); ++e) {
      if (blacks.count(v.black[e])) flags.insert({e, 0});
      if (whites.count(v.white[e])) flags.insert({e, 1});
    }
    auto next_in_face = [&](Flag f) -> Flag {
      if (comp_edges.count(f.edge)) {
        int o = 1 - f.color;  // cross the edge, then rotate at that end
        int e2 = o == 0 ? D.s0[f.edge] : D.s1[f.edge];
        return {e2, o};
      }
      int e2 = f.color == 0 ? D.s0[f.edge] : D.s1[f.edge];  // bounce off a stub
      return {e2, f.color};
    };
    std::set<Flag> seen;
    for (const Flag& start : flags) {
      if (seen.count(start)) continue;
      BoundaryCircle circle;
      Flag f = start;
      do {
        seen.insert(f);
        if (!comp_edges.count(f.edge)) circle.push_back(f);
        f = next_in_face(f);
      } while (!(f == start));
      if (!circle.empty()) {
        auto least = std::min_element(circle.begin(), circle.end());
        std::rotate(circle.begin(), least, circle.end());
      }
      cb.circles.push_back(std::move(circle));
    }
    std::sort(cb.circles.begin(), cb.circles.end(),
              [](const BoundaryCircle& a, const BoundaryCircle& b) {
                if (a.empty() != b.empty()) return b.empty();
                return a < b;
              });
    out.push_back(std::move(cb));
  }
  return out;
}

std::vector<QuotientChoice> all_quotient_choices(const std::vector<ComponentBoundary>& b) {
  // per component: all cyclic orderings of its circles = permutations fixing 0 first
  std::vector<std::vector<std::vector<int>>> per_comp;
  for (const auto& cb : b) {
    int k = static_cast<int>(cb.circles.size());
    std::vector<std::vector<int>> orders;
    std::vector<int> rest(std::max(0, k - 1));
    std::iota(rest.begin(), rest.end(), 1);
    do {
      std::vector<int> ord{0};
      ord.insert(ord.end(), rest.begin(), rest.end());
      orders.push_back(ord);
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (k == 0) orders.push_back({});
    per_comp.push_back(std::move(orders));
  }
  std::vector<QuotientChoice> out{{}};
  for (const auto& orders : per_comp) {
    std::vector<QuotientChoice> next;
    for (const auto& partial : out)
      for (const auto& ord : orders) {
        QuotientChoice qc = partial;
        qc.push_back(ord);
        next.push_back(std::move(qc));
      }
    out = std::move(next);
  }
  return out;
}

Dessin quotient(const Dessin& D, const Subdessin& delta, const QuotientChoice& choice) {
  VertexIds v = vertex_ids(D);
  auto boundaries = boundary_components(D, delta);
  if (choice.size() != boundaries.size())
    throw std::invalid_argument("quotient: choice does not match component count");
  std::set<int> in_delta(delta.edges.begin(), delta.edges.end());

  // new edge ids: kept edges in ascending order, then one connecting edge
  // per component
  std::map<int, int> new_id;
  for (int e = 0; e < D.degree(); ++e)
    if (!in_delta.count(e)) new_id[e] = static_cast<int>(new_id.size());
  int kept = static_cast<int>(new_id.size());
  int total = kept + static_cast<int>(boundaries.size());

  std::set<int> delta_blacks, delta_whites;
  for (int e : delta.edges) {
    delta_blacks.insert(v.black[e]);
    delta_whites.insert(v.white[e]);
  }

  std::vector<std::vector<int>> black_cycles, white_cycles;
  for (const auto& cyc : cycles(D.s0)) {
    if (delta_blacks.count(v.black[cyc[0]])) continue;
    std::vector<int> c;
    for (int e : cyc) c.push_back(new_id.at(e));
    black_cycles.push_back(std::move(c));
  }
  for (const auto& cyc : cycles(D.s1)) {
    if (delta_whites.count(v.white[cyc[0]])) continue;
    std::vector<int> c;
    for (int e : cyc) c.push_back(new_id.at(e));
    white_cycles.push_back(std::move(c));
  }

  for (size_t ci = 0; ci < boundaries.size(); ++ci) {
    const auto& cb = boundaries[ci];
    const auto& order = choice[ci];
    if (order.size() != cb.circles.size())
      throw std::invalid_argument("quotient: bad circle ordering length");
    int conn = kept + static_cast<int>(ci);
    std::vector<int> bcyc{conn}, wcyc{conn};
    for (int idx : order) {
      if (idx < 0 || idx >= static_cast<int>(cb.circles.size()))
        throw std::invalid_argument("quotient: circle index out of range");
      for (const Flag& f : cb.circles[idx])
        (f.color == 0 ? bcyc : wcyc).push_back(new_id.at(f.edge));
    }
    black_cycles.push_back(std::move(bcyc));
    white_cycles.push_back(std::move(wcyc));
  }

  Perm s0(total), s1(total);
  auto fill = [](Perm& p, const std::vector<std::vector<int>>& cycs) {
    for (const auto& c : cycs)
      for (size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  };
  fill(s0, black_cycles);
  fill(s1, white_cycles);
  return Dessin(s0, s1);
}

int face_count_of_closure(const Dessin& D, const std::vector<int>& edges) {
  if (edges.empty()) return 0;
  Dessin sub = restrict_to_edges(D, edges);
  return cycle_count(sub.faces());
}

// ---- monomials and elements -------------------------------------------------

Monomial Monomial::from_dessin(const Dessin& D) {
  Monomial m;
  for (const auto& c : components(D)) m.factors.push_back(canonical_form(c));
  std::sort(m.factors.begin(), m.factors.end());
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  m.factors.insert(m.factors.end(), o.factors.begin(), o.factors.end());
  std::sort(m.factors.begin(), m.factors.end());
  return m;
}

int Monomial::total_edges() const {
  int t = 0;
  for (const auto& D : factors) t += D.degree();
  return t;
}

HopfElement hopf_zero() { return {}; }

HopfElement hopf_scalar(const Rational& c) {
  HopfElement x;
  if (c != 0) x[Monomial::one()] = c;
  return x;
}

HopfElement hopf_of(const Dessin& D) {
  HopfElement x;
  x[Monomial::from_dessin(D)] = 1;
  return x;
}

void add_to(HopfElement& a, const Monomial& m, const Rational& c) {
  auto it = a.find(m);
  if (it == a.end()) {
    if (c != 0) a[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) a.erase(it);
}

HopfElement hopf_mul(const HopfElement& a, const HopfElement& b) {
  HopfElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_to(out, ma * mb, ca * cb);
  return out;
}

long grade(const Monomial& m, Grading g) {
  long total = 0;
  for (const auto& D : m.factors) {
    auto r = ramification(D);
    switch (g) {
      case Grading::kLoops: total += r.d - (r.m + r.n_white) + r.b0; break;
      case Grading::kEdges: total += r.d - r.b0; break;
      case Grading::kVertices: total += (r.m + r.n_white) - 2 * r.b0; break;
    }
  }
  return total;
}

// ---- orbit tables -----------------------------------------------------------

OrbitTable::OrbitTable(const std::vector<std::vector<Dessin>>& orbits) {
  for (const auto& orb : orbits) {
    std::vector<Dessin> canon;
    for (const auto& D : orb) {
      Dessin c = canonical_form(D);
      if (index_.count(c)) throw std::invalid_argument("orbit table lists a dessin twice");
      index_[c] = static_cast<int>(orbits_.size());
      canon.push_back(c);
    }
    orbits_.push_back(std::move(canon));
  }
}

int OrbitTable::orbit_of(const Dessin& canonical) const {
  auto it = index_.find(canonical);
  if (it == index_.end())
    throw CoverageError("orbit table does not cover dessin " + to_text(canonical));
  return it->second;
}

bool OrbitTable::covers(const Dessin& canonical) const { return index_.count(canonical) > 0; }

bool OrbitTable::same_orbit(const Dessin& a, const Dessin& b) const {
  return orbit_of(canonical_form(a)) == orbit_of(canonical_form(b));
}

// ---- coproduct ---------------------------------------------------------------

static void add_term(Tensor2& t, const Monomial& l, const Monomial& r, const Rational& c) {
  auto key = std::make_pair(l, r);
  auto it = t.find(key);
  if (it == t.end()) {
    if (c != 0) t[key] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) t.erase(it);
}

Tensor2 HopfContext::coproduct(const Dessin& dessin) {
  Dessin D = canonical_form(dessin);
  if (!is_connected(D)) return coproduct_monomial(Monomial::from_dessin(D));
  auto it = coproduct_cache_.find(D);
  if (it != coproduct_cache_.end()) return it->second;

  Tensor2 t;
  Monomial mD = Monomial::from_dessin(D);
  add_term(t, mD, Monomial::one(), 1);
  add_term(t, Monomial::one(), mD, 1);
  for (const auto& delta : enumerate_subdessins(D, policy_, guard_)) {
    Monomial left = Monomial::from_dessin(restrict_to_edges(D, delta.edges));
    auto boundaries = boundary_components(D, delta);
    for (const auto& ch : all_quotient_choices(boundaries)) {
      Monomial right = Monomial::from_dessin(quotient(D, delta, ch));
      add_term(t, left, right, 1);
    }
  }
  coproduct_cache_[D] = t;
  return t;
}

Tensor2 HopfContext::coproduct_monomial(const Monomial& m) {
  Tensor2 acc;
  add_term(acc, Monomial::one(), Monomial::one(), 1);
  for (const auto& D : m.factors) {
    Tensor2 factor = coproduct(D);
    Tensor2 next;
    for (const auto& [lr1, c1] : acc)
      for (const auto& [lr2, c2] : factor)
        add_term(next, lr1.first * lr2.first, lr1.second * lr2.second, c1 * c2);
    acc = std::move(next);
  }
  return acc;
}

Tensor2 HopfContext::coproduct(const Monomial& m) { return coproduct_monomial(m); }

Tensor2 HopfContext::coproduct(const HopfElement& x) {
  Tensor2 out;
  for (const auto& [m, c] : x)
    for (const auto& [lr, c2] : coproduct_monomial(m))
      add_term(out, lr.first, lr.second, c * c2);
  return out;
}

// signature of a coproduct term for the balanced test: orbit ids of the
// subdessin components plus orbit id of the quotient
namespace {
struct PairSig {
  std::vector<int> sub_orbits;
  int quot_orbit;
  auto operator<=>(const PairSig&) const = default;
};
}  // namespace

static std::set<PairSig> pair_signatures(const Dessin& D, SubdessinPolicy policy, int guard,
                                         const OrbitTable& table) {
  std::set<PairSig> sigs;
  for (const auto& delta : enumerate_subdessins(D, policy, guard)) {
    Monomial left = Monomial::from_dessin(restrict_to_edges(D, delta.edges));
    std::vector<int> sub;
    for (const auto& c : left.factors) sub.push_back(table.orbit_of(c));
    std::sort(sub.begin(), sub.end());
    auto boundaries = boundary_components(D, delta);
    for (const auto& ch : all_quotient_choices(boundaries)) {
      Dessin q = canonical_form(quotient(D, delta, ch));
      sigs.insert({sub, table.orbit_of(q)});
    }
  }
  return sigs;
}

bool HopfContext::pair_balanced(const Dessin& D, const Subdessin& delta,
                                const OrbitTable& table) {
  Dessin Dc = canonical_form(D);
  int orbit = table.orbit_of(Dc);
  Monomial left = Monomial::from_dessin(restrict_to_edges(D, delta.edges));
  std::vector<int> sub;
  for (const auto& c : left.factors) sub.push_back(table.orbit_of(c));
  std::sort(sub.begin(), sub.end());

  std::set<PairSig> mine;
  auto boundaries = boundary_components(D, delta);
  for (const auto& ch : all_quotient_choices(boundaries)) {
    Dessin q = canonical_form(quotient(D, delta, ch));
    mine.insert({sub, table.orbit_of(q)});
  }
  for (const auto& other : table.orbits()[orbit]) {
    auto sigs = pair_signatures(other, policy_, guard_, table);
    for (const auto& s : mine)
      if (!sigs.count(s)) return false;
  }
  return true;
}

bool HopfContext::strongly_balanced(const Dessin& D, const Subdessin& delta,
                                    const OrbitTable& table) {
  if (!pair_balanced(D, delta, table)) return false;
  // every policy-admissible sub-subset of delta must give a balanced pair too
  size_t k = delta.edges.size();
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<int> edges;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) edges.push_back(delta.edges[i]);
    if (!policy_admits(D, edges, policy_)) continue;
    if (!pair_balanced(D, {edges}, table)) return false;
  }
  return true;
}

Tensor2 HopfContext::coproduct_balanced(const HopfElement& x, const OrbitTable& table) {
  Tensor2 out;
  for (const auto& [m, coeff] : x) {
    Tensor2 acc;
    add_term(acc, Monomial::one(), Monomial::one(), 1);
    for (const auto& D : m.factors) {
      Tensor2 factor;
      Monomial mD = Monomial::from_dessin(D);
      add_term(factor, mD, Monomial::one(), 1);
      add_term(factor, Monomial::one(), mD, 1);
      for (const auto& delta : enumerate_subdessins(D, policy_, guard_)) {
        if (!strongly_balanced(D, delta, table)) continue;
        Monomial left = Monomial::from_dessin(restrict_to_edges(D, delta.edges));
        auto boundaries = boundary_components(D, delta);
        for (const auto& ch : all_quotient_choices(boundaries))
          add_term(factor, left, Monomial::from_dessin(quotient(D, delta, ch)), 1);
      }
      Tensor2 next;
      for (const auto& [lr1, c1] : acc)
        for (const auto& [lr2, c2] : factor)
          add_term(next, lr1.first * lr2.first, lr1.second * lr2.second, c1 * c2);
      acc = std::move(next);
    }
    for (const auto& [lr, c] : acc) add_term(out, lr.first, lr.second, coeff * c);
  }
  return out;
}

// ---- antipode ----------------------------------------------------------------

HopfElement HopfContext::antipode_connected(const Dessin& canonical) {
  auto it = antipode_cache_.find(canonical);
  if (it != antipode_cache_.end()) return it->second;
  Monomial mD = Monomial::from_dessin(canonical);
  // S(D) = -D - sum S(D') D'' over the reduced coproduct
  HopfElement acc;
  add_to(acc, mD, -1);
  for (const auto& [lr, c] : coproduct(canonical)) {
    const auto& [l, r] = lr;
    if (l == Monomial::one() || r == Monomial::one()) continue;
    HopfElement sl = hopf_scalar(1);
    for (const auto& f : l.factors) sl = hopf_mul(sl, antipode_connected(f));
    for (auto& [m2, c2] : sl) add_to(acc, m2 * r, -c * c2);
  }
  antipode_cache_[canonical] = acc;
  return acc;
}

HopfElement HopfContext::antipode(const HopfElement& x) {
  HopfElement out;
  for (const auto& [m, c] : x) {
    HopfElement term = hopf_scalar(c);
    for (const auto& D : m.factors) term = hopf_mul(term, antipode_connected(D));
    for (const auto& [m2, c2] : term) add_to(out, m2, c2);
  }
  return out;
}

Rational counit(const HopfElement& x) {
  auto it = x.find(Monomial::one());
  return it == x.end() ? Rational(0) : it->second;
}

Character<Rational> character_edgecount(const Rational& lambda) {
  if (abs(numerator(lambda)) > abs(denominator(lambda)))
    throw std::invalid_argument("character_edgecount: |lambda| <= 1 required");
  return Character<Rational>(
      [lambda](const Dessin& D) {
        Rational v = 1;
        for (int i = 0; i < D.degree(); ++i) v *= lambda;
        return v;
      },
      Rational(1));
}

// ---- checks ------------------------------------------------------------------

std::string to_string(const Monomial& m) {
  if (m.factors.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < m.factors.size(); ++i)
    os << (i ? " * " : "") << "[" << to_text(m.factors[i]) << "]";
  return os.str();
}

std::string to_string(const Tensor2& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [lr, c] : t) {
    os << (first ? "" : " + ") << c << "·(" << to_string(lr.first) << " ⊗ "
       << to_string(lr.second) << ")";
    first = false;
  }
  return os.str();
}

CoassocReport check_coassociative(HopfContext& ctx, const Dessin& D) {
  Tensor2 delta = ctx.coproduct(canonical_form(D));
  Tensor3 lhs, rhs;
  auto add3 = [](Tensor3& t, const Monomial& a, const Monomial& b, const Monomial& c,
                 const Rational& coeff) {
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
      if (coeff != 0) t[key] = coeff;
      return;
    }
    it->second += coeff;
    if (it->second == 0) t.erase(it);
  };
  for (const auto& [lr, c] : delta) {
    for (const auto& [ab, c2] : ctx.coproduct(lr.first))
      add3(lhs, ab.first, ab.second, lr.second, c * c2);
    for (const auto& [ab, c2] : ctx.coproduct(lr.second))
      add3(rhs, lr.first, ab.first, ab.second, c * c2);
  }
  CoassocReport rep;
  if (lhs == rhs) return rep;
  rep.ok = false;
  for (const auto& [k, c] : lhs) {
    auto it = rhs.find(k);
    if (it == rhs.end() || it->second != c) {
      std::ostringstream os;
      os << "term " << to_string(std::get<0>(k)) << " ⊗ " << to_string(std::get<1>(k))
         << " ⊗ " << to_string(std::get<2>(k)) << ": lhs " << c << " vs rhs "
         << (it == rhs.end() ? Rational(0) : it->second);
      rep.counterexample = os.str();
      return rep;
    }
  }
  for (const auto& [k, c] : rhs) {
    if (!lhs.count(k)) {
      std::ostringstream os;
      os << "term " << to_string(std::get<0>(k)) << " ⊗ " << to_string(std::get<1>(k))
         << " ⊗ " << to_string(std::get<2>(k)) << ": lhs 0 vs rhs " << c;
      rep.counterexample = os.str();
      return rep;
    }
  }
  return rep;
}

bool check_counit(HopfContext& ctx, const Dessin& D) {
  HopfElement x = hopf_of(D);
  Tensor2 delta = ctx.coproduct(x);
  HopfElement left, right;
  for (const auto& [lr, c] : delta) {
    if (lr.first == Monomial::one()) add_to(left, lr.second, c);
    if (lr.second == Monomial::one()) add_to(right, lr.first, c);
  }
  return left == x && right == x;
}

bool check_antipode_convolution(HopfContext& ctx, const Dessin& D) {
  // m(S ⊗ id) Δ(D) = ε(D) 1 = 0 for a nonempty dessin
  HopfElement acc;
  for (const auto& [lr, c] : ctx.coproduct(canonical_form(D))) {
    HopfElement sl = ctx.antipode(HopfElement{{lr.first, Rational(1)}});
    for (const auto& [m, c2] : sl) add_to(acc, m * lr.second, c * c2);
  }
  return acc.empty();
}

}  // namespace dessins
