#include "dessins/dessin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace dessins {

Dessin::Dessin(Perm sigma0, Perm sigma1) : s0(std::move(sigma0)), s1(std::move(sigma1)) {
  if (s0.size() != s1.size())
    throw std::invalid_argument("sigma0 and sigma1 act on different edge sets");
  if (s0.empty()) throw std::invalid_argument("a dessin needs at least one edge");
  if (!is_permutation(s0) || !is_permutation(s1))
    throw std::invalid_argument("sigma0/sigma1 must be bijections");
}

Perm Dessin::faces() const { return inverse(compose(s0, s1)); }

Dessin from_permutations(const Perm& s0, const Perm& s1) { return Dessin(s0, s1); }

std::vector<std::vector<int>> component_edge_sets(const Dessin& D) {
  int d = D.degree();
  std::vector<int> comp(d, -1);
  int nc = 0;
  for (int i = 0; i < d; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      for (int f : {D.s0[e], D.s1[e], inverse(D.s0)[e], inverse(D.s1)[e]}) {
        if (comp[f] < 0) {
          comp[f] = nc;
          stack.push_back(f);
        }
      }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int e = 0; e < d; ++e) out[comp[e]].push_back(e);
  return out;
}

bool is_connected(const Dessin& D) { return component_edge_sets(D).size() == 1; }

Dessin restrict_to_edges(const Dessin& D, const std::vector<int>& edges) {
  std::map<int, int> rank;
  for (size_t i = 0; i < edges.size(); ++i) rank[edges[i]] = static_cast<int>(i);
  auto restrict = [&](const Perm& p) {
    // next element of the induced cycle: follow p until we land in the subset
    Perm q(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
      int j = p[edges[i]];
      while (!rank.count(j)) j = p[j];
      q[i] = rank[j];
    }
    return q;
  };
  return Dessin(restrict(D.s0), restrict(D.s1));
}

std::vector<Dessin> components(const Dessin& D) {
  std::vector<Dessin> out;
  for (const auto& edges : component_edge_sets(D)) out.push_back(restrict_to_edges(D, edges));
  return out;
}

Dessin disjoint_union(const Dessin& a, const Dessin& b) {
  int da = a.degree(), db = b.degree();
  Perm s0(da + db), s1(da + db);
  for (int i = 0; i < da; ++i) {
    s0[i] = a.s0[i];
    s1[i] = a.s1[i];
  }
  for (int i = 0; i < db; ++i) {
    s0[da + i] = da + b.s0[i];
    s1[da + i] = da + b.s1[i];
  }
  return Dessin(s0, s1);
}

static std::vector<int> sorted_cycle_type(const Perm& p) {
  return cycle_type(p);
}

RamificationData ramification(const Dessin& D) {
  RamificationData r;
  r.d = D.degree();
  r.mu = sorted_cycle_type(D.s0);
  r.nu = sorted_cycle_type(D.s1);
  r.rho = sorted_cycle_type(D.faces());
  r.m = static_cast<int>(r.mu.size());
  r.n_white = static_cast<int>(r.nu.size());
  r.r = static_cast<int>(r.rho.size());
  r.b0 = static_cast<int>(component_edge_sets(D).size());
  r.euler_surface = -r.d + r.m + r.n_white + r.r;
  // chi = sum over components of (2 - 2 g_c)
  int twice_genus = 2 * r.b0 - r.euler_surface;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("Euler characteristic inconsistent with a surface");
  r.genus_total = twice_genus / 2;
  return r;
}

int genus_of_connected(const Dessin& D) {
  auto r = ramification(D);
  return r.genus_total;
}

// BFS labelling from a root edge; deterministic and conjugation-invariant.
static Dessin relabel_from_root(const Dessin& D, int root) {
  int d = D.degree();
  std::vector<int> label(d, -1);
  std::vector<int> order;
  order.reserve(d);
  label[root] = 0;
  order.push_back(root);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int e = order[qi];
    for (int f = D.s0[e]; f != e; f = D.s0[f])
      if (label[f] < 0) {
        label[f] = static_cast<int>(order.size());
        order.push_back(f);
      }
    for (int f = D.s1[e]; f != e; f = D.s1[f])
      if (label[f] < 0) {
        label[f] = static_cast<int>(order.size());
        order.push_back(f);
      }
  }
  if (static_cast<int>(order.size()) != d)
    throw std::logic_error("relabel_from_root requires a connected dessin");
  Perm s0(d), s1(d);
  for (int e = 0; e < d; ++e) {
    s0[label[e]] = label[D.s0[e]];
    s1[label[e]] = label[D.s1[e]];
  }
  return Dessin(s0, s1);
}

static Dessin canonical_connected(const Dessin& D) {
  std::optional<Dessin> best;
  for (int root = 0; root < D.degree(); ++root) {
    Dessin cand = relabel_from_root(D, root);
    if (!best || cand < *best) best = cand;
  }
  return *best;
}

Dessin canonical_form(const Dessin& D) {
  auto comps = components(D);
  for (auto& c : comps) c = canonical_connected(c);
  std::sort(comps.begin(), comps.end(), [](const Dessin& a, const Dessin& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  Dessin out = comps[0];
  for (size_t i = 1; i < comps.size(); ++i) out = disjoint_union(out, comps[i]);
  return out;
}

bool is_isomorphic(const Dessin& a, const Dessin& b) {
  if (a.degree() != b.degree()) return false;
  return canonical_form(a) == canonical_form(b);
}

// extend edge 0 -> c to a full automorphism of a connected dessin, if possible
static bool extends_to_automorphism(const Dessin& D, int c) {
  int d = D.degree();
  std::vector<int> img(d, -1);
  img[0] = c;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (const Perm* p : {&D.s0, &D.s1}) {
      int f = (*p)[e], g = (*p)[img[e]];
      if (img[f] < 0) {
        img[f] = g;
        stack.push_back(f);
      } else if (img[f] != g) {
        return false;
      }
    }
  }
  std::vector<char> seen(d, 0);
  for (int v : img) {
    if (v < 0 || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

static long automorphism_count_connected(const Dessin& D) {
  long count = 0;
  for (int c = 0; c < D.degree(); ++c)
    if (extends_to_automorphism(D, c)) ++count;
  return count;
}

long automorphism_count(const Dessin& D) {
  // automorphisms permute isomorphic components and act on each
  auto comps = components(D);
  std::map<Dessin, std::pair<long, long>> groups;  // canon -> (multiplicity, per-comp aut)
  for (const auto& c : comps) {
    Dessin k = canonical_form(c);
    auto [it, fresh] = groups.try_emplace(k, 0L, 0L);
    it->second.first++;
    if (fresh) it->second.second = automorphism_count_connected(c);
  }
  long total = 1;
  for (const auto& [k, mc] : groups) {
    auto [mult, aut] = mc;
    for (long i = 0; i < mult; ++i) total *= aut;
    for (long i = 2; i <= mult; ++i) total *= i;
  }
  return total;
}

bool is_clean(const Dessin& D) {
  for (const auto& c : cycles(D.s1))
    if (c.size() != 2) return false;
  return true;
}

bool is_regular(const Dessin& D) {
  return is_connected(D) && automorphism_count(D) == D.degree();
}

int BipartiteGraph::component_count() const {
  int n = blacks + whites;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [b, w] : edges) {
    int rb = find(b), rw = find(blacks + w);
    if (rb != rw) parent[rb] = rw;
  }
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++c;
  return c;
}

FiberedProduct fibered_product(const Dessin& A, const Dessin& B) {
  auto ra = ramification(A), rb = ramification(B);
  auto black_a = cycles(A.s0), black_b = cycles(B.s0);
  auto white_a = cycles(A.s1), white_b = cycles(B.s1);

  // vertex index of the cycle containing each edge
  auto vertex_of = [](const std::vector<std::vector<int>>& cyc, int degree) {
    std::vector<int> v(degree);
    for (size_t i = 0; i < cyc.size(); ++i)
      for (int e : cyc[i]) v[e] = static_cast<int>(i);
    return v;
  };
  auto bva = vertex_of(black_a, A.degree()), bvb = vertex_of(black_b, B.degree());
  auto wva = vertex_of(white_a, A.degree()), wvb = vertex_of(white_b, B.degree());

  FiberedProduct fp;
  int mb = static_cast<int>(black_b.size());
  int nb = static_cast<int>(white_b.size());
  fp.graph.blacks = static_cast<int>(black_a.size()) * mb;
  fp.graph.whites = static_cast<int>(white_a.size()) * nb;
  for (int ea = 0; ea < A.degree(); ++ea)
    for (int eb = 0; eb < B.degree(); ++eb)
      fp.graph.edges.emplace_back(bva[ea] * mb + bvb[eb], wva[ea] * nb + wvb[eb]);

  RamificationData& r = fp.ram;
  r.d = ra.d * rb.d;
  r.m = ra.m * rb.m;
  r.n_white = ra.n_white * rb.n_white;
  r.r = ra.r * rb.r;
  for (const auto& ca : black_a)
    for (const auto& cb : black_b) r.mu.push_back(static_cast<int>(ca.size() * cb.size()));
  for (const auto& ca : white_a)
    for (const auto& cb : white_b) r.nu.push_back(static_cast<int>(ca.size() * cb.size()));
  for (int la : ramification(A).rho)
    for (int lb : ramification(B).rho) r.rho.push_back(la * lb);
  std::sort(r.mu.rbegin(), r.mu.rend());
  std::sort(r.nu.rbegin(), r.nu.rend());
  std::sort(r.rho.rbegin(), r.rho.rend());
  r.b0 = fp.graph.component_count();
  r.euler_surface = -r.d + r.m + r.n_white + r.r;
  r.genus_total = (2 * r.b0 - r.euler_surface) / 2;

  fp.display_order.assign(fp.graph.blacks, {});
  for (size_t e = 0; e < fp.graph.edges.size(); ++e)
    fp.display_order[fp.graph.edges[e].first].push_back(static_cast<int>(e));
  return fp;
}

std::string to_text(const Dessin& D) {
  std::ostringstream os;
  os << "d=" << D.degree() << "; s0=" << cycles_to_string(D.s0)
     << "; s1=" << cycles_to_string(D.s1);
  return os.str();
}

Dessin parse_dessin(const std::string& text) {
  auto field = [&](const std::string& key) -> std::string {
    auto pos = text.find(key + "=");
    if (pos == std::string::npos)
      throw std::invalid_argument("dessin text: missing '" + key + "=' field");
    pos += key.size() + 1;
    auto end = text.find(';', pos);
    return text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
  };
  int d;
  try {
    d = std::stoi(field("d"));
  } catch (const std::exception&) {
    throw std::invalid_argument("dessin text: bad degree field");
  }
  if (d < 1) throw std::invalid_argument("dessin text: degree must be >= 1");
  return Dessin(perm_from_cycles(field("s0"), d), perm_from_cycles(field("s1"), d));
}

}  // namespace dessins
