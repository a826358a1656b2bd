#include "dessins/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dessins {

std::vector<std::vector<int>> partitions_of(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Dessin> enumerate_dessins(
    int d, const std::function<bool(const Dessin&)>& filter, int guard) {
  if (d < 1 || d > guard)
    throw GuardError("enumerate_dessins: degree " + std::to_string(d) +
                     " outside guard 1.." + std::to_string(guard));
  std::set<Dessin> seen;
  // sigma0 runs over class representatives only; conjugating both
  // permutations reaches every pair up to isomorphism.
  for (const auto& type : partitions_of(d)) {
    Perm s0 = perm_of_type(type);
    Perm s1 = identity_perm(d);
    do {
      seen.insert(canonical_form(Dessin(s0, s1)));
    } while (std::next_permutation(s1.begin(), s1.end()));
  }
  std::vector<Dessin> out;
  for (const auto& D : seen)
    if (!filter || filter(D)) out.push_back(D);
  return out;
}

static Int centralizer_order(const std::vector<int>& type) {
  std::map<int, int> mult;
  for (int t : type) mult[t]++;
  Int z = 1;
  for (auto [len, k] : mult) {
    for (int i = 0; i < k; ++i) z *= len;
    for (int i = 2; i <= k; ++i) z *= i;
  }
  return z;
}

Int dessin_class_count_burnside(int d) {
  // orbits of simultaneous conjugation on S_d^2 = (1/d!) sum_g |C(g)|^2
  //                                            = sum over classes |C(rep)|
  Int total = 0;
  for (const auto& type : partitions_of(d)) total += centralizer_order(type);
  return total;
}

static Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Int count_labeled_bipartite_trees(int d) { return 2 * ipow(d + 1, d - 1); }

Int count_labeled_bipartite_trees(int d, int m) {
  if (m < 1 || m > d)
    throw std::invalid_argument("count_labeled_bipartite_trees: need 1 <= m <= d");
  int n = d + 1 - m;
  return ipow(m, n) * ipow(n, m - 1);
}

Int count_bipartite_trees_unrooted(int m, int n) {
  return ipow(m, n - 1) * ipow(n, m - 1);
}

namespace {

// count spanning trees among all (v-1)-edge subsets of the given edge list
Int tree_count_by_subsets(int vertices, const std::vector<std::pair<int, int>>& all_edges) {
  int need = vertices - 1;
  int m = static_cast<int>(all_edges.size());
  if (need > m) return 0;
  Int count = 0;
  std::vector<int> idx(need);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> parent(vertices);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (int i : idx) {
      int a = find(all_edges[i].first), b = find(all_edges[i].second);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    if (acyclic) ++count;  // v-1 acyclic edges on v vertices = spanning tree
    int k = need - 1;
    while (k >= 0 && idx[k] == m - need + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

}  // namespace

Int oracle_labeled_trees_total(int d) {
  // trees on d+1 labelled vertices, times two colourings each
  int v = d + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) edges.emplace_back(i, j);
  return 2 * tree_count_by_subsets(v, edges);
}

Int oracle_bipartite_trees_unrooted(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return tree_count_by_subsets(m + n, edges);
}

Int oracle_black_rooted_bipartite_trees(int d, int m) {
  // (tree, marked black vertex) pairs counted directly
  return oracle_bipartite_trees_unrooted(m, d + 1 - m) * m;
}

long count_single_cycle_belyi(long d) {
  if (d < 1) throw std::invalid_argument("count_single_cycle_belyi: d >= 1 required");
  // residue table for c; the printed table lists d = 1 mod 6 twice, the
  // integrality of N(d) forces c = 12 on the residues 0 and 2.
  long c;
  switch (d % 6) {
    case 1: c = 5; break;
    case 4: c = 8; break;
    case 3:
    case 5: c = 9; break;
    default: c = 12; break;  // d = 0, 2 mod 6
  }
  long num = d * d + 4 * d - c;
  if (num % 12 != 0)
    throw std::logic_error("count_single_cycle_belyi: non-integral value, c-table wrong");
  return num / 12;
}

static Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational count_coverings(int g, std::vector<int> mu, std::vector<int> nu) {
  int d = std::accumulate(mu.begin(), mu.end(), 0);
  if (d != std::accumulate(nu.begin(), nu.end(), 0))
    throw std::invalid_argument("count_coverings: profile sums differ");
  if (d < 1 || d > 7) throw GuardError("count_coverings: degree guard 1..7");
  std::sort(mu.rbegin(), mu.rend());
  std::sort(nu.rbegin(), nu.rend());

  // fix s0 as the class representative of type mu and weight by class size
  Perm s0 = perm_of_type(mu);
  Int class_size = factorial(d) / centralizer_order(mu);
  Int hits = 0;
  Perm s1 = identity_perm(d);
  do {
    if (cycle_type(s1) != nu) continue;
    Dessin D(s0, s1);
    if (ramification(D).genus_total == g) ++hits;
  } while (std::next_permutation(s1.begin(), s1.end()));
  return Rational(class_size * hits, factorial(d));
}

Rational count_coverings_by_classes(int g, std::vector<int> mu, std::vector<int> nu) {
  int d = std::accumulate(mu.begin(), mu.end(), 0);
  if (d != std::accumulate(nu.begin(), nu.end(), 0))
    throw std::invalid_argument("count_coverings: profile sums differ");
  std::sort(mu.rbegin(), mu.rend());
  std::sort(nu.rbegin(), nu.rend());
  Rational total = 0;
  auto classes = enumerate_dessins(d, [&](const Dessin& D) {
    return cycle_type(D.s0) == mu && cycle_type(D.s1) == nu &&
           ramification(D).genus_total == g;
  }, 7);
  for (const auto& D : classes) total += Rational(1, automorphism_count(D));
  return total;
}

}  // namespace dessins
