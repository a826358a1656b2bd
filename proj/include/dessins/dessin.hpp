#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

// A dessin d'enfant as a pair of permutations on edge indices {0..d-1}.
// Cycles of sigma0 are the black vertices, cycles of sigma1 the white ones,
// each cycle carrying the ribbon (cyclic) order of its edges. The face
// permutation is (sigma0∘sigma1)^{-1}, composing right-to-left (sigma1
// first); flipping that convention conjugates the faces and changes no
// invariant.
struct Dessin {
  Perm s0, s1;

  Dessin() = default;
  Dessin(Perm sigma0, Perm sigma1);

  int degree() const { return static_cast<int>(s0.size()); }
  Perm faces() const;  // (s0 s1)^{-1}

  bool operator==(const Dessin& o) const { return s0 == o.s0 && s1 == o.s1; }
  bool operator<(const Dessin& o) const {
    return s0 != o.s0 ? s0 < o.s0 : s1 < o.s1;
  }
};

struct RamificationData {
  int d = 0;
  int m = 0;        // black vertices
  int n_white = 0;  // white vertices
  int r = 0;        // faces
  std::vector<int> mu, nu, rho;  // ramification profiles, descending
  int b0 = 0;                    // connected components
  int euler_surface = 0;         // chi(Sigma) = -d + m + n + r
  int genus_total = 0;           // sum of component genera
};

Dessin from_permutations(const Perm& s0, const Perm& s1);
RamificationData ramification(const Dessin& D);

std::vector<std::vector<int>> component_edge_sets(const Dessin& D);
bool is_connected(const Dessin& D);
std::vector<Dessin> components(const Dessin& D);
Dessin disjoint_union(const Dessin& a, const Dessin& b);

// subdessin induced on an edge subset, edges relabelled by rank
Dessin restrict_to_edges(const Dessin& D, const std::vector<int>& edges);

Dessin canonical_form(const Dessin& D);
bool is_isomorphic(const Dessin& a, const Dessin& b);
long automorphism_count(const Dessin& D);

bool is_clean(const Dessin& D);
bool is_regular(const Dessin& D);

int genus_of_connected(const Dessin& D);

// ---- plain bipartite graphs (fibered products carry no ribbon data) -------
struct BipartiteGraph {
  int blacks = 0, whites = 0;
  std::vector<std::pair<int, int>> edges;  // (black, white)

  int component_count() const;
};

struct FiberedProduct {
  BipartiteGraph graph;
  RamificationData ram;  // d, m, n multiplicative; profiles entrywise products
  // lexicographic cyclic order of edges at each black vertex, display only
  std::vector<std::vector<int>> display_order;
};

FiberedProduct fibered_product(const Dessin& a, const Dessin& b);

// ---- text format: d=<int>; s0=<cycles>; s1=<cycles> ------------------------
std::string to_text(const Dessin& D);
Dessin parse_dessin(const std::string& text);

}  // namespace dessins
