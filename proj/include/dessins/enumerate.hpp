#pragma once

#include <functional>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

// One canonical representative per isomorphism class of (sigma0, sigma1)
// pairs of degree d, disconnected classes included, in deterministic order.
std::vector<Dessin> enumerate_dessins(
    int d, const std::function<bool(const Dessin&)>& filter = nullptr, int guard = 8);

// Burnside count of conjugation orbits on S_d x S_d: sum over cycle types of
// the centralizer order. Oracle for the enumeration above.
Int dessin_class_count_burnside(int d);

// 2 (d+1)^{d-1}: bipartite trees on d+1 labelled vertices (each tree admits
// exactly two 2-colourings).
Int count_labeled_bipartite_trees(int d);

// m^{d+1-m} (d+1-m)^{m-1}: trees with black class {1..m}, white class
// {1..d+1-m}, carrying a marked black vertex (the closed form printed in the
// source material; the unrooted count is m^{n-1} n^{m-1}).
Int count_labeled_bipartite_trees(int d, int m);

// Scoins: spanning trees of K_{m,n} with both classes labelled, no marking.
Int count_bipartite_trees_unrooted(int m, int n);

// Exhaustive oracles (edge-subset scans). Feasible for d <= 7.
Int oracle_labeled_trees_total(int d);
Int oracle_black_rooted_bipartite_trees(int d, int m);
Int oracle_bipartite_trees_unrooted(int m, int n);

// N(d) = (d^2 + 4d - c)/12 with c = c(d mod 6); integrality enforced.
long count_single_cycle_belyi(long d);

// h_{g;mu,nu} = #{(s0,s1): cycle types mu,nu, total genus g} / d!
Rational count_coverings(int g, std::vector<int> mu, std::vector<int> nu);

// class-sum form of the same count: sum over isomorphism classes of 1/#Aut
Rational count_coverings_by_classes(int g, std::vector<int> mu, std::vector<int> nu);

std::vector<std::vector<int>> partitions_of(int d);

}  // namespace dessins
