#pragma once

#include <string>
#include <vector>

#include "dessins/common.hpp"

namespace dessins {

// Permutations are image arrays on {0..n-1}.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_permutation(const Perm& p);
Perm compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i)), b first
Perm inverse(const Perm& p);
Perm conjugate(const Perm& g, const Perm& p);  // g p g^{-1}
std::vector<std::vector<int>> cycles(const Perm& p);
std::vector<int> cycle_type(const Perm& p);  // lengths, descending
int cycle_count(const Perm& p);

// Cycle notation: "(0 1 2)(4 5)"; omitted indices are fixed points.
std::string cycles_to_string(const Perm& p);
Perm perm_from_cycles(const std::string& text, int n);

Perm random_perm(int n, Rng& rng);

// representative of the conjugacy class with the given cycle type
Perm perm_of_type(const std::vector<int>& type);

// all permutations of S_n in lexicographic order of image arrays
std::vector<Perm> all_perms(int n);

// every permutation commuting with p (the centralizer, by direct search)
std::vector<Perm> centralizer(const Perm& p);

}  // namespace dessins
