#include "dessins/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dessins {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm conjugate(const Perm& g, const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[g[i]] = g[p[i]];
  return r;
}

std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = p[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> t;
  for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int cycle_count(const Perm& p) { return static_cast<int>(cycles(p).size()); }

std::string cycles_to_string(const Perm& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm perm_from_cycles(const std::string& text, int n) {
  Perm p = identity_perm(n);
  std::vector<char> used(n, 0);
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cycle parse error at position " + std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cyc;
    while (i < text.size() && text[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') { ++i; continue; }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected digit");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v >= n) fail("index " + std::to_string(v) + " out of range for degree " + std::to_string(n));
      if (used[v]) fail("index " + std::to_string(v) + " repeated");
      used[v] = 1;
      cyc.push_back(v);
    }
    if (i >= text.size()) fail("unterminated cycle");
    ++i;  // ')'
    for (size_t k = 0; k + 1 < cyc.size(); ++k) p[cyc[k]] = cyc[k + 1];
    if (cyc.size() > 1) p[cyc.back()] = cyc.front();
  }
  return p;
}

Perm random_perm(int n, Rng& rng) {
  Perm p = identity_perm(n);
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

Perm perm_of_type(const std::vector<int>& type) {
  int n = 0;
  for (int t : type) n += t;
  Perm p = identity_perm(n);
  int base = 0;
  for (int t : type) {
    for (int k = 0; k + 1 < t; ++k) p[base + k] = base + k + 1;
    if (t > 1) p[base + t - 1] = base;
    base += t;
  }
  return p;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> centralizer(const Perm& p) {
  std::vector<Perm> out;
  for (const auto& g : all_perms(static_cast<int>(p.size())))
    if (conjugate(g, p) == p) out.push_back(g);
  return out;
}

}  // namespace dessins
