#include "dessins/quasi_hopf.hpp"

#include <sstream>

namespace dessins {

Cyc Cyc::root(int m, long k) {
  Cyc c(m);
  long r = k % m;
  if (r < 0) r += m;
  c.c_[r] = 1;
  return c;
}

Cyc Cyc::operator+(const Cyc& o) const {
  if (m_ != o.m_) throw std::invalid_argument("Cyc: mixed orders");
  Cyc r(m_);
  for (int i = 0; i < m_; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  if (m_ != o.m_) throw std::invalid_argument("Cyc: mixed orders");
  Cyc r(m_);
  for (int i = 0; i < m_; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (m_ != o.m_) throw std::invalid_argument("Cyc: mixed orders");
  Cyc r(m_);
  for (int i = 0; i < m_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < m_; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[(i + j) % m_] += c_[i] * o.c_[j];
    }
  }
  return r;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Cyc Cyc::inverse_root() const {
  int where = -1;
  for (int i = 0; i < m_; ++i) {
    if (c_[i] == 0) continue;
    if (where >= 0) throw std::invalid_argument("Cyc::inverse_root: not a monomial");
    where = i;
  }
  if (where < 0) throw std::invalid_argument("Cyc::inverse_root: zero");
  Rational coeff = c_[where];
  if (coeff != 1 && coeff != -1)
    throw std::invalid_argument("Cyc::inverse_root: coefficient not a unit");
  Cyc r = root(m_, -where);
  if (coeff == -1)
    for (auto& x : r.c_) x = -x;
  return r;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m_; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i];
    if (i) os << "·z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Cyc cocycle(int m, int a, long i1, long i2, long i3, bool literal_three) {
  if (a < 0 || a >= m) throw std::invalid_argument("cocycle: need 0 <= a < m");
  auto red = [m](long x) {
    long r = x % m;
    return r < 0 ? r + m : r;
  };
  i1 = red(i1);
  i2 = red(i2);
  i3 = red(i3);
  long div = literal_three ? 3 : m;
  return Cyc::root(m, a * i1 * ((i2 + i3) / div));
}

bool cocycle_identity_holds(int m, int a, bool literal_three) {
  // omega(h,k,l) omega(g, h+k, l) omega(g,h,k) == omega(g+h, k, l) omega(g, h, k+l)
  for (long g = 0; g < m; ++g)
    for (long h = 0; h < m; ++h)
      for (long k = 0; k < m; ++k)
        for (long l = 0; l < m; ++l) {
          Cyc lhs = cocycle(m, a, h, k, l, literal_three) *
                    cocycle(m, a, g, h + k, l, literal_three) *
                    cocycle(m, a, g, h, k, literal_three);
          Cyc rhs = cocycle(m, a, g + h, k, l, literal_three) *
                    cocycle(m, a, g, h, k + l, literal_three);
          if (!(lhs == rhs)) return false;
        }
  return true;
}

bool printed_cocycle_identity_holds(int m, int a) {
  // w(y,s,t) w(x,ys,t) w(x,y,s) == w(s,y,st) w(xy,s,t), as printed
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y)
      for (long s = 0; s < m; ++s)
        for (long t = 0; t < m; ++t) {
          Cyc lhs = cocycle(m, a, y, s, t) * cocycle(m, a, x, y + s, t) *
                    cocycle(m, a, x, y, s);
          Cyc rhs = cocycle(m, a, s, y, s + t) * cocycle(m, a, x + y, s, t);
          if (!(lhs == rhs)) return false;
        }
  return true;
}

// ---- the double -------------------------------------------------------------------

Cyc DoubleAlgebra::theta_g(long g, long h, long hp) const {
  // abelian group: theta_g(h,h') = w(g,h,h') w(h,h',g) / w(h,g,h')
  return omega(g, h, hp) * omega(h, hp, g) * omega(h, g, hp).inverse_root();
}

Cyc DoubleAlgebra::gamma_h(long h, long x, long y) const {
  // gamma_h(a,b) = w(a,b,h) w(h,a,b) / w(a,h,b) in the abelian case
  return omega(x, y, h) * omega(h, x, y) * omega(x, h, y).inverse_root();
}

Tensor DoubleAlgebra::basis(int g, int h) const {
  Tensor t;
  t[{{g, h}}] = Cyc::one(m);
  return t;
}

Tensor DoubleAlgebra::unit(int slots) const {
  Tensor t;
  std::vector<DoubleBasis> idx(slots, {0, 0});
  std::function<void(int)> rec = [&](int s) {
    if (s == slots) {
      t[idx] = Cyc::one(m);
      return;
    }
    for (int g = 0; g < m; ++g) {
      idx[s] = {g, 0};
      rec(s + 1);
    }
  };
  rec(0);
  return t;
}

Tensor DoubleAlgebra::associator() const {
  Tensor t;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        t[{{x, 0}, {y, 0}, {z, 0}}] = omega(x, y, z).inverse_root();
  return t;
}

Tensor DoubleAlgebra::associator_inverse() const {
  Tensor t;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) t[{{x, 0}, {y, 0}, {z, 0}}] = omega(x, y, z);
  return t;
}

Tensor DoubleAlgebra::r_matrix() const {
  Tensor t;
  for (int a2 = 0; a2 < m; ++a2)
    for (int g = 0; g < m; ++g) t[{{a2, 0}, {g, a2}}] = Cyc::one(m);
  return t;
}

Tensor DoubleAlgebra::multiply(const Tensor& x, const Tensor& y) const {
  Tensor out;
  for (const auto& [ix, cx] : x)
    for (const auto& [iy, cy] : y) {
      if (ix.size() != iy.size()) throw std::invalid_argument("multiply: slot mismatch");
      Cyc coeff = cx * cy;
      std::vector<DoubleBasis> idx(ix.size());
      bool ok = true;
      for (size_t s = 0; s < ix.size() && ok; ++s) {
        auto [g, h] = ix[s];
        auto [gp, hp] = iy[s];
        if (g != gp) {  // delta_{h^{-1} g h, g'} with abelian G
          ok = false;
          break;
        }
        coeff = coeff * theta_g(g, h, hp);
        idx[s] = {g, static_cast<int>((h + hp) % m)};
      }
      if (!ok) continue;
      auto it = out.find(idx);
      if (it == out.end()) out[idx] = coeff;
      else it->second = it->second + coeff;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Tensor DoubleAlgebra::coproduct_slot(const Tensor& x, int slot) const {
  Tensor out;
  for (const auto& [ix, cx] : x) {
    auto [g, h] = ix[slot];
    for (int a1 = 0; a1 < m; ++a1) {
      int b = (g - a1 % m + m) % m;
      Cyc coeff = cx * gamma_h(h, a1, b);
      std::vector<DoubleBasis> idx(ix.begin(), ix.begin() + slot);
      idx.push_back({a1, h});
      idx.push_back({b, h});
      idx.insert(idx.end(), ix.begin() + slot + 1, ix.end());
      auto it = out.find(idx);
      if (it == out.end()) out[idx] = coeff;
      else it->second = it->second + coeff;
    }
  }
  return out;
}

Tensor DoubleAlgebra::coproduct_slot_transposed(const Tensor& x, int slot) const {
  Tensor out;
  for (const auto& [ix, cx] : x) {
    auto [g, h] = ix[slot];
    for (int a1 = 0; a1 < m; ++a1) {
      int b = (g - a1 % m + m) % m;
      Cyc coeff = cx * gamma_h(h, a1, b);
      std::vector<DoubleBasis> idx(ix.begin(), ix.begin() + slot);
      idx.push_back({b, h});
      idx.push_back({a1, h});
      idx.insert(idx.end(), ix.begin() + slot + 1, ix.end());
      auto it = out.find(idx);
      if (it == out.end()) out[idx] = coeff;
      else it->second = it->second + coeff;
    }
  }
  return out;
}

Tensor DoubleAlgebra::counit_slot(const Tensor& x, int slot) const {
  Tensor out;
  for (const auto& [ix, cx] : x) {
    auto [g, h] = ix[slot];
    if (g != 0) continue;  // eps(e^g (x) e_h) = delta_{g,0}
    std::vector<DoubleBasis> idx(ix.begin(), ix.begin() + slot);
    idx.insert(idx.end(), ix.begin() + slot + 1, ix.end());
    auto it = out.find(idx);
    if (it == out.end()) out[idx] = cx;
    else it->second = it->second + cx;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Tensor DoubleAlgebra::pad(const Tensor& x, int before, int after) const {
  Tensor cur = x;
  for (int k = 0; k < before; ++k) {
    Tensor next;
    for (const auto& [ix, cx] : cur)
      for (int g = 0; g < m; ++g) {
        std::vector<DoubleBasis> idx{{g, 0}};
        idx.insert(idx.end(), ix.begin(), ix.end());
        next[idx] = cx;
      }
    cur = std::move(next);
  }
  for (int k = 0; k < after; ++k) {
    Tensor next;
    for (const auto& [ix, cx] : cur)
      for (int g = 0; g < m; ++g) {
        std::vector<DoubleBasis> idx = ix;
        idx.push_back({g, 0});
        next[idx] = cx;
      }
    cur = std::move(next);
  }
  return cur;
}

AxiomReport verify_axioms(int m, int a, bool literal_three, int guard) {
  if (m < 1 || m > guard)
    throw GuardError("verify_axioms: m outside guard 1.." + std::to_string(guard));
  AxiomReport rep;
  rep.m = m;
  rep.a = a;
  rep.cocycle_ok = cocycle_identity_holds(m, a, literal_three);
  DoubleAlgebra A{m, a, literal_three};

  Tensor phi = A.associator();
  {
    // pentagon: (D x 1 x 1)Phi (1 x 1 x D)Phi == (Phi x 1)(1 x D x 1)Phi (1 x Phi)
    Tensor lhs = A.multiply(A.coproduct_slot(phi, 0), A.coproduct_slot(phi, 2));
    Tensor rhs = A.multiply(A.multiply(A.pad(phi, 0, 1), A.coproduct_slot(phi, 1)),
                            A.pad(phi, 1, 0));
    rep.pentagon = lhs == rhs;
  }
  {
    rep.quasi_assoc = true;
    for (int g = 0; g < m && rep.quasi_assoc; ++g)
      for (int h = 0; h < m && rep.quasi_assoc; ++h) {
        Tensor d2 = A.coproduct_slot(A.coproduct_slot(A.basis(g, h), 0), 1);
        Tensor d1 = A.coproduct_slot(A.coproduct_slot(A.basis(g, h), 0), 0);
        // (1 x D)D(x) Phi == Phi (D x 1)D(x)
        if (!(A.multiply(d2, phi) == A.multiply(phi, d1))) {
          rep.quasi_assoc = false;
          std::ostringstream os;
          os << "quasi-associativity fails at basis (" << g << "," << h << ")";
          rep.counterexample = os.str();
        }
      }
  }
  {
    Tensor contracted = A.counit_slot(phi, 1);
    rep.counit = contracted == A.unit(2);
  }
  {
    rep.r_conjugation = true;
    Tensor R = A.r_matrix();
    for (int g = 0; g < m && rep.r_conjugation; ++g)
      for (int h = 0; h < m && rep.r_conjugation; ++h) {
        Tensor d = A.coproduct_slot(A.basis(g, h), 0);
        Tensor dt = A.coproduct_slot_transposed(A.basis(g, h), 0);
        if (!(A.multiply(dt, R) == A.multiply(R, d))) {
          rep.r_conjugation = false;
          std::ostringstream os;
          os << "R-conjugation fails at basis (" << g << "," << h << ")";
          rep.counterexample = os.str();
        }
      }
  }
  return rep;
}

SystemMapsReport system_maps(int n, int m, int a, int guard) {
  if (n < 1 || m < 1 || n * m > guard)
    throw GuardError("system_maps: nm outside guard 1.." + std::to_string(guard));
  SystemMapsReport rep;
  int nm = n * m;
  // pullback along sigma_n : Z/nmZ -> Z/mZ (reduction mod m) of omega_a
  {
    rep.pullback_is_cocycle = true;
    auto pulled = [&](long x, long y, long z) {
      return cocycle(m, a % m, x % m, y % m, z % m);
    };
    for (long g = 0; g < nm && rep.pullback_is_cocycle; ++g)
      for (long h = 0; h < nm && rep.pullback_is_cocycle; ++h)
        for (long k = 0; k < nm && rep.pullback_is_cocycle; ++k)
          for (long l = 0; l < nm; ++l) {
            Cyc lhs = pulled(h, k, l) * pulled(g, (h + k) % nm, l) * pulled(g, h, k);
            Cyc rhs = pulled((g + h) % nm, k, l) * pulled(g, h, (k + l) % nm);
            if (!(lhs == rhs)) {
              rep.pullback_is_cocycle = false;
              break;
            }
          }
  }
  // rho~_n applied to both legs of R_m gives exactly R_{nm}
  {
    DoubleAlgebra Anm{nm, 0, false};
    Tensor transported;
    for (int am = 0; am < m; ++am)
      for (int k = 0; k < n; ++k) {
        int b = am + k * m;  // the preimages of a under multiplication by n
        for (int g = 0; g < nm; ++g) {
          std::vector<DoubleBasis> idx{{b, 0}, {g, b}};
          transported[idx] = Cyc::one(nm);
        }
      }
    rep.r_transport_exact = transported == Anm.r_matrix();
  }
  return rep;
}

}  // namespace dessins
