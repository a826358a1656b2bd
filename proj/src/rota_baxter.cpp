#include "dessins/rota_baxter.hpp"

#include <sstream>

namespace dessins {

PiPoly PiPoly::basis(int n, const Rational& c) {
  PiPoly p;
  p.add(n, c);
  return p;
}

void PiPoly::add(int n, const Rational& c) {
  if (c == 0) return;
  auto it = coeff_.find(n);
  if (it == coeff_.end()) {
    coeff_[n] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) coeff_.erase(it);
}

Rational PiPoly::coeff(int n) const {
  auto it = coeff_.find(n);
  return it == coeff_.end() ? Rational(0) : it->second;
}

PiPoly PiPoly::operator+(const PiPoly& o) const {
  PiPoly r = *this;
  for (const auto& [n, c] : o.coeff_) r.add(n, c);
  return r;
}

PiPoly PiPoly::operator-(const PiPoly& o) const { return *this + o * Rational(-1); }

PiPoly PiPoly::operator*(const Rational& c) const {
  PiPoly r;
  for (const auto& [n, co] : coeff_) r.add(n, co * c);
  return r;
}

std::vector<Rational> PiPoly::monomial_coeffs() const {
  int deg = coeff_.empty() ? 0 : coeff_.rbegin()->first;
  std::vector<Rational> out(deg + 1, Rational(0));
  for (const auto& [n, c] : coeff_) {
    // rising factorial t(t+1)...(t+n-1) / n!
    std::vector<Rational> rf{1};
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> next(rf.size() + 1, Rational(0));
      for (size_t k = 0; k < rf.size(); ++k) {
        next[k + 1] += rf[k];
        next[k] += rf[k] * i;
      }
      rf = std::move(next);
    }
    Rational fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (size_t k = 0; k < rf.size(); ++k) out[k] += c * rf[k] / fact;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

PiPoly PiPoly::from_monomial_coeffs(const std::vector<Rational>& c0) {
  std::vector<Rational> c = c0;
  PiPoly p;
  while (!c.empty() && c.back() == 0) c.pop_back();
  while (!c.empty()) {
    int k = static_cast<int>(c.size()) - 1;
    Rational fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    Rational a = c[k] * fact;  // pi_k has leading coefficient 1/k!
    p.add(k, a);
    auto mono = PiPoly::basis(k, a).monomial_coeffs();
    for (size_t i = 0; i < mono.size(); ++i) c[i] -= mono[i];
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  return p;
}

PiPoly PiPoly::operator*(const PiPoly& o) const {
  auto a = monomial_coeffs(), b = o.monomial_coeffs();
  std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  return from_monomial_coeffs(prod);
}

Rational PiPoly::eval(const Rational& t) const {
  Rational acc = 0, tp = 1;
  auto mono = monomial_coeffs();
  for (const Rational& c : mono) {
    acc += c * tp;
    tp *= t;
  }
  return acc;
}

PiPoly PiPoly::shift() const {
  PiPoly r;
  for (const auto& [n, c] : coeff_) r.add(n + 1, c);
  return r;
}

std::string PiPoly::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : coeff_) {
    if (!first) os << " + ";
    os << c << "·pi_" << n;
    first = false;
  }
  return os.str();
}

std::vector<Rational> structure_constants(int m, int n, int guard) {
  if (m < 0 || n < 0 || m > guard || n > guard)
    throw GuardError("structure_constants: indices outside guard");
  PiPoly prod = PiPoly::basis(m) * PiPoly::basis(n);
  std::vector<Rational> u(m + n + 1, Rational(0));
  for (const auto& [k, c] : prod.coeffs()) u[k] = c;
  return u;
}

// ---- RBValue -------------------------------------------------------------------

RBValue RBValue::operator+(const RBValue& o) const {
  if (is_pi_ != o.is_pi_) throw std::invalid_argument("RBValue: mixed carriers");
  return is_pi_ ? RBValue(pi_ + o.pi_) : RBValue(laurent_ + o.laurent_);
}

RBValue RBValue::operator-(const RBValue& o) const {
  if (is_pi_ != o.is_pi_) throw std::invalid_argument("RBValue: mixed carriers");
  return is_pi_ ? RBValue(pi_ - o.pi_) : RBValue(laurent_ - o.laurent_);
}

RBValue RBValue::operator*(const RBValue& o) const {
  if (is_pi_ != o.is_pi_) throw std::invalid_argument("RBValue: mixed carriers");
  return is_pi_ ? RBValue(pi_ * o.pi_) : RBValue(laurent_ * o.laurent_);
}

RBValue RBValue::operator*(const Rational& c) const {
  return is_pi_ ? RBValue(pi_ * c) : RBValue(laurent_ * c);
}

bool RBValue::operator==(const RBValue& o) const {
  if (is_pi_ != o.is_pi_) return false;
  return is_pi_ ? pi_ == o.pi_ : laurent_ == o.laurent_;
}

std::string RBValue::str() const { return is_pi_ ? pi_.str() : laurent_.str(); }

// ---- contexts ------------------------------------------------------------------

RBContext::RBContext(RBContextKind kind, bool self_test) : kind_(kind) {
  if (!self_test) return;
  Rng rng(20200505);
  for (int i = 0; i < 25; ++i) {
    RBValue x = random_element(rng), y = random_element(rng);
    if (!relation_holds(x, y))
      throw std::logic_error("RBContext: weight -1 relation failed at construction");
  }
}

RBValue RBContext::zero() const {
  return kind_ == RBContextKind::kPiBasis ? RBValue(PiPoly::zero())
                                          : RBValue(LaurentPoly(1));
}

RBValue RBContext::one() const {
  return kind_ == RBContextKind::kPiBasis ? RBValue(PiPoly::basis(0))
                                          : RBValue(LaurentPoly::constant(1));
}

RBValue RBContext::apply_T(const RBValue& v) const {
  return kind_ == RBContextKind::kPiBasis ? RBValue(v.pi().shift())
                                          : RBValue(v.laurent().polar_part());
}

RBValue RBContext::random_element(Rng& rng) const {
  if (kind_ == RBContextKind::kPiBasis) {
    PiPoly p;
    for (int n = 0; n <= 4; ++n)
      if (rng.below(2)) p.add(n, rng.rational(5));
    return RBValue(p);
  }
  LaurentPoly p(1);
  for (long e = -4; e <= 4; ++e)
    if (rng.below(3) == 0) p.add(e, rng.rational(5));
  return RBValue(p);
}

bool RBContext::in_minus_part(const RBValue& v) const {
  if (kind_ == RBContextKind::kPiBasis) return v.pi().coeff(0) == 0;
  return !v.laurent().has_nonnegative_exponent();
}

bool RBContext::in_plus_part(const RBValue& v) const {
  if (kind_ == RBContextKind::kPiBasis) {
    Rational at_one = 0;  // pi_k(1) = 1 for every k, so (1-T)R = {p : p(1) = 0}
    for (const auto& [n, c] : v.pi().coeffs()) at_one += c;
    return at_one == 0;
  }
  return !v.laurent().has_negative_exponent();
}

bool RBContext::relation_holds(const RBValue& x, const RBValue& y) const {
  RBValue lhs = apply_T(x * y) + apply_T(x) * apply_T(y);
  RBValue rhs = apply_T(x * apply_T(y)) + apply_T(apply_T(x) * y);
  return lhs == rhs;
}

// ---- Birkhoff ------------------------------------------------------------------

namespace {

class BirkhoffSession {
public:
  BirkhoffSession(const Character<RBValue>& phi, const RBContext& ctx, HopfContext& hopf)
      : phi_(phi), ctx_(ctx), hopf_(hopf) {}

  RBValue minus(const Dessin& connected) {
    Dessin D = canonical_form(connected);
    auto it = minus_.find(D);
    if (it != minus_.end()) return it->second;
    RBValue y = prepared(D);
    RBValue m = ctx_.apply_T(y) * Rational(-1);
    minus_[D] = m;
    return m;
  }

  RBValue plus(const Dessin& connected) {
    // phi_+ = (1 - T)(y) = y + phi_-
    Dessin D = canonical_form(connected);
    return prepared(D) + minus(D);
  }

  RBValue minus_monomial(const Monomial& m) {
    RBValue acc = ctx_.one();
    for (const auto& f : m.factors) acc = acc * minus(f);
    return acc;
  }

  RBValue plus_monomial(const Monomial& m) {
    RBValue acc = ctx_.one();
    for (const auto& f : m.factors) acc = acc * plus(f);
    return acc;
  }

  std::map<Dessin, RBValue> minus_table() const { return minus_; }

private:
  // Bogoliubov preparation: y = phi(D) + sum phi_-(D') phi(D'') over the
  // reduced coproduct
  RBValue prepared(const Dessin& D) {
    RBValue y = phi_(D);
    for (const auto& [lr, c] : hopf_.coproduct(D)) {
      if (lr.first == Monomial::one() || lr.second == Monomial::one()) continue;
      y = y + minus_monomial(lr.first) * phi_(lr.second) * c;
    }
    return y;
  }

  const Character<RBValue>& phi_;
  const RBContext& ctx_;
  HopfContext& hopf_;
  std::map<Dessin, RBValue> minus_;
};

}  // namespace

RBValue BirkhoffFactorization::value_minus(const Monomial& m, const RBContext& ctx) const {
  RBValue acc = ctx.one();
  for (const auto& f : m.factors) acc = acc * minus.at(f);
  return acc;
}

RBValue BirkhoffFactorization::value_plus(const Monomial& m, const RBContext& ctx) const {
  RBValue acc = ctx.one();
  for (const auto& f : m.factors) acc = acc * plus.at(f);
  return acc;
}

BirkhoffFactorization birkhoff(const Character<RBValue>& phi, const RBContext& ctx,
                               HopfContext& hopf, const std::vector<Dessin>& generators) {
  BirkhoffSession s(phi, ctx, hopf);
  BirkhoffFactorization out;
  for (const auto& g : generators) {
    for (const auto& comp : Monomial::from_dessin(g).factors) {
      out.minus[comp] = s.minus(comp);
      out.plus[comp] = s.plus(comp);
    }
  }
  return out;
}

bool birkhoff_reconstructs(const Character<RBValue>& phi, const RBContext& ctx,
                           HopfContext& hopf, const Dessin& D) {
  BirkhoffSession s(phi, ctx, hopf);
  // (phi_- o S) * phi_+ evaluated through the full coproduct
  RBValue acc = ctx.zero();
  for (const auto& [lr, c] : hopf.coproduct(canonical_form(D))) {
    HopfElement sl = hopf.antipode(HopfElement{{lr.first, Rational(1)}});
    RBValue left = ctx.zero();
    for (const auto& [m, c2] : sl) left = left + s.minus_monomial(m) * c2;
    acc = acc + left * s.plus_monomial(lr.second) * c;
  }
  return acc == phi(D);
}

// ---- refined invariants ----------------------------------------------------------

Character<RBValue> jones_character() {
  return Character<RBValue>(
      [](const Dessin& D) { return RBValue(specialize(D, Specialization::kJones)); },
      RBValue(LaurentPoly::constant(1)));
}

Character<RBValue> martin_character() {
  return Character<RBValue>(
      [](const Dessin& D) {
        LaurentPoly m = specialize(D, Specialization::kMartin);
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : m.terms()) {
          if (e < 0) throw std::logic_error("martin specialization is polynomial");
          if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(e + 1, Rational(0));
          coeffs[e] = c;
        }
        return RBValue(PiPoly::from_monomial_coeffs(coeffs));
      },
      RBValue(PiPoly::basis(0)));
}

namespace {

// product of pi-basis coefficient vectors through u_{m,n,k}; this is the
// route the printed recursion takes, kept separate from PiPoly::operator*
// so the two can be compared
std::map<int, Rational> pi_mul_via_u(const std::map<int, Rational>& a,
                                     const std::map<int, Rational>& b) {
  std::map<int, Rational> out;
  for (const auto& [m, cm] : a)
    for (const auto& [n, cn] : b) {
      auto u = structure_constants(m, n);
      for (size_t k = 0; k < u.size(); ++k) {
        if (u[k] == 0) continue;
        out[static_cast<int>(k)] += cm * cn * u[k];
      }
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

struct JonesRec {
  HopfContext& hopf;
  std::map<Dessin, LaurentPoly> minus;

  LaurentPoly minus_of(const Dessin& connected) {
    Dessin D = canonical_form(connected);
    auto it = minus.find(D);
    if (it != minus.end()) return it->second;
    LaurentPoly y = specialize(D, Specialization::kJones);
    for (const auto& [lr, c] : hopf.coproduct(D)) {
      if (lr.first == Monomial::one() || lr.second == Monomial::one()) continue;
      LaurentPoly prod = LaurentPoly::constant(c);
      for (const auto& f : lr.first.factors) prod = prod * minus_of(f);
      for (const auto& f : lr.second.factors)
        prod = prod * specialize(f, Specialization::kJones);
      y = y + prod;
    }
    LaurentPoly m = y.polar_part() * Rational(-1);
    minus[D] = m;
    return m;
  }

  LaurentPoly plus_of(const Dessin& connected) {
    Dessin D = canonical_form(connected);
    LaurentPoly y = specialize(D, Specialization::kJones);
    for (const auto& [lr, c] : hopf.coproduct(D)) {
      if (lr.first == Monomial::one() || lr.second == Monomial::one()) continue;
      LaurentPoly prod = LaurentPoly::constant(c);
      for (const auto& f : lr.first.factors) prod = prod * minus_of(f);
      for (const auto& f : lr.second.factors)
        prod = prod * specialize(f, Specialization::kJones);
      y = y + prod;
    }
    return y - y.polar_part();
  }
};

struct MartinRec {
  HopfContext& hopf;
  std::map<Dessin, std::map<int, Rational>> minus;  // pi-basis coefficients

  std::map<int, Rational> a_of(const Dessin& D) {
    LaurentPoly mp = specialize(D, Specialization::kMartin);
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : mp.terms()) {
      if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(e + 1, Rational(0));
      coeffs[e] = c;
    }
    return PiPoly::from_monomial_coeffs(coeffs).coeffs();
  }

  // prepared coefficients y_k = a_k(D) + sum_delta sum_{m,n} a^-_m a_n u_{m,n,k}
  std::map<int, Rational> prepared(const Dessin& connected) {
    Dessin D = canonical_form(connected);
    std::map<int, Rational> y = a_of(D);
    for (const auto& [lr, c] : hopf.coproduct(D)) {
      if (lr.first == Monomial::one() || lr.second == Monomial::one()) continue;
      std::map<int, Rational> left{{0, c}};
      for (const auto& f : lr.first.factors) left = pi_mul_via_u(left, minus_of(f));
      std::map<int, Rational> right{{0, Rational(1)}};
      for (const auto& f : lr.second.factors) right = pi_mul_via_u(right, a_of(f));
      for (const auto& [k, v] : pi_mul_via_u(left, right)) {
        y[k] += v;
        if (y[k] == 0) y.erase(k);
      }
    }
    return y;
  }

  // a^-_k(D) = -(y_{k-1}); the printed recursion up to the overall sign that
  // makes it agree with the generic phi_- = -T(y)
  std::map<int, Rational> minus_of(const Dessin& connected) {
    Dessin D = canonical_form(connected);
    auto it = minus.find(D);
    if (it != minus.end()) return it->second;
    std::map<int, Rational> out;
    for (const auto& [k, v] : prepared(D)) out[k + 1] = -v;
    minus[D] = out;
    return out;
  }

  // a^+_k(D) = (a_k - a_{k-1})(y) with the same prepared y
  std::map<int, Rational> plus_of(const Dessin& connected) {
    auto y = prepared(connected);
    std::map<int, Rational> out = y;
    for (const auto& [k, v] : y) {
      out[k + 1] -= v;
      if (out[k + 1] == 0) out.erase(k + 1);
    }
    for (auto it2 = out.begin(); it2 != out.end();)
      it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
    return out;
  }
};

PiPoly to_pipoly(const std::map<int, Rational>& coeffs) {
  PiPoly p;
  for (const auto& [k, c] : coeffs) p.add(k, c);
  return p;
}

}  // namespace

RefinedInvariant refined_invariant(const Dessin& D, RefinedMode mode, HopfContext& hopf) {
  RefinedInvariant out;
  if (mode == RefinedMode::kJones) {
    JonesRec rec{hopf, {}};
    out.jones_minus = rec.minus_of(D);
    out.jones_plus = rec.plus_of(D);
  } else {
    MartinRec rec{hopf, {}};
    out.martin_minus = to_pipoly(rec.minus_of(D));
    out.martin_plus = to_pipoly(rec.plus_of(D));
  }
  return out;
}

}  // namespace dessins
