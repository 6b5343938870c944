#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace germcalc {

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

RingPtr numbered_ring(int n, const std::string& prefix) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (int i = 1; i <= n; ++i) vars.push_back(prefix + std::to_string(i));
  return make_ring(std::move(vars));
}

int mono_degree(const Mono& m) {
  int d = 0;
  for (int32_t e : m) d += e;
  return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  // Same degree: earlier variable with higher exponent is larger.
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.emplace(Mono(p.nvars(), 0), c);
  return p;
}

Poly Poly::variable(RingPtr ring, int index) {
  Poly p(std::move(ring));
  if (index < 0 || index >= p.nvars())
    throw PreconditionError("variable index out of range");
  Mono m(p.nvars(), 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Poly Poly::monomial(RingPtr ring, Mono m, const Rational& c) {
  Poly p(std::move(ring));
  if (static_cast<int>(m.size()) != p.nvars())
    throw PreconditionError("monomial arity does not match ring");
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  // With grlex order the largest term has the largest total degree.
  return mono_degree(terms_.rbegin()->first);
}

Rational Poly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  const auto it = terms_.find(Mono(nvars(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::coeff(const Mono& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::check_same_ring(const Poly& o) const {
  if (ring_ == o.ring_) return;
  if (ring_ && o.ring_ && *ring_ == *o.ring_) return;
  throw RingMismatchError("polynomials live in different rings");
}

void Poly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly r(a.ring_ ? a.ring_ : b.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Poly operator*(const Rational& c, Poly p) {
  if (c == 0) return Poly::zero(p.ring());
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (ring_ && o.ring_ && *ring_ != *o.ring_) return false;
  return terms_ == o.terms_;
}

Poly Poly::compose(std::span<const Poly> subst) const {
  if (static_cast<int>(subst.size()) != nvars())
    throw PreconditionError("compose: substitution arity mismatch");
  RingPtr target;
  for (const Poly& s : subst) {
    if (!target) {
      target = s.ring();
    } else if (s.ring() && *s.ring() != *target) {
      throw RingMismatchError("compose: substitution polynomials in different rings");
    }
  }
  if (!target) target = ring_;  // nvars()==0: constants only

  // Cache powers of each substituted polynomial.
  std::vector<std::vector<Poly>> powers(subst.size());
  auto power = [&](int i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * subst[i]);
    return cache[e];
  };

  Poly result(target);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * power(static_cast<int>(i), m[i]);
    result += term;
  }
  return result;
}

Poly Poly::compose(const std::vector<Poly>& subst) const {
  return compose(std::span<const Poly>(subst));
}

Poly Poly::partial(int var_index) const {
  if (var_index < 0 || var_index >= nvars())
    throw PreconditionError("partial: variable index out of range");
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var_index] == 0) continue;
    Mono d(m);
    d[var_index] -= 1;
    r.add_term(d, c * m[var_index]);
  }
  return r;
}

Poly Poly::truncate(int degree) const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) <= degree) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::shifted(const Mono& m, int max_degree) const {
  Poly r(ring_);
  const int dm = mono_degree(m);
  for (const auto& [mo, c] : terms_) {
    if (max_degree >= 0 && mono_degree(mo) + dm > max_degree) continue;
    r.terms_.emplace(mono_mul(mo, m), c);
  }
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw PreconditionError("pow: negative exponent");
  Poly r = Poly::constant(ring_, 1);
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in descending grlex order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;

    const bool is_const_mono = mono_degree(m) == 0;
    const bool coeff_one = (a == 1);
    bool need_star = false;
    if (!coeff_one || is_const_mono) {
      if (a.get_den() == 1)
        os << a.get_num();
      else
        os << "(" << a << ")";
      need_star = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << ring_->var(i);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace germcalc
