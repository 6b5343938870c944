// poly.hpp: exact multivariate polynomials over the rationals.
//
// Coefficients are GMP rationals (always reduced, positive denominator), so
// every computed dimension downstream is bit-exact.  Monomials are dense
// exponent vectors; term order is graded lexicographic over the ring's
// variable list, which fixes a canonical printing order.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace germcalc {

using Rational = mpq_class;
using Integer = mpz_class;

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class RingMismatchError : public Error {
 public:
  explicit RingMismatchError(const std::string& what) : Error(what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// An ordered list of variable names.  Rings compare by content, so
// independently-built rings with the same variables are interchangeable.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  int size() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(int i) const { return vars_.at(i); }
  int index_of(const std::string& name) const;

  bool operator==(const Ring& o) const { return vars_ == o.vars_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);
// x1..xn (or custom prefix).
RingPtr numbered_ring(int n, const std::string& prefix = "x");

// Dense exponent vector; length equals the ring's variable count.
using Mono = std::vector<int32_t>;

int mono_degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);

// Graded lexicographic order: first by total degree, then lexicographically
// (earlier variables weigh more).
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Mono, Rational, GrlexLess>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, int index);
  static Poly monomial(RingPtr ring, Mono m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  int nvars() const { return ring_ ? ring_->size() : 0; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  Rational constant_term() const;
  Rational coeff(const Mono& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly p);

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Substitute subst[i] for variable i; all subst share one ring, which
  // becomes the ring of the result.
  Poly compose(std::span<const Poly> subst) const;
  Poly compose(const std::vector<Poly>& subst) const;

  // Formal partial derivative with respect to variable `var_index`.
  Poly partial(int var_index) const;

  // Drop all terms of total degree > `degree`.
  Poly truncate(int degree) const;

  // Multiply by a single monomial, optionally truncating to `max_degree`
  // (pass -1 to keep everything).
  Poly shifted(const Mono& m, int max_degree = -1) const;

  Poly pow(int e) const;

  std::string to_string() const;

  void add_term(const Mono& m, const Rational& c);

 private:
  void check_same_ring(const Poly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

std::string rational_to_string(const Rational& q);

}  // namespace germcalc
