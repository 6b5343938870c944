#include "doctest.h"

#include <random>

#include "parse.hpp"
#include "poly.hpp"

using namespace germcalc;

namespace {

RingPtr ring_x() { return make_ring({"x"}); }
RingPtr ring_xz() { return make_ring({"x", "z"}); }

Poly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

// Small random polynomials for the algebra-law suites.
Poly random_poly(std::mt19937& rng, const RingPtr& ring, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Poly p(ring);
  const int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Mono m(ring->size(), 0);
    int budget = deg(rng);
    for (int v = 0; v < ring->size() && budget > 0; ++v) {
      std::uniform_int_distribution<int> e(0, budget);
      m[v] = e(rng);
      budget -= m[v];
    }
    p.add_term(m, Rational(coef(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("add") {
  auto r = ring_xz();
  CHECK((P("x", r) + P("-x", r)).is_zero());
  CHECK(P("x^2+1", r) + P("x", r) == P("x^2+x+1", r));
  CHECK(P("x^3+z*x", r) + P("-z*x", r) == P("x^3", r));
}

TEST_CASE("mul") {
  auto r = make_ring({"x", "y"});
  CHECK(P("x+y", r) * P("x-y", r) == P("x^2-y^2", r));
  Poly p = P("x^2 - 3*y + 1/2", r);
  CHECK(P("1", r) * p == p);
  auto rz = make_ring({"z"});
  CHECK(P("z^2", rz) * P("z^3", rz) == P("z^5", rz));
}

TEST_CASE("compose") {
  auto rX = make_ring({"X"});
  auto rx = ring_x();
  CHECK(P("X^2", rX).compose({P("x+1", rx)}) == P("x^2+2*x+1", rx));

  auto rYZ = make_ring({"Y", "Z"});
  auto rz = make_ring({"z"});
  Poly q = P("Z^3 + Y*Z", rYZ).compose({P("-3*z^2", rz), P("-2*z^3", rz)});
  CHECK(q == P("-8*z^9 + 6*z^5", rz));

  CHECK(P("X", rX).compose({Poly::zero(rx)}).is_zero());
}

TEST_CASE("partial") {
  auto r = ring_xz();
  CHECK(P("x^3+z*x", r).partial(0) == P("3*x^2+z", r));
  auto rxy = make_ring({"x", "y"});
  CHECK(P("y^2", rxy).partial(0).is_zero());
  CHECK(P("x^4+y*x^2+y^2*x", rxy).partial(1) == P("x^2+2*y*x", rxy));
}

TEST_CASE("truncate") {
  auto r = ring_x();
  CHECK(P("x^3+x", r).truncate(2) == P("x", r));
  Poly p = P("x^2 - 2*x", r);
  CHECK(p.truncate(5) == p);
  auto rz = make_ring({"z"});
  CHECK(P("-8*z^9 + 6*z^5", rz).truncate(5) == P("6*z^5", rz));
}

TEST_CASE("ring mismatch") {
  auto r1 = ring_x();
  auto r2 = make_ring({"y"});
  CHECK_THROWS_AS(P("x", r1) + P("y", r2), RingMismatchError);
  CHECK_THROWS_AS(P("x", r1).compose({}), PreconditionError);
}

TEST_CASE("parser") {
  auto r = ring_xz();
  CHECK(P("x^3 + (1/2)*z*x", r) == P("x^3 + 1/2*z*x", r));
  CHECK(P("2x", r) == P("2*x", r));
  CHECK(P("-x^2", r) == Rational(-1) * P("x^2", r));
  CHECK(P("x - - x", r) == P("2*x", r));
  CHECK_THROWS_AS(P("x + w", r), ParseError);
  CHECK_THROWS_AS(P("x +", r), ParseError);
  CHECK_THROWS_AS(P("x ^ z", r), ParseError);
}

TEST_CASE("printing round-trips and is canonical") {
  auto r = make_ring({"x", "y", "z"});
  Poly p = P("z^3 + (x^2 + y^3)*z - 1/2*x", r);
  CHECK(parse_poly(p.to_string(), r) == p);
  CHECK(P("0", r).to_string() == "0");
  CHECK(P("x*y - y*x", r).to_string() == "0");
}

TEST_CASE("algebra laws on random inputs") {
  std::mt19937 rng(20240811);
  auto r = make_ring({"x", "y", "z"});
  int cases = 0;
  for (int it = 0; it < 400; ++it) {
    Poly a = random_poly(rng, r, 3, 4);
    Poly b = random_poly(rng, r, 3, 4);
    Poly c = random_poly(rng, r, 3, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // Leibniz and linearity of the derivative.
    CHECK((a * b).partial(1) == a.partial(1) * b + a * b.partial(1));
    CHECK((a + b).partial(2) == a.partial(2) + b.partial(2));
    // Truncated multiplication is compatible with truncation.
    CHECK((a * b).truncate(3) == (a.truncate(3) * b.truncate(3)).truncate(3));
    cases += 9;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("compose associativity on random inputs") {
  std::mt19937 rng(987654);
  auto outer = make_ring({"u", "v"});
  auto mid = make_ring({"s", "t"});
  auto inner = make_ring({"x", "y"});
  for (int it = 0; it < 120; ++it) {
    Poly p = random_poly(rng, outer, 3, 3);
    std::vector<Poly> f = {random_poly(rng, mid, 2, 3), random_poly(rng, mid, 2, 3)};
    std::vector<Poly> g = {random_poly(rng, inner, 2, 3), random_poly(rng, inner, 2, 3)};
    std::vector<Poly> fg = {f[0].compose(g), f[1].compose(g)};
    CHECK(p.compose(f).compose(g) == p.compose(fg));
  }
}
