#include <random>

#include "doctest.h"
#include "lcva/scalar.hpp"

using namespace lcva;

namespace {

Scalar k() { return Scalar::param("k"); }
Scalar c() { return Scalar::param("c"); }

Scalar random_scalar(std::mt19937_64& rng) {
  // small random rational function in k and c
  auto rnd_poly = [&]() {
    Poly p;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      long coeff = static_cast<long>(rng() % 9) - 4;
      int ek = static_cast<int>(rng() % 3), ec = static_cast<int>(rng() % 2);
      Poly m{GRat(coeff)};
      if (ek) m = m * Poly::var(Params::id("k"), ek);
      if (ec) m = m * Poly::var(Params::id("c"), ec);
      p = p + m;
    }
    return p;
  };
  Poly den;
  do {
    den = rnd_poly();
  } while (den.is_zero());
  return Scalar(rnd_poly(), den);
}

}  // namespace

TEST_CASE("GRat field arithmetic") {
  GRat i = GRat::sqrt_minus_one();
  CHECK(i * i == GRat(-1));
  CHECK((i * i.inv()).is_one());
  GRat z(mpq_class(3, 4), mpq_class(-2, 5));
  CHECK((z * z.inv()).is_one());
  CHECK(z + (-z) == GRat(0));
  CHECK(z.str() == "3/4 - 2/5*i");
}

TEST_CASE("polynomial arithmetic and exact division") {
  Scalar x = k(), y = c();
  Scalar p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  Poly a = (x + y).num() * (x * x + Scalar(3) * y).num();
  CHECK(a.div_exact((x + y).num()) == (x * x + Scalar(3) * y).num());
  CHECK_THROWS_AS((x * x + Scalar(1)).num().div_exact((x + y).num()),
                  std::domain_error);
}

TEST_CASE("poly_gcd returns monic gcd") {
  Poly a = (k() + c()).num();
  Poly b = (k() - c()).num();
  Poly g = poly_gcd(a * a, a * b);
  CHECK(g == a);  // a is monic in grlex already
  Poly two_a = a.mul_grat(GRat(2));
  CHECK(poly_gcd(two_a, two_a) == a);
  CHECK(poly_gcd(Poly(), b) == b.mul_grat(b.lead_coeff().inv()));
}

TEST_CASE("Scalar canonical form") {
  // (k^2-c^2)/(k+c) reduces to k-c
  Scalar r = (k() * k() - c() * c()) / (k() + c());
  CHECK(r == k() - c());
  CHECK(r.str() == "k - c");
  // denominator is kept monic
  Scalar s = Scalar(1) / (Scalar(2) * k());
  CHECK(s.str() == "(1/2)/k");
  Scalar t = (Scalar(2) * k()) / (Scalar(4) * k() * k());
  CHECK(t == Scalar(1) / (Scalar(2) * k()));
}

TEST_CASE("Scalar field axioms on random rational functions") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    Scalar a = random_scalar(rng), b = random_scalar(rng),
           d = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + d == a + (b + d));
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) {
      CHECK((a * a.inv()).is_one());
      CHECK(a / a == Scalar(1));
    }
  }
}

TEST_CASE("substitute parameters") {
  Scalar r = (k() + Scalar(1)) / c();
  std::map<int, Scalar> vals;
  vals[Params::id("k")] = Scalar(3);
  vals[Params::id("c")] = Scalar(2);
  CHECK(r.substitute(vals) == Scalar(2));
  vals.erase(Params::id("c"));
  CHECK(r.substitute(vals) == Scalar(4) / c());
}

TEST_CASE("Gaussian rational coefficients mix with parameters") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  Scalar z = (i * k() + Scalar(1)) * (i * k() - Scalar(1));
  CHECK(z == -(k() * k()) - Scalar(1));
}
