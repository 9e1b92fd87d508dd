#include <doctest.h>

#include "m36/ring.hpp"

using namespace m36;

TEST_CASE("monomials") {
  const Monomial a({3, 1}), b({2});
  CHECK(a.degree() == 2);
  CHECK(a[0] == 1);
  CHECK(a.times(b)->factors() == std::vector<int>{1, 2, 3});
  CHECK(Monomial({1, 1, 2, 2}).support() == std::vector<int>{1, 2});
  CHECK_FALSE(Monomial({1, 1, 2, 2}).times(b).has_value());
  CHECK(b < a);
  CHECK(Monomial({1, 2}) < Monomial({1, 3}));
  CHECK(Monomial({1, 2}).key() != Monomial({2, 1, 1}).key());
  CHECK_THROWS_AS(Monomial({1, 2, 3, 4, 5}), std::domain_error);
}

TEST_CASE("ring element arithmetic") {
  const auto x = RingElement::generator(0), y = RingElement::generator(1);
  const auto s = x + y;
  const auto sq = s * s;
  CHECK(sq.coefficient(Monomial({0, 1})) == 2);
  CHECK((s - s).empty());
  CHECK(s.pow(5).empty());
  CHECK(s.pow(4).terms().size() == 5);
  CHECK((x * Rational(1, 2) + x * Rational(1, 2)) == x);
  auto name = [](int g) { return g == 0 ? std::string("x") : std::string("y"); };
  CHECK((sq - RingElement::constant(3) * Rational(1, 3)).to_string(name) == "-1 + x^2 + 2*x*y + y^2");
  CHECK(RingElement().to_string(name) == "0");
  CHECK(sq.is_homogeneous(2));
  CHECK((sq + x).max_degree() == 2);
  CHECK((sq + x).component(1) == x);
  const auto sub = sq.substitute([&](int g) { return g == 0 ? y : x; });
  CHECK(sub == sq);
}
