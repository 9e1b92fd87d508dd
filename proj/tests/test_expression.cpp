#include <doctest.h>

#include "fixtures.hpp"
#include "m36/classes.hpp"
#include "m36/expression.hpp"

using namespace m36;

namespace {

RingElement d(const char* s) { return divisor_class(DivisorId::parse(s)); }

}  // namespace

TEST_CASE("expression atoms") {
  CHECK(parse_expression("E[123]") == d("E[123]"));
  CHECK(parse_expression("G[34,56,12]") == d("G[12,34,56]"));
  CHECK(parse_expression("psi[1,2]") == psi(1, 2));
  CHECK(parse_expression("phi[3,4]") == phi(3, 4));
  CHECK(parse_expression("delta[12,3]") == delta_pair(mark_set({1, 2}), 3));
  CHECK(parse_expression("delta[12,34,56]") == delta_cyc(mark_set({1, 2}), mark_set({3, 4}), mark_set({5, 6})));
  CHECK(parse_expression("delta[456]") == d("E[456]"));
  CHECK(parse_expression("K + B") == canonical_K() + boundary_B());
  CHECK(parse_expression("3/4") == RingElement::constant(Rational(3, 4)));
}

TEST_CASE("expression arithmetic") {
  CHECK(parse_expression("2*F[12] - (F[12] - F[13])") == d("F[12]") + d("F[13]"));
  CHECK(parse_expression("-F[12]^2") == -(d("F[12]") * d("F[12]")));
  CHECK(parse_expression("1/2*E[123]*F[45]") == d("E[123]") * d("F[45]") * Rational(1, 2));
  CHECK(parse_expression("F[12]^0") == RingElement::constant(1));
  const auto& r = lines_ring();
  const Multiply mul = [&](const RingElement& a, const RingElement& b) { return r.multiply(a, b); };
  CHECK(r.integrate(parse_expression("psi[5,6]^2*psi[6,5]^2", mul)) == 1);
  CHECK(r.integrate(parse_expression("psi[1,2]*psi[2,3]*psi[4,5]*psi[6,5]", mul)) == 8);
}

TEST_CASE("expression errors") {
  CHECK_THROWS_AS(parse_expression("psi[1,2]^5"), ParseError);
  CHECK_THROWS_AS(parse_expression("F[12]^3*F[13]^2"), ParseError);
  CHECK_THROWS_AS(parse_expression("F[12"), ParseError);
  CHECK_THROWS_AS(parse_expression("F[17]"), ParseError);
  CHECK_THROWS_AS(parse_expression("psi[1,1]"), ParseError);
  CHECK_THROWS_AS(parse_expression("delta[12,4]"), ParseError);
  CHECK_THROWS_AS(parse_expression("X"), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expression("F[12] F[13]"), ParseError);
  try {
    parse_expression("F[12] + * F[13]");
  } catch (const ParseError& e) {
    CHECK(e.position == 8);
  }
}
