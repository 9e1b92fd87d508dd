#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"

using namespace m36;

namespace {

RingElement d(const char* s) { return divisor_class(DivisorId::parse(s)); }

SingularPointId pt(const char* a, const char* b, const char* c) {
  return SingularPointId::from_matching(parse_marks(a), parse_marks(b), parse_marks(c));
}

FiberValue line(int c0, int c1) { return {Fiber::Line, {c0, c1}}; }
FiberValue plane(int c0, int c1, int c2) { return {Fiber::Plane, {c0, c1, c2}}; }

}  // namespace

TEST_CASE("multiplicative relation census") {
  const auto lines = multiplicative_relation_generators(ResolutionConfig::all_lines());
  CHECK(lines.quadratics.size() == 1545);
  CHECK(lines.cubics.empty());
  const auto planes = multiplicative_relation_generators(ResolutionConfig::all_planes());
  CHECK(planes.quadratics.size() == 1530);
  CHECK(planes.cubics.size() == 15);
  const Monomial m({DivisorId::parse("E[123]").index(), DivisorId::parse("E[124]").index()});
  CHECK(std::find(lines.quadratics.begin(), lines.quadratics.end(), m) != lines.quadratics.end());
  CHECK(std::find(planes.quadratics.begin(), planes.quadratics.end(), m) != planes.quadratics.end());
}

TEST_CASE("Chow ranks") {
  const auto& r = lines_ring();
  CHECK(r.quotient().ranks() == std::vector<std::size_t>{1, 51, 127, 51, 1});
  CHECK(r.quotient().torsion_free() == true);
  CHECK(planes_ring().quotient().ranks() == std::vector<std::size_t>{1, 51, 142, 51, 1});
  const ChowRing one(ResolutionConfig::with_planes({pt("12", "34", "56")}), Mode::TwoPrime);
  CHECK(one.quotient().ranks() == std::vector<std::size_t>{1, 51, 128, 51, 1});
  CHECK_FALSE(one.quotient().torsion_free().has_value());
  CHECK(blowup_rank_recursion() == std::vector<std::size_t>{1, 51, 127, 51, 1});
  CHECK(expected_ranks(ResolutionConfig::all_planes()) == std::vector<std::size_t>{1, 51, 142, 51, 1});
}

TEST_CASE("ranks report") {
  const auto j = nlohmann::json::parse(lines_ring().ranks_json());
  CHECK(j["mode"] == "exact");
  CHECK(j["ranks"] == nlohmann::json({1, 51, 127, 51, 1}));
  CHECK(j["torsion_free"] == true);
  CHECK(j["config"]["S2"].empty());
  CHECK(j.contains("runtime_ms"));
  CHECK(j["admissible_monomials"] == nlohmann::json({1, 65, 600, 2500, 6785}));
}

TEST_CASE("normal forms") {
  const auto& r = lines_ring();
  CHECK(r.normal_form(RingElement()).empty());
  CHECK(r.is_zero(r.multiply(d("E[123]"), d("E[124]"))));
  CHECK(r.is_zero(pullback_r(6, mark_set({1, 2})) + pullback_r(6, mark_set({3, 4})) - pullback_r(6, mark_set({1, 3})) -
                  pullback_r(6, mark_set({2, 4}))));
  const auto x = r.product({d("F[12]"), d("G[12,34,56]"), psi(1, 3)});
  CHECK(r.normal_form(r.normal_form(x)) == r.normal_form(x));
  CHECK_FALSE(r.is_zero(d("F[12]")));
}

TEST_CASE("integration") {
  const auto& r = lines_ring();
  const auto a = psi(5, 6), b = psi(6, 5);
  CHECK(r.integrate(r.product({a, a, b, b})) == 1);
  CHECK(r.integrate(r.product({psi(1, 2), psi(1, 2), psi(1, 3), psi(2, 1)})) == 0);
  CHECK(r.integrate(r.product({psi(1, 2), psi(2, 3), psi(3, 1), psi(4, 5)})) == 9);
  CHECK(r.integrate(r.product({d("E[123]"), d("E[124]"), d("F[12]"), d("F[12]")})) == 0);
  CHECK_THROWS_AS(r.integrate(d("F[12]")), std::domain_error);
  // the same top class integrates equally on every resolution
  const auto& p = planes_ring();
  const auto m = r.product({psi(1, 2), psi(2, 3), psi(3, 4), psi(5, 6)});
  CHECK(p.integrate(p.product({psi(1, 2), psi(2, 3), psi(3, 4), psi(5, 6)})) == r.integrate(m));
  CHECK(r.integrate(m) == 8);
}

TEST_CASE("Poincare pairing is perfect") {
  const auto g = lines_ring().quotient().pairing_matrix(1);
  CHECK(dense_rank(g) == 51);
}

TEST_CASE("restriction to exceptional lines") {
  const auto& r = lines_ring();
  const auto p = pt("12", "34", "56");
  CHECK(r.restrict_to_fiber(d("F[12]"), p, Fiber::Line) == line(0, -1));
  CHECK(r.restrict_to_fiber(d("F[13]"), p) == line(0, 0));
  CHECK(r.restrict_to_fiber(d("G[12,34,56]"), p) == line(0, 1));
  CHECK(r.restrict_to_fiber(d("G[12,56,34]"), p) == line(0, 1));
  CHECK(r.restrict_to_fiber(d("E[456]"), p) == line(0, 0));
  CHECK(r.restrict_to_fiber(r.multiply(d("F[12]"), d("F[34]")), p).is_zero());
  CHECK(r.restrict_to_fiber(RingElement::constant(3), p) == line(3, 0));
  CHECK(r.restrict_to_fiber(d("F[12]"), p).to_string() == "-p");
  CHECK_THROWS_AS(r.restrict_to_fiber(d("F[12]"), p, Fiber::Plane), std::invalid_argument);
}

TEST_CASE("restriction to exceptional planes") {
  const auto& r = planes_ring();
  const auto p = pt("12", "34", "56");
  CHECK(r.restrict_to_fiber(d("F[34]"), p, Fiber::Plane) == plane(0, 1, 0));
  CHECK(r.restrict_to_fiber(d("G[12,34,56]"), p) == plane(0, -1, 0));
  CHECK(r.restrict_to_fiber(r.multiply(d("F[12]"), d("F[12]")), p) == plane(0, 0, 1));
  CHECK(r.restrict_to_fiber(r.product({d("F[12]"), d("F[12]"), d("F[12]")}), p).is_zero());
  CHECK(r.restrict_to_fiber(d("F[12]") - d("G[12,34,56]"), p).to_string() == "2*h");
  CHECK_THROWS_AS(r.restrict_to_fiber(d("F[12]"), p, Fiber::Line), std::invalid_argument);
}

TEST_CASE("restriction is multiplicative on generator pairs") {
  for (const ChowRing* r : {&lines_ring(), &planes_ring()})
    for (auto p : {pt("12", "34", "56"), pt("13", "25", "46")})
      for (int a = 0; a < kDivisorCount; ++a)
        for (int b = a; b < kDivisorCount; ++b) {
          const auto x = RingElement::generator(a), y = RingElement::generator(b);
          CHECK(r->restrict_to_fiber(x * y, p) == fiber_product(r->restrict_to_fiber(x, p), r->restrict_to_fiber(y, p)));
        }
}

TEST_CASE("subring of the singular space") {
  const auto& r = lines_ring();
  CHECK(r.m36_subring_membership(d("E[123]")));
  CHECK_FALSE(r.m36_subring_membership(d("F[12]")));
  CHECK(r.m36_subring_membership(d("F[12]") + d("G[34,12,56]") + d("G[35,12,46]") + d("G[36,12,45]")));
  CHECK(r.m36_subring_membership(r.multiply(d("F[12]"), d("F[34]"))));
  CHECK(r.m36_chow_ranks() == std::vector<std::size_t>{1, 36, 127, 51, 1});
  CHECK_THROWS_AS(planes_ring().m36_chow_ranks(), std::invalid_argument);
}

TEST_CASE("integration is symmetric") {
  const auto& r = lines_ring();
  const auto perms = Permutation::all();
  const auto& top = r.quotient().admissible(4);
  for (std::size_t i = 0; i < top.size(); i += 97) {
    const auto m = RingElement::monomial(top[i]);
    const auto v = r.integrate(m);
    const auto& s = perms[(i * 31) % perms.size()];
    CHECK(r.integrate(m.substitute([&](int g) { return RingElement::generator(apply_perm(s, DivisorId::from_index(g)).index()); })) == v);
    CHECK(r.integrate(m.substitute([&](int g) { return RingElement::generator(duality(DivisorId::from_index(g)).index()); })) == v);
  }
}
