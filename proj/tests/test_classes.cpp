#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "m36/classes.hpp"

using namespace m36;

namespace {

RingElement d(const char* s) { return divisor_class(DivisorId::parse(s)); }

const PsiTable& table() {
  static const PsiTable t = psi_table(lines_ring());
  return t;
}

Rational direct(const ChowRing& r, const PsiMonomial& m) {
  std::vector<RingElement> f;
  for (const auto& [i, j] : m.f) f.push_back(psi(i, j));
  return r.integrate(r.product(f));
}

}  // namespace

TEST_CASE("delta classes") {
  CHECK(delta_pair(mark_set({1, 2}), 3) == d("F[12]") + d("G[34,12,56]") + d("G[35,12,46]") + d("G[36,12,45]"));
  CHECK(delta_cyc(mark_set({1, 2}), mark_set({3, 4}), mark_set({5, 6})) == d("G[12,34,56]") - d("G[34,12,56]"));
  CHECK(delta_triple(mark_set({4, 5, 6})) == d("E[456]"));
  CHECK_THROWS_AS(delta_pair(mark_set({1, 2}), 4), std::invalid_argument);
  CHECK_THROWS_AS(delta_cyc(mark_set({1, 2}), mark_set({4, 5}), mark_set({3, 6})), std::invalid_argument);
  CHECK_THROWS_AS(delta_cyc(mark_set({1, 2}), mark_set({3, 4}), mark_set({3, 5})), std::invalid_argument);
  const auto all = delta_classes();
  CHECK(all.size() == 50);
  for (const auto& c : all) CHECK(lines_ring().m36_subring_membership(c.expansion));
  CHECK(all[20].name == "delta[12,3]");
  CHECK(all[35].name == "delta[12,34,56]");
}

TEST_CASE("pullback of a boundary divisor splits into deltas") {
  const auto& r = lines_ring();
  for (int k = 1; k <= 6; ++k)
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        if (i == k || j == k) continue;
        const MarkSet ij = mark_set({i, j});
        const MarkSet lmn = static_cast<MarkSet>(kAllMarks & ~(ij | mark_set({k})));
        const int low = marks_of(static_cast<MarkSet>(kAllMarks & ~ij)).front();
        if (k != low) continue;
        CHECK(r.is_zero(pullback_r(k, ij) - delta_triple(lmn) - delta_pair(ij, k)));
      }
}

TEST_CASE("Picard basis") {
  const auto c = picard_m36_basis(lines_ring());
  CHECK(c.basis.size() == 36);
  CHECK(c.rank == 36);
  CHECK(c.kernel_dim == 36);
  CHECK(c.ok());
  CHECK(c.basis.front().name == "delta[156]");
}

TEST_CASE("canonical classes") {
  const auto& r = lines_ring();
  const auto c = canonical_classes(r);
  CHECK(c.KplusB.coefficient(Monomial({0})) == Rational(7, 10));
  CHECK(c.KplusB.coefficient(Monomial({20})) == Rational(4, 5));
  CHECK(c.KplusB.coefficient(Monomial({64})) == Rational(6, 5));
  CHECK(c.K.coefficient(Monomial({5})) == Rational(-3, 10));
  CHECK(c.identity_residual.empty());
  CHECK(c.line_restrictions.size() == 15);
  for (const auto& [p, v] : c.line_restrictions) CHECK(v.is_zero());
  CHECK(c.KplusB_fourth > 0);
  CHECK(c.ok());
  const auto j = nlohmann::json::parse(c.to_json());
  CHECK(j["K"]["E[123]"] == "-3/10");
  CHECK(j["KplusB"]["G[12,34,56]"] == "6/5");
  CHECK_FALSE(r.is_zero(canonical_K()));
  CHECK_THROWS_AS(canonical_classes(planes_ring()), std::invalid_argument);
}

TEST_CASE("test curves") {
  const auto v = curve_checks(lines_ring());
  CHECK(v.size() == 2 * 66);
  int expected = 0;
  for (const auto& x : v)
    if (x.expected) {
      ++expected;
      CHECK_MESSAGE(x.value == *x.expected, x.curve << " . " << x.against);
    }
  CHECK(expected == 12);
}

TEST_CASE("psi monomials and orbits") {
  const auto m = parse_psi_monomial("psi[2,1]*psi[1,2]*psi[2,1]*psi[1,2]");
  CHECK(to_string(m) == "psi[1,2]*psi[1,2]*psi[2,1]*psi[2,1]");
  CHECK(orbit_representative(parse_psi_monomial("psi[5,6]*psi[5,6]*psi[6,5]*psi[6,5]")) == m);
  CHECK_THROWS_AS(parse_psi_monomial("psi[1,1]*psi[1,2]*psi[2,1]*psi[2,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_psi_monomial("psi[1,2]*psi[1,2]*psi[2,1]"), std::invalid_argument);
  CHECK(psi_zero_criterion(parse_psi_monomial("psi[1,2]*psi[1,2]*psi[1,3]*psi[4,5]")));
  CHECK_FALSE(psi_zero_criterion(m));
  CHECK(all_psi_monomials().size() == 40920);
  CHECK(table1().size() == 100);
}

TEST_CASE("psi table") {
  const auto& t = table();
  std::size_t total = 0;
  for (const auto& [rep, n] : t.sizes) total += n;
  CHECK(total == 40920);
  CHECK(t.value(parse_psi_monomial("psi[1,2]*psi[1,2]*psi[2,1]*psi[2,1]")) == 1);
  CHECK(t.value(parse_psi_monomial("psi[1,2]*psi[2,3]*psi[3,4]*psi[5,6]")) == 8);
  CHECK(t.value(parse_psi_monomial("psi[1,2]*psi[1,2]*psi[1,3]*psi[4,5]")) == 0);
  // every orbit value against a direct product in a different representative
  const auto perms = Permutation::all();
  std::size_t n = 0;
  for (const auto& [rep, v] : t.orbits) {
    const auto& s = perms[(n++ * 113) % perms.size()];
    std::array<std::pair<int, int>, 4> f;
    for (int i = 0; i < 4; ++i) f[i] = {s(rep.f[i].first), s(rep.f[i].second)};
    CHECK(direct(lines_ring(), make_psi_monomial(f)) == v);
  }
  const auto c = compare_with_table1(t);
  CHECK(c.printed_entries == 100);
  CHECK(c.computed_nonzero_orbits == 100);
  CHECK(c.discrepancies.empty());
  CHECK(c.zero_criterion);
  CHECK(c.values_in_range);
  CHECK(c.ok());
}

TEST_CASE("psi expansions agree") {
  CHECK(psi_choice_failures(lines_ring()).empty());
  CHECK(psi_choice_failures(planes_ring()).empty());
}

TEST_CASE("psi classes on M(3,5)") {
  const M0nRing m(5);
  for (int i1 = 1; i1 <= 5; ++i1)
    for (int j1 = 1; j1 <= 5; ++j1)
      for (int i2 = 1; i2 <= 5; ++i2)
        for (int j2 = 1; j2 <= 5; ++j2) {
          if (i1 == j1 || i2 == j2) continue;
          const auto v = m.integrate(m.quotient().multiply(m35_psi(m, i1, j1), m35_psi(m, i2, j2)));
          CHECK(v == (i1 == i2 ? 0 : 1));
        }
  CHECK_THROWS_AS(m35_psi(M0nRing(4), 1, 2), std::invalid_argument);
}
