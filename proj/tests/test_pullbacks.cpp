#include <doctest.h>

#include "m36/pullbacks.hpp"

using namespace m36;

namespace {

RingElement d(const char* s) { return divisor_class(DivisorId::parse(s)); }

// Relabels every generator through sigma.
RingElement transport(const Permutation& sigma, const RingElement& e) {
  return e.substitute([&](int g) { return divisor_class(apply_perm(sigma, DivisorId::from_index(g))); });
}

RingElement dualize(const RingElement& e) {
  return e.substitute([](int g) { return divisor_class(duality(DivisorId::from_index(g))); });
}

}  // namespace

TEST_CASE("r6 pullback of D12") {
  const auto e = pullback_r(6, mark_set({1, 2}));
  CHECK(e == d("E[345]") + d("F[12]") + d("G[36,12,45]") + d("G[46,12,35]") + d("G[56,12,34]"));
  CHECK(e.terms().size() == 5);
  for (const auto& [m, c] : e.terms()) CHECK(c == 1);
}

TEST_CASE("f6 pullback of D12") {
  CHECK(pullback_f(6, mark_set({1, 2})) == d("E[126]") + d("F[12]") + d("G[12,63,45]") + d("G[12,64,35]") + d("G[12,65,34]"));
}

TEST_CASE("pullbacks reject index clashes") {
  CHECK_THROWS_AS(pullback_r(1, mark_set({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(pullback_f(7, mark_set({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(pullback_f(3, mark_set({1, 2, 4})), std::invalid_argument);
}

TEST_CASE("pullbacks are equivariant and exchanged by duality") {
  const auto perms = Permutation::all();
  for (int k = 1; k <= 6; ++k)
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        if (i == k || j == k) continue;
        const MarkSet ij = mark_set({i, j});
        CHECK(dualize(pullback_f(k, ij)) == pullback_r(k, ij));
        for (std::size_t p = 0; p < perms.size(); p += 37) {
          const auto& s = perms[p];
          CHECK(transport(s, pullback_r(k, ij)) == pullback_r(s(k), s(ij)));
          CHECK(transport(s, pullback_f(k, ij)) == pullback_f(s(k), s(ij)));
        }
      }
}

TEST_CASE("psi expansion") {
  CHECK(psi(1, 2) == pullback_f(6, mark_set({2, 3})) + pullback_f(6, mark_set({4, 5})) + pullback_r(1, mark_set({2, 6})));
  CHECK(psi(5, 6) == psi(5, 6, 4, 1));
  CHECK(phi(1, 2) == psi(1, 2) + psi(2, 1));
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      if (i != j)
        for (const auto& [m, c] : psi(i, j).terms()) CHECK(c > 0);
  CHECK_THROWS_AS(psi(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(psi(1, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("linear relation generators") {
  const auto rels = linear_relations();
  CHECK(rels.size() == 60);
  for (const auto& r : rels) CHECK(r.is_homogeneous(1));
}
