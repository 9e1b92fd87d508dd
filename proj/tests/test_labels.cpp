#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "m36/labels.hpp"

using namespace m36;

namespace {

Permutation random_perm(std::mt19937& rng) {
  std::array<int, 6> im{1, 2, 3, 4, 5, 6};
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

int count_disjoint(const ResolutionConfig& cfg) {
  int n = 0;
  const auto all = enumerate_divisors();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (!intersects(all[i], all[j], cfg)) ++n;
  return n;
}

}  // namespace

TEST_CASE("divisor enumeration") {
  const auto all = enumerate_divisors();
  REQUIRE(all.size() == 65);
  int t = 0, p = 0, c = 0;
  std::set<std::string> names;
  for (auto d : all) {
    switch (d.kind()) {
      case DivisorKind::Triple: ++t; break;
      case DivisorKind::Pair: ++p; break;
      case DivisorKind::CyclicTriple: ++c; break;
    }
    names.insert(d.to_string());
    CHECK(DivisorId::parse(d.to_string()) == d);
  }
  CHECK(t == 20);
  CHECK(p == 15);
  CHECK(c == 30);
  CHECK(names.size() == 65);
  CHECK(all.front().to_string() == "E[123]");
  CHECK(all[20].to_string() == "F[12]");
  CHECK(all[35].to_string() == "G[12,34,56]");
  CHECK(enumerate_points().size() == 15);
}

TEST_CASE("cyclic canonicalization") {
  const auto a = DivisorId::parse("G[34,56,12]");
  CHECK(a.to_string() == "G[12,34,56]");
  CHECK(DivisorId::parse("G[56,12,34]") == a);
  const auto b = DivisorId::parse("G[12,56,34]");
  CHECK(a != b);
  CHECK(partner(a) == b);
  CHECK(partner(b) == a);
  CHECK(point_of(a) == point_of(b));
  for (auto d : enumerate_divisors())
    if (d.kind() == DivisorKind::CyclicTriple) CHECK(partner(d) != d);
  CHECK_THROWS(DivisorId::parse("G[12,23,45]"));
  CHECK_THROWS(DivisorId::parse("E[12]"));
  CHECK_THROWS(DivisorId::parse("F[17]"));
}

TEST_CASE("permutation action is a group action") {
  std::mt19937 rng(7);
  const auto all = enumerate_divisors();
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_perm(rng);
    const auto t = random_perm(rng);
    for (auto d : all) CHECK(apply_perm(s, apply_perm(t, d)) == apply_perm(s.compose(t), d));
    for (auto d : all) CHECK(apply_perm(s.inverse(), apply_perm(s, d)) == d);
  }
  CHECK(Permutation::all().size() == 720);
  CHECK(apply_perm(Permutation::transposition(1, 4), DivisorId::parse("E[123]")).to_string() == "E[234]");
}

TEST_CASE("duality") {
  for (auto d : enumerate_divisors()) {
    CHECK(duality(duality(d)) == d);
    if (d.kind() != DivisorKind::Pair) CHECK(duality(d) != d);
  }
  CHECK(duality(DivisorId::parse("E[123]")).to_string() == "E[456]");
  CHECK(duality(DivisorId::parse("G[12,34,56]")) == DivisorId::parse("G[34,12,56]"));
  CHECK(duality(DivisorId::parse("F[35]")).to_string() == "F[35]");
}

TEST_CASE("intersection predicate") {
  const auto lines = ResolutionConfig::all_lines();
  const auto planes = ResolutionConfig::all_planes();
  auto meet = [&](const char* a, const char* b, const ResolutionConfig& c) {
    return intersects(DivisorId::parse(a), DivisorId::parse(b), c);
  };
  CHECK_FALSE(meet("E[123]", "E[124]", lines));
  CHECK(meet("E[123]", "E[145]", lines));
  CHECK(meet("E[123]", "E[456]", lines));
  CHECK_FALSE(meet("F[12]", "F[13]", lines));
  CHECK(meet("F[12]", "F[34]", lines));
  CHECK_FALSE(meet("E[123]", "F[14]", lines));
  CHECK(meet("E[123]", "F[12]", lines));
  CHECK(meet("E[123]", "F[45]", lines));
  CHECK(meet("F[12]", "G[12,34,56]", lines));
  CHECK_FALSE(meet("F[13]", "G[12,34,56]", lines));
  CHECK(meet("E[123]", "G[12,34,56]", lines));
  CHECK(meet("E[124]", "G[12,34,56]", lines));
  CHECK_FALSE(meet("E[125]", "G[12,34,56]", lines));
  CHECK_FALSE(meet("G[12,34,56]", "G[12,56,34]", lines));
  CHECK(meet("G[12,34,56]", "G[12,56,34]", planes));
  CHECK_FALSE(meet("G[12,34,56]", "G[13,24,56]", planes));
  CHECK_THROWS(meet("F[12]", "F[12]", lines));
  CHECK(count_disjoint(lines) == 1545);
  CHECK(count_disjoint(planes) == 1530);
}

TEST_CASE("intersection predicate is invariant") {
  std::mt19937 rng(11);
  const auto all = enumerate_divisors();
  const auto cfg = ResolutionConfig::with_planes({SingularPointId::from_index(0), SingularPointId::from_index(7)});
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_perm(rng);
    const auto moved = apply_perm(s, cfg);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        const bool m = intersects(all[i], all[j], cfg);
        CHECK(m == intersects(apply_perm(s, all[i]), apply_perm(s, all[j]), moved));
        CHECK(m == intersects(duality(all[i]), duality(all[j]), cfg));
      }
  }
}

TEST_CASE("config json") {
  const auto cfg = ResolutionConfig::from_json(R"({"S2":[["34","12","56"],["13","25","46"]]})");
  CHECK(cfg.s2().size() == 2);
  CHECK(cfg.in_s2(SingularPointId::from_matching(mark_set({1, 2}), mark_set({3, 4}), mark_set({5, 6}))));
  CHECK(ResolutionConfig::from_json(cfg.to_json()) == cfg);
  CHECK(ResolutionConfig::from_json("{}") == ResolutionConfig::all_lines());
  CHECK_THROWS_AS(ResolutionConfig::from_json(R"({"S2":[["12","23","56"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(ResolutionConfig::from_json(R"({"S2":[["12","34","56"],["34","56","12"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(ResolutionConfig::from_json(R"({"S2":[["12","34"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(ResolutionConfig::from_json("not json"), std::invalid_argument);
  const auto rel = s2_triple_relations(cfg);
  REQUIRE(rel.size() == 2);
  CHECK(rel[0][0].to_string() == "F[12]");
}
