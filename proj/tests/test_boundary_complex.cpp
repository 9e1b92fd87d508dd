#include <doctest.h>

#include <random>

#include "m36/boundary_complex.hpp"

using namespace m36;

namespace {

void check_h3_only(const std::vector<HomologyGroup>& h) {
  for (const auto& g : h) {
    CHECK(g.torsion.empty());
    CHECK(g.rank == (g.dim == 3 ? 126u : 0u));
  }
}

void check_closed(const SimplicialComplex& c) {
  for (int d = 1; d <= c.dimension(); ++d)
    for (const auto& f : c.faces(d))
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face g = f;
        g.erase(g.begin() + static_cast<long>(i));
        CHECK(c.contains(g));
      }
}

long reduced_euler(const std::vector<HomologyGroup>& h) {
  long s = 0;
  for (const auto& g : h) s += (g.dim % 2 ? -1 : 1) * static_cast<long>(g.rank);
  return s;
}

}  // namespace

TEST_CASE("unresolved complex census") {
  const auto d = unresolved_complex();
  const auto f = d.face_counts();
  REQUIRE(f.size() == 5);
  CHECK(f[0] == 65);
  CHECK(f[1] == 550);
  CHECK(f[4] == 15);
  const auto census = edge_census(d);
  CHECK(census.at("ee-share-one") == 90);
  CHECK(census.at("ee-complement") == 10);
  CHECK(census.at("ff") == 45);
  CHECK(census.at("gg") == 15);
  CHECK(census.at("ef-disjoint") == 60);
  CHECK(census.at("ef-contained") == 60);
  CHECK(census.at("eg") == 180);
  CHECK(census.at("fg") == 90);
  for (const auto& s : d.faces(4)) {
    CHECK(DivisorId::from_index(s[0]).kind() == DivisorKind::Pair);
    CHECK(DivisorId::from_index(s[3]).kind() == DivisorKind::CyclicTriple);
    CHECK(partner(DivisorId::from_index(s[3])).index() == s[4]);
  }
  check_closed(d);
  const auto h = d.reduced_homology();
  check_h3_only(h);
  CHECK(reduced_euler(h) == d.euler_characteristic() - 1);
}

TEST_CASE("resolved complexes") {
  const auto lines = build_complex(ResolutionConfig::all_lines());
  CHECK(lines.face_counts()[1] == 535);
  CHECK(lines.dimension() == 3);
  // with no S2 points the result is flag
  const auto flag = SimplicialComplex::flag(
      kDivisorCount,
      [&](int a, int b) {
        return intersects(DivisorId::from_index(a), DivisorId::from_index(b), ResolutionConfig::all_lines());
      },
      4);
  CHECK(flag.face_counts() == lines.face_counts());
  const auto f = lines.face_counts();
  CHECK(static_cast<long>(f[2]) - static_cast<long>(f[3]) == 345);

  const auto planes = build_complex(ResolutionConfig::all_planes());
  CHECK(planes.face_counts()[1] == 550);
  CHECK_FALSE(planes.contains_support({20 + 0, 20 + 9, 20 + 14}));
  check_closed(planes);

  std::mt19937 rng(1);
  for (const auto& cfg : {ResolutionConfig::all_lines(), ResolutionConfig::all_planes(),
                          ResolutionConfig::with_planes({SingularPointId::from_index(3), SingularPointId::from_index(11)})}) {
    const auto c = build_complex(cfg);
    const auto h = c.reduced_homology();
    check_h3_only(h);
    CHECK(reduced_euler(h) == c.euler_characteristic() - 1);
  }
}

TEST_CASE("full simplex is acyclic") {
  const auto s = SimplicialComplex::flag(5, [](int, int) { return true; }, 4);
  CHECK(s.face_counts() == std::vector<std::size_t>{5, 10, 10, 5, 1});
  for (const auto& g : s.reduced_homology()) {
    CHECK(g.rank == 0);
    CHECK(g.torsion.empty());
  }
  CHECK_THROWS_AS(SimplicialComplex::flag(6, [](int, int) { return true; }, 4), std::logic_error);
}

TEST_CASE("homology json") {
  const auto s = SimplicialComplex::flag(3, [](int a, int b) { return a + b != 3; }, 2);
  const auto j = homology_json(s.reduced_homology(), s.face_counts());
  CHECK(j == R"({"degrees":[{"dim":0,"rank":0,"torsion":[]},{"dim":1,"rank":0,"torsion":[]}],"faces":[3,2]})");
}
