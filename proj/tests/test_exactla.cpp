#include <doctest.h>

#include <random>

#include "m36/exactla.hpp"

using namespace m36;

namespace {

SparseIntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density, int range) {
  SparseIntegerMatrix m(r, c);
  std::uniform_int_distribution<int> pick(0, 99), val(-range, range);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::pair<std::uint32_t, Integer>> e;
    for (std::size_t j = 0; j < c; ++j)
      if (pick(rng) < density) e.emplace_back(static_cast<std::uint32_t>(j), Integer(val(rng)));
    m.set_row(i, std::move(e));
  }
  return m;
}

std::vector<std::vector<Rational>> to_dense(const SparseIntegerMatrix& m) {
  std::vector<std::vector<Rational>> d(m.nrows(), std::vector<Rational>(m.ncols()));
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (const auto& e : m.row(i)) d[i][e.col] = e.value;
  return d;
}

}  // namespace

TEST_CASE("rationals print as p/q") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("smith normal form of small matrices") {
  auto s = smith_normal_form(SparseIntegerMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  REQUIRE(s.diagonal.size() == 3);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 6);
  CHECK(s.diagonal[2] == 12);
  CHECK_FALSE(s.torsion_free());
  s = smith_normal_form(SparseIntegerMatrix::from_dense({{1, 2}, {2, 4}, {0, 0}}));
  CHECK(s.rank == 1);
  CHECK(s.diagonal.size() == 2);
  CHECK(s.diagonal[1] == 0);
  CHECK(s.torsion_free());
  s = smith_normal_form(SparseIntegerMatrix::from_dense({{2, 0}, {0, 3}}));
  CHECK(s.diagonal[0] == 1);
  CHECK(s.diagonal[1] == 6);
}

TEST_CASE("ranks agree across methods") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = 5 + trial % 17, c = 4 + (trial * 7) % 19;
    auto m = random_matrix(rng, r, c, 25, 3);
    // a dependent row
    if (m.nrows() > 2) {
      std::vector<std::pair<std::uint32_t, Integer>> e;
      for (const auto& x : m.row(0)) e.emplace_back(x.col, 2 * x.value);
      for (const auto& x : m.row(1)) e.emplace_back(x.col, -3 * x.value);
      m.append_row(std::move(e));
    }
    const auto exact = dense_rank(to_dense(m));
    CHECK(rank_over_rationals(m) == exact);
    CHECK(rank_mod_p(m, kPrimeA) == exact);
    CHECK(smith_normal_form(m).rank == exact);
    CHECK(two_prime_rank(m).rank == exact);
  }
}

TEST_CASE("rank modulo a small prime sees the torsion") {
  const auto m = SparseIntegerMatrix::from_dense({{2, 0}, {0, 1}});
  CHECK(rank_mod_p(m, 2) == 1);
  CHECK(rank_mod_p(m, 3) == 2);
  CHECK_THROWS_AS(rank_mod_p(m, 4), NotPrime);
  CHECK_THROWS_AS(rank_mod_p(m, 1), NotPrime);
}

TEST_CASE("smith survives large entries") {
  const Integer big("123456789012345678901234567890");
  SparseIntegerMatrix m(2, 2);
  m.set_row(0, {{0, big}, {1, Integer(1)}});
  m.set_row(1, {{0, Integer(1)}, {1, big}});
  const auto s = smith_normal_form(m);
  CHECK(s.diagonal[0] == 1);
  CHECK(s.diagonal[1] == big * big - 1);
}

TEST_CASE("nullspace vectors are annihilated") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng, 6 + trial % 5, 12, 30, 4);
    const auto ker = nullspace_basis(m);
    CHECK(ker.size() + dense_rank(to_dense(m)) == m.ncols());
    for (const auto& v : ker)
      for (const auto& row : m.rows()) {
        Rational s = 0;
        for (const auto& e : row) s += e.value * v[e.col];
        CHECK(s == 0);
      }
    const auto kp = nullspace_mod_p(m, 101);
    for (const auto& v : kp)
      for (const auto& row : m.rows()) {
        Integer s = 0;
        for (const auto& e : row) s += e.value * Integer(static_cast<unsigned long>(v[e.col]));
        CHECK(s % 101 == 0);
      }
  }
}

TEST_CASE("lattice basis") {
  const auto m = SparseIntegerMatrix::from_dense({{2, 4}, {3, 6}, {1, 1}});
  const auto b = row_lattice_basis(m);
  CHECK(b.nrows() == 2);
  CHECK(smith_normal_form(b).diagonal == smith_normal_form(m).diagonal);
}

TEST_CASE("sms round trip") {
  const auto m = SparseIntegerMatrix::from_dense({{0, -2, 0}, {5, 0, 1}});
  const auto text = m.to_sms();
  CHECK(text == "2 3 M\n1 2 -2\n2 1 5\n2 3 1\n0 0 0\n");
  CHECK(SparseIntegerMatrix::from_sms(text).to_sms() == text);
}

TEST_CASE("crt and rational reconstruction") {
  const std::vector<std::uint64_t> primes{kPrimeA, kPrimeB};
  const Rational target(-355, 113);
  std::vector<std::uint64_t> res;
  for (auto p : primes) {
    Integer num = target.get_num(), den = target.get_den(), inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t());
    Integer r = num * inv;
    mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    res.push_back(r.get_ui());
  }
  const Integer x = crt(res, primes);
  const Integer mod = Integer(static_cast<unsigned long>(kPrimeA)) * Integer(static_cast<unsigned long>(kPrimeB));
  const auto q = rational_reconstruct(x, mod);
  REQUIRE(q.has_value());
  CHECK(*q == target);
}

TEST_CASE("dense inverse") {
  std::vector<std::vector<Rational>> a{{2, 1}, {1, 1}};
  const auto inv = dense_inverse(a);
  CHECK(inv[0][0] == 1);
  CHECK(inv[0][1] == -1);
  CHECK(inv[1][1] == 2);
  CHECK_THROWS_AS(dense_inverse({{1, 2}, {2, 4}}), std::domain_error);
}
