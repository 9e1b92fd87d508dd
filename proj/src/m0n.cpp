#include "m36/m0n.hpp"

#include <algorithm>
#include <stdexcept>

namespace m36 {

namespace {

MarkSet marks_upto(int n) { return static_cast<MarkSet>((1u << n) - 1); }

bool separates(MarkSet side, MarkSet a, MarkSet b) {
  return ((side & a) == a && (side & b) == 0) || ((side & b) == b && (side & a) == 0);
}

int check_n(int n) {
  if (n < 4 || n > 6) throw std::invalid_argument("n must lie in 4..6");
  return n;
}

QuotientData m0n_data(int n, const std::vector<MarkSet>& sides) {
  QuotientData d;
  d.generators = static_cast<int>(sides.size());
  d.top_degree = n - 3;
  d.complex = SimplicialComplex::flag(
      d.generators,
      [&](int a, int b) {
        const MarkSet x = sides[a], y = sides[b];
        return (x & y) == x || (x & y) == y || (x & y) == 0;
      },
      n - 4);
  auto sum = [&](MarkSet a, MarkSet b) {
    LinearForm f;
    for (int g = 0; g < d.generators; ++g)
      if (separates(sides[g], a, b)) f.emplace_back(g, Integer(1));
    return f;
  };
  auto minus = [](LinearForm a, const LinearForm& b) {
    for (const auto& [g, c] : b) a.emplace_back(g, -c);
    return a;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e) {
          const auto ab = sum(mark_set({a, b}), mark_set({c, e}));
          d.linear.push_back(minus(ab, sum(mark_set({a, c}), mark_set({b, e}))));
          d.linear.push_back(minus(ab, sum(mark_set({a, e}), mark_set({b, c}))));
        }
  return d;
}

}  // namespace

std::vector<MarkSet> M0nRing::canonical_sides(int n) {
  std::vector<MarkSet> out;
  for (int size = 2; size <= n - 2; ++size) {
    std::vector<MarkSet> level;
    for (unsigned s = 0; s < (1u << (n - 1)); ++s)
      if (mark_count(static_cast<MarkSet>(s)) == size) level.push_back(static_cast<MarkSet>(s));
    std::sort(level.begin(), level.end(), [](MarkSet a, MarkSet b) { return marks_of(a) < marks_of(b); });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

M0nRing::M0nRing(int n, Mode mode)
    : n_(check_n(n)), sides_(canonical_sides(n)), q_(m0n_data(n, sides_), mode) {
  // any maximal face is a point
  for (const auto& m : q_.admissible(n - 3))
    if (static_cast<int>(m.support().size()) == n - 3) {
      q_.normalize(RingElement::monomial(m), 1);
      break;
    }
}

int M0nRing::divisor_index(MarkSet side) const {
  const MarkSet all = marks_upto(n_);
  if (side & ~all) throw std::invalid_argument("mark out of range");
  if (side & (1u << (n_ - 1))) side = static_cast<MarkSet>(all & ~side);
  const auto it = std::find(sides_.begin(), sides_.end(), side);
  if (it == sides_.end()) throw std::invalid_argument("not a boundary divisor");
  return static_cast<int>(it - sides_.begin());
}

std::string M0nRing::divisor_name(int g) const { return "D[" + mark_string(sides_.at(g)) + "]"; }

bool M0nRing::intersects(int a, int b) const {
  const MarkSet x = sides_.at(a), y = sides_.at(b);
  return (x & y) == x || (x & y) == y || (x & y) == 0;
}

RingElement M0nRing::psi(int i, int j, int k) const {
  if (i == j || i == k || j == k) throw std::invalid_argument("psi needs three distinct marks");
  RingElement out;
  const MarkSet mi = mark_set({i}), refs = mark_set({j, k});
  for (int g = 0; g < static_cast<int>(sides_.size()); ++g)
    if (separates(sides_[g], mi, refs)) out += RingElement::generator(g);
  return out;
}

RingElement M0nRing::psi(int i) const {
  std::vector<int> refs;
  for (int m = 1; m <= n_ && refs.size() < 2; ++m)
    if (m != i) refs.push_back(m);
  return psi(i, refs[0], refs[1]);
}

Rational M0nRing::integrate_psi(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) != n_) throw std::invalid_argument("one exponent per mark");
  RingElement prod = RingElement::constant(1);
  for (int i = 1; i <= n_; ++i) prod = q_.multiply(prod, psi(i).pow(exponents[i - 1]));
  return q_.integrate(prod);
}

Integer multinomial(int total, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != total) return 0;
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(total));
  for (int p : parts) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
    r /= f;
  }
  return r;
}

}  // namespace m36
