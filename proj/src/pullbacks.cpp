#include "m36/pullbacks.hpp"

#include <stdexcept>

namespace m36 {

namespace {

// Marks outside the set, increasing.
std::vector<int> rest(MarkSet s) { return marks_of(static_cast<MarkSet>(kAllMarks & ~s)); }

RingElement cyc(MarkSet a, MarkSet b, MarkSet c) { return divisor_class(DivisorId::cyclic(a, b, c)); }

void check_pullback(int k, MarkSet ij) {
  if (k < 1 || k > 6 || mark_count(ij) != 2 || (ij & ~kAllMarks) || (ij & mark_set({k})))
    throw std::invalid_argument("pullback needs a mark k and a pair avoiding it");
}

}  // namespace

RingElement divisor_class(DivisorId d) { return RingElement::generator(d.index()); }

std::string divisor_name(int g) { return DivisorId::from_index(g).to_string(); }

RingElement pullback_r(int k, MarkSet ij) {
  check_pullback(k, ij);
  const MarkSet mk = mark_set({k});
  const auto lmn = rest(static_cast<MarkSet>(ij | mk));
  RingElement e = divisor_class(DivisorId::triple(static_cast<MarkSet>(kAllMarks & ~(ij | mk))));
  e += divisor_class(DivisorId::pair(ij));
  for (int x = 0; x < 3; ++x) {
    MarkSet other = 0;
    for (int y = 0; y < 3; ++y)
      if (y != x) other = static_cast<MarkSet>(other | mark_set({lmn[y]}));
    e += cyc(mark_set({k, lmn[x]}), ij, other);
  }
  return e;
}

RingElement pullback_f(int k, MarkSet ij) {
  check_pullback(k, ij);
  const MarkSet mk = mark_set({k});
  const auto lmn = rest(static_cast<MarkSet>(ij | mk));
  RingElement e = divisor_class(DivisorId::triple(static_cast<MarkSet>(ij | mk)));
  e += divisor_class(DivisorId::pair(ij));
  for (int x = 0; x < 3; ++x) {
    MarkSet other = 0;
    for (int y = 0; y < 3; ++y)
      if (y != x) other = static_cast<MarkSet>(other | mark_set({lmn[y]}));
    e += cyc(ij, mark_set({k, lmn[x]}), other);
  }
  return e;
}

RingElement psi(int i, int j, int n, int k) {
  if (i < 1 || i > 6 || j < 1 || j > 6 || n < 1 || n > 6 || k < 1 || k > 6)
    throw std::invalid_argument("psi: mark out of range");
  if (i == j || n == i || n == j || k == i || k == j || k == n)
    throw std::invalid_argument("psi: marks must be distinct");
  const auto lm = rest(mark_set({i, j, n, k}));
  return pullback_f(n, mark_set({j, k})) + pullback_f(n, mark_set({lm[0], lm[1]})) + pullback_r(i, mark_set({j, n}));
}

RingElement psi(int i, int j) {
  if (i == j) throw std::invalid_argument("psi: i = j");
  int n = 6;
  while (n == i || n == j) --n;
  int k = 1;
  while (k == i || k == j || k == n) ++k;
  return psi(i, j, n, k);
}

RingElement phi(int i, int j) { return psi(i, j) + psi(j, i); }

std::vector<RingElement> linear_relations() {
  std::vector<RingElement> out;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (j == i) continue;
      const auto abcd = rest(mark_set({i, j}));
      const int a = abcd[0], b = abcd[1], c = abcd[2], d = abcd[3];
      const auto ab = pullback_r(i, mark_set({a, b})) + pullback_r(i, mark_set({c, d}));
      out.push_back(ab - pullback_r(i, mark_set({a, c})) - pullback_r(i, mark_set({b, d})));
      out.push_back(ab - pullback_r(i, mark_set({a, d})) - pullback_r(i, mark_set({b, c})));
    }
  return out;
}

}  // namespace m36
