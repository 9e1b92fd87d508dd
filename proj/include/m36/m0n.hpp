#pragma once

// Keel's presentation of the Chow ring of the moduli space of stable n-pointed
// rational curves, 4 <= n <= 6.

#include <string>
#include <vector>

#include "m36/labels.hpp"
#include "m36/quotient.hpp"

namespace m36 {

class M0nRing {
 public:
  explicit M0nRing(int n, Mode mode = Mode::Exact);

  int n() const { return n_; }
  /// Canonical sides (the side not containing n), by size then lexicographically.
  const std::vector<MarkSet>& divisors() const { return sides_; }
  /// Either side of the partition is accepted.
  int divisor_index(MarkSet side) const;
  std::string divisor_name(int g) const;
  RingElement divisor(MarkSet side) const { return RingElement::generator(divisor_index(side)); }
  bool intersects(int a, int b) const;

  /// Sum of the divisors with i on one side and the reference marks j, k on the other.
  RingElement psi(int i, int j, int k) const;
  /// References are the two smallest marks other than i.
  RingElement psi(int i) const;
  /// Product of psi_i^{e_i}; total degree n - 3.
  Rational integrate_psi(const std::vector<int>& exponents) const;

  const GradedQuotient& quotient() const { return q_; }
  Rational integrate(const RingElement& e) const { return q_.integrate(e); }

 private:
  static std::vector<MarkSet> canonical_sides(int n);
  int n_;
  std::vector<MarkSet> sides_;
  GradedQuotient q_;
};

/// (total; parts) multinomial coefficient, 0 when the parts do not sum to total.
Integer multinomial(int total, const std::vector<int>& parts);

}  // namespace m36
