#pragma once

// Polynomials in numbered generators, truncated above degree 4.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "m36/exactla.hpp"

namespace m36 {

/// Commutative monomial of degree at most 4 in generators 0..126.
class Monomial {
 public:
  static constexpr int kMaxDegree = 4;

  Monomial() = default;
  /// Any order; throws std::domain_error above degree 4.
  explicit Monomial(std::vector<int> generators);
  static Monomial generator(int g) { return Monomial(std::vector<int>{g}); }

  int degree() const { return deg_; }
  int operator[](int i) const { return g_[i]; }
  std::vector<int> factors() const { return {g_.begin(), g_.begin() + deg_}; }
  /// Distinct generators, increasing.
  std::vector<int> support() const;
  /// nullopt when the product has degree above 4.
  std::optional<Monomial> times(const Monomial& other) const;
  /// Injective packing of the sorted factors.
  std::uint32_t key() const;

  /// Degree first, then lexicographic on the sorted factors.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint8_t deg_ = 0;
  std::array<std::uint8_t, kMaxDegree> g_{};
};

/// Sparse polynomial with rational coefficients; no zero coefficient is stored.
class RingElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  RingElement() = default;
  static RingElement constant(const Rational& c);
  static RingElement generator(int g, const Rational& c = 1);
  static RingElement monomial(const Monomial& m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// -1 for the zero element.
  int max_degree() const;
  bool is_homogeneous(int degree) const;
  /// Part of the given degree.
  RingElement component(int degree) const;
  Rational coefficient(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Rational& c);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator-(RingElement a) { return a *= Rational(-1); }
  friend RingElement operator*(RingElement a, const Rational& c) { return a *= c; }
  friend RingElement operator*(const Rational& c, RingElement a) { return a *= c; }
  /// Products above degree 4 are dropped.
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement&, const RingElement&) = default;

  RingElement pow(int e) const;
  /// Substitutes generator g -> image(g).
  RingElement substitute(const std::function<RingElement(int)>& image) const;
  /// Keeps the terms the predicate accepts.
  RingElement filter(const std::function<bool(const Monomial&)>& keep) const;

  /// "2*E[123]*F[45] - 1/3*G[12,34,56]^2"; "0" for zero.
  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  Terms terms_;
};

}  // namespace m36
