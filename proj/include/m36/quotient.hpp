#pragma once

// Graded quotient of a Stanley-Reisner ring by linear forms: admissible
// monomials, relation matrices, ranks, the top-degree integration functional
// and normal forms.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "m36/boundary_complex.hpp"
#include "m36/exactla.hpp"
#include "m36/ring.hpp"

namespace m36 {

/// A quantity guaranteed by theory came out wrong.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { Exact, TwoPrime };
std::string to_string(Mode m);
/// "exact" or "two-prime"; throws std::invalid_argument otherwise.
Mode parse_mode(const std::string& text);

using LinearForm = std::vector<std::pair<int, Integer>>;

struct QuotientData {
  int generators = 0;
  int top_degree = 0;
  /// Admissible supports.
  SimplicialComplex complex;
  /// Generators of the linear relations over Z.
  std::vector<LinearForm> linear;
};

class GradedQuotient {
 public:
  GradedQuotient(QuotientData data, Mode mode);

  Mode mode() const { return mode_; }
  int top_degree() const { return top_; }
  int generators() const { return data_.generators; }
  const SimplicialComplex& complex() const { return data_.complex; }
  /// Z-basis of the linear relations.
  const std::vector<LinearForm>& linear_basis() const { return linear_; }

  const std::vector<Monomial>& admissible(int k) const { return admissible_.at(k); }
  std::vector<std::size_t> admissible_counts() const;
  bool is_admissible(const Monomial& m) const;
  /// Rows: linear basis element times admissible monomial of degree k-1,
  /// non-admissible products dropped; columns: admissible(k).
  SparseIntegerMatrix relation_matrix(int k) const;

  std::vector<std::size_t> ranks() const { return ranks_; }
  /// Certified only in exact mode.
  std::optional<bool> torsion_free() const { return torsion_free_; }
  std::vector<Integer> torsion(int k) const;

  /// Greedy basis: the lexicographically first admissible monomials that stay
  /// independent in the quotient.
  const std::vector<Monomial>& basis(int k) const { return basis_.at(k); }

  RingElement prune(const RingElement& e) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const { return prune(a * b); }

  /// Rescales the integral so that the class integrates to value.
  void normalize(const RingElement& cls, const Rational& value);
  /// Throws std::domain_error unless every term has top degree.
  Rational integrate(const RingElement& e) const;
  Rational integral_of(const Monomial& m) const;

  /// Coordinates of each homogeneous part in basis(k).
  RingElement normal_form(const RingElement& e) const;
  bool is_zero(const RingElement& e) const { return normal_form(e).empty(); }

  /// Integrals of basis(k) times basis(top - k).
  std::vector<std::vector<Rational>> pairing_matrix(int k) const;

 private:
  std::optional<std::uint32_t> index_of(const Monomial& m) const;
  Rational raw_integral(const RingElement& e) const;
  void enumerate_admissible();
  void compute_ranks();
  void compute_integral();
  void choose_bases();

  QuotientData data_;
  Mode mode_;
  int top_;
  std::vector<LinearForm> linear_;
  std::vector<std::vector<Monomial>> admissible_;
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> index_;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<Integer>> torsion_;
  std::optional<bool> torsion_free_;
  std::vector<Rational> lambda_;
  Rational scale_ = 1;
  std::vector<std::vector<Monomial>> basis_;
  // (G^T)^{-1} where G pairs basis(k) with basis(top - k).
  std::vector<std::vector<std::vector<Rational>>> dual_;
};

}  // namespace m36
