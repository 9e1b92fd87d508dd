#pragma once

// Chow rings of the small resolutions of the moduli space of six lines in the plane.

#include <array>
#include <string>
#include <vector>

#include "m36/labels.hpp"
#include "m36/pullbacks.hpp"
#include "m36/quotient.hpp"

namespace m36 {

struct MultiplicativeRelations {
  std::vector<Monomial> quadratics;
  std::vector<Monomial> cubics;
};
MultiplicativeRelations multiplicative_relation_generators(const ResolutionConfig& cfg);

/// 1, 51, 127 + |S2|, 51, 1.
std::vector<std::size_t> expected_ranks(const ResolutionConfig& cfg);

/// Value of a class restricted to an exceptional fiber: coefficients of
/// 1, p (line) or 1, h, h^2 (plane).
struct FiberValue {
  Fiber kind = Fiber::Line;
  std::vector<Rational> coeffs;
  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const FiberValue&, const FiberValue&) = default;
};
FiberValue fiber_product(const FiberValue& a, const FiberValue& b);

class ChowRing {
 public:
  /// Throws VerificationError when the ranks or torsion differ from the theorem.
  ChowRing(const ResolutionConfig& cfg, Mode mode);

  const ResolutionConfig& config() const { return cfg_; }
  const GradedQuotient& quotient() const { return q_; }
  Mode mode() const { return q_.mode(); }
  long build_ms() const { return build_ms_; }

  RingElement multiply(const RingElement& a, const RingElement& b) const { return q_.multiply(a, b); }
  RingElement product(const std::vector<RingElement>& factors) const;
  /// Normalized by psi_56^2 psi_65^2 = 1.
  Rational integrate(const RingElement& e) const { return q_.integrate(e); }
  RingElement normal_form(const RingElement& e) const { return q_.normal_form(e); }
  bool is_zero(const RingElement& e) const { return q_.is_zero(e); }

  FiberValue restrict_to_fiber(const RingElement& e, SingularPointId pt) const;
  /// Throws std::invalid_argument when the point carries the other kind of fiber.
  FiberValue restrict_to_fiber(const RingElement& e, SingularPointId pt, Fiber kind) const;

  /// Needs the all-lines configuration.
  bool m36_subring_membership(const RingElement& e) const;
  /// Ranks of the subring; degree 1 is the corank of the 15 line restrictions on A^1.
  std::vector<std::size_t> m36_chow_ranks() const;

  /// {"config","mode","ranks","torsion_free","admissible_monomials","runtime_ms"}.
  std::string ranks_json() const;

 private:
  ResolutionConfig cfg_;
  long build_ms_ = 0;
  GradedQuotient q_;
};

QuotientData chow_data(const ResolutionConfig& cfg);

/// Ranks obtained by adding the Chow groups of the blowup centers to those of P^2 x P^2.
std::vector<std::size_t> blowup_rank_recursion();

}  // namespace m36
