#pragma once

// Named classes on the small resolutions: delta classes and the Picard basis
// of M(3,6), the canonical and log canonical classes, test curves, and the
// table of top intersections of psi classes.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "m36/chow.hpp"
#include "m36/m0n.hpp"

namespace m36 {

struct NamedClass {
  std::string name;
  RingElement expansion;
};

/// delta_{ijk,lmn} = D_{ijk,lmn}.
RingElement delta_triple(MarkSet ijk);
/// delta_{ij,k,lmn} = D_{ij,klmn} + D_{kl,ij,mn} + D_{km,ij,ln} + D_{kn,ij,lm};
/// k must be the smallest mark outside ij.
RingElement delta_pair(MarkSet ij, int k);
/// delta_{ij,kl,mn} = D_{ij,kl,mn} - D_{kl,ij,mn}; k must be the smallest
/// mark outside ij.
RingElement delta_cyc(MarkSet ij, MarkSet kl, MarkSet mn);

/// 20 + 15 + 15 classes named delta[123], delta[12,3], delta[12,34,56]. The
/// cyclic ones take ij to be the pair containing 1.
std::vector<NamedClass> delta_classes();

struct PicardCertificate {
  std::vector<NamedClass> basis;
  /// Rank of the coefficient matrix in the basis of A^1.
  std::size_t rank = 0;
  std::vector<bool> in_subring;
  /// Dimension of the common kernel of the 15 line restrictions on A^1.
  std::size_t kernel_dim = 0;
  bool ok() const;
};
/// Needs the all-lines ring; throws VerificationError unless the rank is 36.
PicardCertificate picard_m36_basis(const ChowRing& ring);

struct CanonicalReport {
  RingElement K, B, KplusB;
  /// K minus the expression from the blowup construction, reduced.
  RingElement identity_residual;
  std::vector<std::pair<SingularPointId, FiberValue>> line_restrictions;
  Rational KplusB_fourth;
  bool ok() const;
  /// Rationals as "p/q" strings.
  std::string to_json() const;
};
RingElement canonical_K();
RingElement boundary_B();
/// -(1/2)(r_6^* B_05 + r_5^* B_05) + D.
RingElement canonical_from_blowup();
/// Needs the all-lines ring; throws VerificationError when the identity fails.
CanonicalReport canonical_classes(const ChowRing& ring);

struct CurveValue {
  std::string curve;
  std::string against;
  Rational value;
  std::optional<Rational> expected;
};
/// L = F[12] F[34] F[56] and C = E[123] E[345] E[246] against every divisor
/// and against r_6^*(D_12).
std::vector<CurveValue> curve_checks(const ChowRing& ring);

/// Product of four psi_ij, factors sorted.
struct PsiMonomial {
  std::array<std::pair<int, int>, 4> f;
  friend auto operator<=>(const PsiMonomial&, const PsiMonomial&) = default;
};
PsiMonomial make_psi_monomial(std::array<std::pair<int, int>, 4> factors);
/// "psi[1,2]*psi[1,2]*psi[2,1]*psi[2,1]".
std::string to_string(const PsiMonomial& m);
/// Throws std::invalid_argument.
PsiMonomial parse_psi_monomial(const std::string& text);
/// Smallest image under S_6.
PsiMonomial orbit_representative(const PsiMonomial& m);
/// At least three of the first indices coincide.
bool psi_zero_criterion(const PsiMonomial& m);
/// All 40920 monomials.
std::vector<PsiMonomial> all_psi_monomials();

struct PsiTable {
  /// Orbit representative -> integral.
  std::map<PsiMonomial, Rational> orbits;
  /// Orbit sizes.
  std::map<PsiMonomial, std::size_t> sizes;
  Rational value(const PsiMonomial& m) const;
};
PsiTable psi_table(const ChowRing& ring);

struct Table1Entry {
  PsiMonomial printed;
  int value = 0;
};
/// The embedded table: every printed product with its row.
std::vector<Table1Entry> table1();

struct TableDiscrepancy {
  PsiMonomial orbit;
  std::vector<std::string> printed;
  std::vector<int> printed_values;
  Rational computed;
};
struct TableComparison {
  std::size_t printed_entries = 0;
  std::size_t printed_orbits = 0;
  std::size_t computed_nonzero_orbits = 0;
  std::size_t orbits = 0;
  /// Orbits where printed and computed differ, including nonzero orbits
  /// missing from the table and printed orbits that integrate to 0.
  std::vector<TableDiscrepancy> discrepancies;
  /// Orbits printed more than once.
  std::vector<TableDiscrepancy> repeated;
  bool zero_criterion = true;
  bool values_in_range = true;
  bool ok() const;
};
TableComparison compare_with_table1(const PsiTable& t);

/// Names of psi_ij whose twelve expansions psi(i, j, n, k) do not all agree.
std::vector<std::string> psi_choice_failures(const ChowRing& ring);

/// psi_ij = D_jk + D_lm on M_{0,5} = M(3,5), k the smallest mark outside {i,j}.
RingElement m35_psi(const M0nRing& ring, int i, int j);

}  // namespace m36
