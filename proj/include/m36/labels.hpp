#pragma once

// Combinatorics of the boundary of the moduli space of six lines in the plane:
// the 65 boundary divisors, the 15 non-normal-crossing points, the S_6 action,
// the duality involution and the pairwise intersection predicate.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace m36 {

/// Subset of the marks {1..6}; bit (i-1) is set when i belongs to the set.
using MarkSet = std::uint8_t;

inline constexpr MarkSet kAllMarks = 0x3f;
inline constexpr int kTripleCount = 20;
inline constexpr int kPairCount = 15;
inline constexpr int kCyclicCount = 30;
inline constexpr int kDivisorCount = 65;
inline constexpr int kPointCount = 15;

MarkSet mark_set(std::initializer_list<int> marks);
int mark_count(MarkSet s);
std::vector<int> marks_of(MarkSet s);
/// Digits of the set in increasing order, e.g. {1,2,3} -> "123".
std::string mark_string(MarkSet s);
/// Parses a run of distinct digits 1..6 ("345").
MarkSet parse_marks(std::string_view digits);

enum class DivisorKind : std::uint8_t { Triple, Pair, CyclicTriple };

/// One of the 65 boundary divisors.
///
/// Triple  D_{ijk,lmn}: indexed by the first 3-subset (D_{ijk,lmn} != D_{lmn,ijk}).
/// Pair    D_{ij,klmn}: indexed by the pair.
/// CyclicTriple D_{ij,kl,mn}: an ordered triple of disjoint pairs up to cyclic
/// rotation; stored with the pair containing 1 first.
///
/// The global order (used for monomials and matrices) is Triple < Pair <
/// CyclicTriple, lexicographic within each kind; `index()` is the position.
class DivisorId {
 public:
  static DivisorId triple(MarkSet first3);
  static DivisorId pair(MarkSet pair2);
  /// Canonicalizes the cyclic rotation; the three pairs must be disjoint.
  static DivisorId cyclic(MarkSet a, MarkSet b, MarkSet c);
  static DivisorId from_index(int index);
  /// Text syntax E[ijk], F[ij], G[ij,kl,mn].
  static DivisorId parse(std::string_view text);

  int index() const { return index_; }
  DivisorKind kind() const;
  MarkSet triple_set() const;
  MarkSet pair_set() const;
  std::array<MarkSet, 3> cyclic_pairs() const;
  std::string to_string() const;

  friend auto operator<=>(DivisorId, DivisorId) = default;

 private:
  explicit DivisorId(int index) : index_(static_cast<std::uint8_t>(index)) {}
  std::uint8_t index_;
};

/// One of the 15 points P_{ij,kl,mn} where the boundary is not normal
/// crossings, i.e. a perfect matching of {1..6}.
class SingularPointId {
 public:
  static SingularPointId from_matching(MarkSet a, MarkSet b, MarkSet c);
  static SingularPointId from_index(int index);
  int index() const { return index_; }
  /// The three pairs in increasing order.
  std::array<MarkSet, 3> matching() const;
  bool contains_pair(MarkSet pair2) const;
  std::string to_string() const;

  friend auto operator<=>(SingularPointId, SingularPointId) = default;

 private:
  explicit SingularPointId(int index) : index_(static_cast<std::uint8_t>(index)) {}
  std::uint8_t index_;
};

enum class Fiber : std::uint8_t { Line, Plane };

/// Small resolution: every singular point is replaced by a P^1 (S1) or a P^2 (S2).
class ResolutionConfig {
 public:
  ResolutionConfig() { fibers_.fill(Fiber::Line); }
  static ResolutionConfig all_lines();
  static ResolutionConfig all_planes();
  static ResolutionConfig with_planes(const std::vector<SingularPointId>& s2);

  Fiber fiber(SingularPointId p) const { return fibers_[p.index()]; }
  void set(SingularPointId p, Fiber f) { fibers_[p.index()] = f; }
  bool in_s1(SingularPointId p) const { return fiber(p) == Fiber::Line; }
  bool in_s2(SingularPointId p) const { return fiber(p) == Fiber::Plane; }
  std::vector<SingularPointId> s1() const;
  std::vector<SingularPointId> s2() const;

  /// {"S2": [["12","34","56"], ...]}; unlisted points are in S1.
  std::string to_json() const;
  /// Throws std::invalid_argument on malformed input (bad pairs, overlapping
  /// pairs inside a matching, duplicate points).
  static ResolutionConfig from_json(std::string_view text);

  friend bool operator==(const ResolutionConfig&, const ResolutionConfig&) = default;

 private:
  std::array<Fiber, kPointCount> fibers_;
};

/// Bijection of {1..6}.
class Permutation {
 public:
  Permutation();
  /// images[i-1] is the image of i.
  explicit Permutation(const std::array<int, 6>& images);
  static Permutation transposition(int a, int b);
  /// The 720 elements in lexicographic order of image tuples.
  static std::vector<Permutation> all();

  int operator()(int mark) const { return image_[mark - 1]; }
  MarkSet operator()(MarkSet s) const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<int, 6> image_;
};

std::vector<DivisorId> enumerate_divisors();
std::vector<SingularPointId> enumerate_points();

DivisorId apply_perm(const Permutation& sigma, DivisorId d);
SingularPointId apply_perm(const Permutation& sigma, SingularPointId p);
ResolutionConfig apply_perm(const Permutation& sigma, const ResolutionConfig& cfg);

/// Triple first3 -> complement, D_{ij,kl,mn} -> D_{kl,ij,mn}, Pair fixed.
DivisorId duality(DivisorId d);

/// The matching underlying a CyclicTriple divisor.
SingularPointId point_of(DivisorId cyclic);
/// D_{ij,mn,kl} for D_{ij,kl,mn}.
DivisorId partner(DivisorId cyclic);

/// False exactly when the product of the two classes is a quadratic relation.
/// Throws std::invalid_argument when a == b.
bool intersects(DivisorId a, DivisorId b, const ResolutionConfig& cfg);

/// For each point in S2 the triple {D_{ij,klmn}, D_{kl,ijmn}, D_{mn,ijkl}}.
std::vector<std::array<DivisorId, 3>> s2_triple_relations(const ResolutionConfig& cfg);

}  // namespace m36
