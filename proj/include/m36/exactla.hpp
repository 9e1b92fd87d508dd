#pragma once

// Exact sparse linear algebra over Z, Q and Z/p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace m36 {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// Accepts "p" or "p/q".
Rational parse_rational(const std::string& text);

/// Sparse matrix with arbitrary-precision integer entries, stored by rows.
/// Column indices are strictly increasing within a row and no zero is stored.
class SparseIntegerMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    Integer value;
  };
  using Row = std::vector<Entry>;

  SparseIntegerMatrix() = default;
  SparseIntegerMatrix(std::size_t nrows, std::size_t ncols);

  static SparseIntegerMatrix from_dense(const std::vector<std::vector<long>>& dense);
  static SparseIntegerMatrix identity(std::size_t n);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t nnz() const;
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t r) const { return rows_.at(r); }

  /// Sorts by column, merges duplicates, drops zeros.
  void set_row(std::size_t r, std::vector<std::pair<std::uint32_t, Integer>> entries);
  void append_row(std::vector<std::pair<std::uint32_t, Integer>> entries);

  /// SMS triplet text: "nrows ncols M", then "i j v" (1-based), then "0 0 0".
  std::string to_sms() const;
  static SparseIntegerMatrix from_sms(const std::string& text);

 private:
  Row normalize(std::vector<std::pair<std::uint32_t, Integer>> entries) const;
  std::size_t ncols_ = 0;
  std::vector<Row> rows_;
};

/// Invariant factors d_1 | d_2 | ... of length min(nrows, ncols); trailing
/// entries are zero beyond the rank.
struct SmithInvariants {
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
  /// True when every nonzero invariant factor is 1.
  bool torsion_free() const;
  /// The invariant factors greater than 1.
  std::vector<Integer> torsion() const;
};

struct NotPrime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Two 30-bit primes used by the two-prime rank protocol.
inline constexpr std::uint64_t kPrimeA = 1073741789;
inline constexpr std::uint64_t kPrimeB = 1073741783;

std::size_t rank_over_rationals(const SparseIntegerMatrix& m);
/// p must be a prime below 2^32; throws NotPrime otherwise.
std::size_t rank_mod_p(const SparseIntegerMatrix& m, std::uint64_t p);
SmithInvariants smith_normal_form(const SparseIntegerMatrix& m);
/// Basis of the right kernel over Q; one vector per non-pivot column.
std::vector<std::vector<Rational>> nullspace_basis(const SparseIntegerMatrix& m);
/// Basis of the right kernel over Z/p, entries in [0, p).
std::vector<std::vector<std::uint64_t>> nullspace_mod_p(const SparseIntegerMatrix& m, std::uint64_t p);

/// Rank accepted when two primes agree; otherwise falls back to the exact
/// rank over Q.
struct RankCertificate {
  std::size_t rank = 0;
  bool exact = false;
  std::vector<std::uint64_t> primes;
};
RankCertificate two_prime_rank(const SparseIntegerMatrix& m, std::uint64_t p = kPrimeA, std::uint64_t q = kPrimeB);

/// A Z-basis (in echelon form) of the lattice spanned by the rows.
SparseIntegerMatrix row_lattice_basis(const SparseIntegerMatrix& m);

/// Chinese remaindering of residues modulo pairwise coprime moduli; result in [0, prod).
Integer crt(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli);
/// Wang's rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

/// Dense exact rank / inverse over Q for small square systems.
std::size_t dense_rank(std::vector<std::vector<Rational>> a);
/// Throws std::domain_error when singular.
std::vector<std::vector<Rational>> dense_inverse(std::vector<std::vector<Rational>> a);

}  // namespace m36
