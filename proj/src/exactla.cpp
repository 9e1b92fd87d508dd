#include "m36/exactla.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace m36 {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw std::invalid_argument("bad rational: " + text);
  Integer n(num[0] == '+' ? num.substr(1) : num);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// ------------------------------------------------------ SparseIntegerMatrix

SparseIntegerMatrix::SparseIntegerMatrix(std::size_t nrows, std::size_t ncols) : ncols_(ncols), rows_(nrows) {}

SparseIntegerMatrix SparseIntegerMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
  SparseIntegerMatrix m(0, dense.empty() ? 0 : dense[0].size());
  for (const auto& r : dense) {
    if (r.size() != m.ncols_) throw std::invalid_argument("ragged dense matrix");
    std::vector<std::pair<std::uint32_t, Integer>> e;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j]) e.emplace_back(static_cast<std::uint32_t>(j), Integer(r[j]));
    m.append_row(std::move(e));
  }
  return m;
}

SparseIntegerMatrix SparseIntegerMatrix::identity(std::size_t n) {
  SparseIntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({static_cast<std::uint32_t>(i), Integer(1)});
  return m;
}

std::size_t SparseIntegerMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseIntegerMatrix::Row SparseIntegerMatrix::normalize(std::vector<std::pair<std::uint32_t, Integer>> entries) const {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Row out;
  for (auto& [c, v] : entries) {
    if (c >= ncols_) throw std::out_of_range("column index out of range");
    if (!out.empty() && out.back().col == c)
      out.back().value += v;
    else
      out.push_back({c, std::move(v)});
    if (out.back().value == 0) out.pop_back();
  }
  return out;
}

void SparseIntegerMatrix::set_row(std::size_t r, std::vector<std::pair<std::uint32_t, Integer>> entries) {
  rows_.at(r) = normalize(std::move(entries));
}

void SparseIntegerMatrix::append_row(std::vector<std::pair<std::uint32_t, Integer>> entries) {
  rows_.push_back(normalize(std::move(entries)));
}

std::string SparseIntegerMatrix::to_sms() const {
  std::ostringstream os;
  os << nrows() << ' ' << ncols() << " M\n";
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i]) os << i + 1 << ' ' << e.col + 1 << ' ' << e.value.get_str() << '\n';
  os << "0 0 0\n";
  return os.str();
}

SparseIntegerMatrix SparseIntegerMatrix::from_sms(const std::string& text) {
  std::istringstream is(text);
  std::size_t nr = 0, nc = 0;
  std::string tag;
  if (!(is >> nr >> nc >> tag) || tag != "M") throw std::invalid_argument("bad SMS header");
  std::vector<std::vector<std::pair<std::uint32_t, Integer>>> entries(nr);
  for (;;) {
    std::size_t i = 0, j = 0;
    std::string v;
    if (!(is >> i >> j >> v)) throw std::invalid_argument("truncated SMS body");
    if (i == 0 && j == 0) break;
    if (i > nr || j > nc || i == 0 || j == 0) throw std::invalid_argument("SMS entry out of range");
    entries[i - 1].emplace_back(static_cast<std::uint32_t>(j - 1), Integer(v));
  }
  SparseIntegerMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) m.set_row(i, std::move(entries[i]));
  return m;
}

// ---------------------------------------------------------------- Smith

bool SmithInvariants::torsion_free() const {
  for (std::size_t i = 0; i < rank; ++i)
    if (diagonal[i] != 1) return false;
  return true;
}

std::vector<Integer> SmithInvariants::torsion() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i)
    if (diagonal[i] != 1) out.push_back(diagonal[i]);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

struct Overflow {};

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const Integer& z, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

struct ModP {
  using T = std::uint64_t;
  std::uint64_t p;
  T from(const Integer& z) const { return reduce(z, p); }
  static bool is_zero(T a) { return a == 0; }
  static bool pivotable(T a) { return a != 0; }
  T inv(T a) const { return powmod(a, p - 2, p); }
  T mul(T a, T b) const { return a * b % p; }
  // x - f*y
  T sub_mul(T x, T f, T y) const { return (x + p - f * y % p) % p; }
};

struct Rat {
  using T = Rational;
  static T from(const Integer& z) { return Rational(z); }
  static bool is_zero(const T& a) { return a == 0; }
  static bool pivotable(const T& a) { return a != 0; }
  static T inv(const T& a) { return 1 / a; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub_mul(const T& x, const T& f, const T& y) { return x - f * y; }
};

// Integer elimination restricted to pivots +-1, which keeps the Smith form.
struct UnitBig {
  using T = Integer;
  static T from(const Integer& z) { return z; }
  static bool is_zero(const T& a) { return a == 0; }
  static bool pivotable(const T& a) { return a == 1 || a == -1; }
  static T inv(const T& a) { return a; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub_mul(const T& x, const T& f, const T& y) { return x - f * y; }
};

struct UnitSmall {
  using T = std::int64_t;
  static T from(const Integer& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    return z.get_si();
  }
  static bool is_zero(T a) { return a == 0; }
  static bool pivotable(T a) { return a == 1 || a == -1; }
  static T inv(T a) { return a; }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub_mul(T x, T f, T y) {
    T r = mul(f, y);
    if (__builtin_sub_overflow(x, r, &r)) throw Overflow{};
    return r;
  }
};

template <class Pol>
class Eliminator {
 public:
  using T = typename Pol::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;
  struct Pivot {
    std::uint32_t col;
    Row row;
  };

  Eliminator(const Pol& pol, const SparseIntegerMatrix& m, bool keep_pivots)
      : pol_(pol), keep_(keep_pivots), ncols_(m.ncols()) {
    rows_.reserve(m.nrows());
    for (const auto& r : m.rows()) {
      Row row;
      for (const auto& e : r) {
        T v = pol_.from(e.value);
        if (!Pol::is_zero(v)) row.emplace_back(e.col, std::move(v));
      }
      rows_.push_back(std::move(row));
    }
    active_.assign(rows_.size(), 1);
    colrows_.assign(ncols_, {});
    colcount_.assign(ncols_, 0);
    done_.assign(ncols_, 0);
    for (std::uint32_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].empty()) active_[i] = 0;
      for (const auto& [c, v] : rows_[i]) {
        colrows_[c].push_back(i);
        ++colcount_[c];
      }
    }
    for (std::uint32_t c = 0; c < ncols_; ++c)
      if (colcount_[c] > 0) queue_.insert({colcount_[c], c});
  }

  void run() {
    for (;;) {
      std::uint32_t prow = 0, pcol = 0;
      if (!choose(prow, pcol)) break;
      eliminate(prow, pcol);
    }
  }

  std::size_t rank() const { return npivots_; }
  const std::vector<Pivot>& pivots() const { return pivots_; }
  const std::vector<char>& pivot_columns() const { return done_; }

  std::vector<Row> remainder() const {
    std::vector<Row> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (active_[i] && !rows_[i].empty()) out.push_back(rows_[i]);
    return out;
  }

 private:
  const T* find(const Row& row, std::uint32_t c) const {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t k) { return e.first < k; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  void adjust(std::uint32_t c, int delta) {
    if (!done_[c] && colcount_[c] > 0) queue_.erase({colcount_[c], c});
    colcount_[c] += delta;
    if (!done_[c] && colcount_[c] > 0) queue_.insert({colcount_[c], c});
  }

  // Markowitz search over the sparsest pivotable columns; ties go to the
  // leftmost column.
  bool choose(std::uint32_t& prow, std::uint32_t& pcol) {
    constexpr int kCandidates = 4;
    int seen = 0;
    long best = -1;
    for (auto it = queue_.begin(); it != queue_.end() && seen < kCandidates; ++it) {
      const std::uint32_t c = it->second;
      auto& list = colrows_[c];
      std::size_t keep = 0;
      long best_len = -1;
      std::uint32_t best_row = 0;
      for (std::uint32_t i : list) {
        if (!active_[i]) continue;
        const T* v = find(rows_[i], c);
        if (!v) continue;
        list[keep++] = i;
        if (!Pol::pivotable(*v)) continue;
        const long len = static_cast<long>(rows_[i].size());
        if (best_len < 0 || len < best_len || (len == best_len && i < best_row)) {
          best_len = len;
          best_row = i;
        }
      }
      list.resize(keep);
      if (best_len < 0) continue;
      ++seen;
      const long cost = (best_len - 1) * (static_cast<long>(it->first) - 1);
      if (best < 0 || cost < best || (cost == best && c < pcol)) {
        best = cost;
        prow = best_row;
        pcol = c;
      }
      if (best == 0) break;
    }
    return best >= 0;
  }

  void eliminate(std::uint32_t r, std::uint32_t c) {
    const Row prow = rows_[r];
    const T pinv = pol_.inv(*find(prow, c));
    active_[r] = 0;
    for (const auto& [col, v] : prow) adjust(col, -1);
    std::vector<std::uint32_t> targets;
    for (std::uint32_t i : colrows_[c])
      if (active_[i] && find(rows_[i], c)) targets.push_back(i);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    Row merged;
    for (std::uint32_t i : targets) {
      Row& row = rows_[i];
      const T f = pol_.mul(*find(row, c), pinv);
      merged.clear();
      merged.reserve(row.size() + prow.size());
      auto a = row.begin();
      auto b = prow.begin();
      while (a != row.end() || b != prow.end()) {
        if (b == prow.end() || (a != row.end() && a->first < b->first)) {
          merged.push_back(std::move(*a));
          ++a;
        } else if (a == row.end() || b->first < a->first) {
          merged.emplace_back(b->first, pol_.sub_mul(T(0), f, b->second));
          colrows_[b->first].push_back(i);
          adjust(b->first, +1);
          ++b;
        } else {
          T v = pol_.sub_mul(a->second, f, b->second);
          if (Pol::is_zero(v))
            adjust(a->first, -1);
          else
            merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      row.swap(merged);
      if (row.empty()) active_[i] = 0;
    }
    if (colcount_[c] > 0) queue_.erase({colcount_[c], c});
    done_[c] = 1;
    ++npivots_;
    if (keep_) pivots_.push_back({c, prow});
    rows_[r].clear();
  }

  const Pol& pol_;
  bool keep_;
  std::size_t ncols_;
  std::vector<Row> rows_;
  std::vector<char> active_;
  std::vector<std::vector<std::uint32_t>> colrows_;
  std::vector<int> colcount_;
  std::vector<char> done_;
  std::set<std::pair<int, std::uint32_t>> queue_;
  std::vector<Pivot> pivots_;
  std::size_t npivots_ = 0;
};

void check_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw NotPrime("modulus " + std::to_string(p) + " is not a prime below 2^32");
}

using Dense = std::vector<std::vector<Integer>>;

std::vector<Integer> dense_smith_diagonal(Dense a, std::size_t ncols) {
  const std::size_t m = a.size();
  const std::size_t n = ncols;
  std::vector<Integer> diag;
  std::size_t t = 0;
  auto min_nonzero = [&](std::size_t& bi, std::size_t& bj) {
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
          found = true;
        }
    return found;
  };
  auto place = [&](std::size_t i, std::size_t j) {
    std::swap(a[t], a[i]);
    if (j != t)
      for (std::size_t r = 0; r < m; ++r) std::swap(a[r][t], a[r][j]);
  };
  while (t < std::min(m, n)) {
    std::size_t bi = t, bj = t;
    if (!min_nonzero(bi, bj)) break;
    place(bi, bj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
      std::size_t ci = t, cj = t;
      for (std::size_t i = t + 1; i < m; ++i)
        if (a[i][t] != 0 && abs(a[i][t]) < abs(a[ci][cj])) ci = i, cj = t;
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[t][j] != 0 && abs(a[t][j]) < abs(a[ci][cj])) ci = t, cj = j;
      place(ci, cj);
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  // Pairwise gcd/lcm turns any diagonal into the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      Integer l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

template <class Pol>
SmithInvariants smith_with(const Pol& pol, const SparseIntegerMatrix& m) {
  Eliminator<Pol> e(pol, m, false);
  e.run();
  const auto rem = e.remainder();
  std::vector<std::uint32_t> cols;
  for (const auto& row : rem)
    for (const auto& [c, v] : row) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  Dense dense(rem.size(), std::vector<Integer>(cols.size()));
  for (std::size_t i = 0; i < rem.size(); ++i)
    for (const auto& [c, v] : rem[i]) {
      const auto j = std::lower_bound(cols.begin(), cols.end(), c) - cols.begin();
      dense[i][j] = Integer(v);
    }
  SmithInvariants s;
  s.diagonal.assign(e.rank(), Integer(1));
  for (auto& d : dense_smith_diagonal(std::move(dense), cols.size())) s.diagonal.push_back(d);
  s.rank = s.diagonal.size();
  s.diagonal.resize(std::min(m.nrows(), m.ncols()), Integer(0));
  return s;
}

template <class Pol>
std::vector<std::vector<typename Pol::T>> kernel_with(const Pol& pol, const SparseIntegerMatrix& m) {
  using T = typename Pol::T;
  Eliminator<Pol> e(pol, m, true);
  e.run();
  const auto& done = e.pivot_columns();
  const auto& piv = e.pivots();
  std::vector<std::vector<T>> out;
  for (std::uint32_t f = 0; f < m.ncols(); ++f) {
    if (done[f]) continue;
    std::vector<T> x(m.ncols(), T(0));
    x[f] = T(1);
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      T acc(0);
      T pv(0);
      for (const auto& [c, v] : it->row) {
        if (c == it->col)
          pv = v;
        else if (!Pol::is_zero(x[c]))
          acc = pol.sub_mul(acc, v, x[c]);
      }
      // pv * x_col + sum = 0  =>  x_col = acc / pv with acc = -sum
      x[it->col] = pol.mul(acc, pol.inv(pv));
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::size_t rank_over_rationals(const SparseIntegerMatrix& m) {
  Rat pol;
  Eliminator<Rat> e(pol, m, false);
  e.run();
  return e.rank();
}

std::size_t rank_mod_p(const SparseIntegerMatrix& m, std::uint64_t p) {
  check_prime(p);
  ModP pol{p};
  Eliminator<ModP> e(pol, m, false);
  e.run();
  return e.rank();
}

SmithInvariants smith_normal_form(const SparseIntegerMatrix& m) {
  try {
    return smith_with(UnitSmall{}, m);
  } catch (const Overflow&) {
    return smith_with(UnitBig{}, m);
  }
}

std::vector<std::vector<Rational>> nullspace_basis(const SparseIntegerMatrix& m) { return kernel_with(Rat{}, m); }

std::vector<std::vector<std::uint64_t>> nullspace_mod_p(const SparseIntegerMatrix& m, std::uint64_t p) {
  check_prime(p);
  return kernel_with(ModP{p}, m);
}

RankCertificate two_prime_rank(const SparseIntegerMatrix& m, std::uint64_t p, std::uint64_t q) {
  RankCertificate c;
  const auto a = rank_mod_p(m, p);
  const auto b = rank_mod_p(m, q);
  c.primes = {p, q};
  if (a == b) {
    c.rank = a;
    return c;
  }
  c.rank = rank_over_rationals(m);
  c.exact = true;
  return c;
}

SparseIntegerMatrix row_lattice_basis(const SparseIntegerMatrix& m) {
  Dense a(m.nrows(), std::vector<Integer>(m.ncols()));
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (const auto& e : m.row(i)) a[i][e.col] = e.value;
  std::size_t cur = 0;
  for (std::size_t c = 0; c < m.ncols() && cur < a.size(); ++c) {
    for (;;) {
      std::size_t best = a.size();
      std::size_t nonzero = 0;
      for (std::size_t i = cur; i < a.size(); ++i)
        if (a[i][c] != 0) {
          ++nonzero;
          if (best == a.size() || abs(a[i][c]) < abs(a[best][c])) best = i;
        }
      if (nonzero == 0) break;
      std::swap(a[cur], a[best]);
      if (nonzero == 1) {
        if (a[cur][c] < 0)
          for (auto& v : a[cur]) v = -v;
        ++cur;
        break;
      }
      for (std::size_t i = cur + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[cur][c].get_mpz_t());
        for (std::size_t j = c; j < m.ncols(); ++j) a[i][j] -= q * a[cur][j];
      }
    }
  }
  SparseIntegerMatrix out(0, m.ncols());
  for (std::size_t i = 0; i < cur; ++i) {
    std::vector<std::pair<std::uint32_t, Integer>> e;
    for (std::size_t j = 0; j < m.ncols(); ++j)
      if (a[i][j] != 0) e.emplace_back(static_cast<std::uint32_t>(j), a[i][j]);
    out.append_row(std::move(e));
  }
  return out;
}

Integer crt(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli) {
  if (residues.size() != moduli.size()) throw std::invalid_argument("crt: size mismatch");
  Integer x = 0, mod = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const Integer p(static_cast<unsigned long>(moduli[i]));
    // x + mod * t = r (mod p)
    Integer inv, diff = Integer(static_cast<unsigned long>(residues[i])) - x;
    if (mpz_invert(inv.get_mpz_t(), Integer(mod % p).get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::invalid_argument("crt: moduli not coprime");
    Integer t = diff * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    x += mod * t;
    mod *= p;
  }
  return x;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1;
  mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  Integer s0 = 0, s1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound || gcd(r1, s1) != 1) return std::nullopt;
  Rational q(r1, s1);
  q.canonicalize();
  return q;
}

std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t n = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < n && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> dense_inverse(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    const Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace m36
