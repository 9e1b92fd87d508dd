#include "m36/quotient.hpp"

#include <algorithm>
#include <future>

namespace m36 {

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "two-prime"; }

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::Exact;
  if (text == "two-prime") return Mode::TwoPrime;
  throw std::invalid_argument("mode must be exact or two-prime, got '" + text + "'");
}

namespace {

std::uint64_t mod_of(const Rational& q, std::uint64_t p) {
  Integer n, d, inv;
  mpz_fdiv_r_ui(n.get_mpz_t(), q.get_num_mpz_t(), p);
  mpz_fdiv_r_ui(d.get_mpz_t(), q.get_den_mpz_t(), p);
  if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t()) == 0)
    throw std::domain_error("denominator divisible by the prime");
  Integer r = n * inv;
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Indices of the rows, in order, that are independent of the earlier ones mod p.
std::vector<std::size_t> greedy_independent(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> echelon;
  std::vector<std::size_t> pivot_col, chosen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto v = rows[r];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const std::uint64_t f = v[pivot_col[e]];
      if (!f) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (echelon[e][j]) v[j] = (v[j] + p - f * echelon[e][j] % p) % p;
    }
    std::size_t c = 0;
    while (c < v.size() && !v[c]) ++c;
    if (c == v.size()) continue;
    const std::uint64_t inv = inverse_mod(v[c], p);
    for (auto& x : v) x = x * inv % p;
    echelon.push_back(std::move(v));
    pivot_col.push_back(c);
    chosen.push_back(r);
  }
  return chosen;
}

}  // namespace

GradedQuotient::GradedQuotient(QuotientData data, Mode mode)
    : data_(std::move(data)), mode_(mode), top_(data_.top_degree) {
  if (top_ < 1 || top_ > Monomial::kMaxDegree) throw std::invalid_argument("top degree out of range");
  SparseIntegerMatrix gens(0, data_.generators);
  for (const auto& f : data_.linear) {
    std::vector<std::pair<std::uint32_t, Integer>> e;
    for (const auto& [g, c] : f) e.emplace_back(static_cast<std::uint32_t>(g), c);
    gens.append_row(std::move(e));
  }
  const auto lattice = row_lattice_basis(gens);
  for (const auto& row : lattice.rows()) {
    LinearForm f;
    for (const auto& e : row) f.emplace_back(static_cast<int>(e.col), e.value);
    linear_.push_back(std::move(f));
  }
  enumerate_admissible();
  auto integral = std::async(std::launch::async, [this] { compute_integral(); });
  compute_ranks();
  integral.get();
  choose_bases();
}

void GradedQuotient::enumerate_admissible() {
  admissible_.assign(top_ + 1, {});
  index_.assign(top_ + 1, {});
  admissible_[0].push_back(Monomial());
  for (int k = 1; k <= top_; ++k)
    for (const auto& m : admissible_[k - 1]) {
      const int from = k == 1 ? 0 : m[k - 2];
      for (int g = from; g < data_.generators; ++g) {
        const auto next = *m.times(Monomial::generator(g));
        if (data_.complex.contains_support(next.support())) admissible_[k].push_back(next);
      }
    }
  for (int k = 0; k <= top_; ++k) {
    std::sort(admissible_[k].begin(), admissible_[k].end());
    for (std::uint32_t i = 0; i < admissible_[k].size(); ++i) index_[k].emplace(admissible_[k][i].key(), i);
  }
}

std::vector<std::size_t> GradedQuotient::admissible_counts() const {
  std::vector<std::size_t> out;
  for (const auto& a : admissible_) out.push_back(a.size());
  return out;
}

std::optional<std::uint32_t> GradedQuotient::index_of(const Monomial& m) const {
  if (m.degree() > top_) return std::nullopt;
  const auto& idx = index_[m.degree()];
  const auto it = idx.find(m.key());
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

bool GradedQuotient::is_admissible(const Monomial& m) const { return index_of(m).has_value(); }

SparseIntegerMatrix GradedQuotient::relation_matrix(int k) const {
  if (k < 1 || k > top_) throw std::out_of_range("relation degree");
  SparseIntegerMatrix r(0, admissible_[k].size());
  for (const auto& m : admissible_[k - 1])
    for (const auto& f : linear_) {
      std::vector<std::pair<std::uint32_t, Integer>> e;
      for (const auto& [g, c] : f)
        if (auto j = index_of(*m.times(Monomial::generator(g)))) e.emplace_back(*j, c);
      if (!e.empty()) r.append_row(std::move(e));
    }
  return r;
}

void GradedQuotient::compute_ranks() {
  ranks_.assign(top_ + 1, 0);
  torsion_.assign(top_ + 1, {});
  ranks_[0] = 1;
  std::vector<std::future<std::pair<std::size_t, std::vector<Integer>>>> jobs;
  for (int k = 1; k <= top_; ++k)
    jobs.push_back(std::async(std::launch::async, [this, k] {
      const auto r = relation_matrix(k);
      if (mode_ == Mode::Exact) {
        const auto s = smith_normal_form(r);
        return std::make_pair(s.rank, s.torsion());
      }
      return std::make_pair(two_prime_rank(r).rank, std::vector<Integer>{});
    }));
  bool free = true;
  for (int k = 1; k <= top_; ++k) {
    auto [rank, tors] = jobs[k - 1].get();
    ranks_[k] = admissible_[k].size() - rank;
    free = free && tors.empty();
    torsion_[k] = std::move(tors);
  }
  if (mode_ == Mode::Exact) torsion_free_ = free;
}

std::vector<Integer> GradedQuotient::torsion(int k) const { return torsion_.at(k); }

void GradedQuotient::compute_integral() {
  const auto r = relation_matrix(top_);
  const std::size_t n = admissible_[top_].size();
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::uint64_t>> residues;
  std::size_t anchor = n;
  for (std::uint64_t p = kPrimeA; primes.size() < 12; p -= 2) {
    if (!is_prime(p)) continue;
    const auto ker = nullspace_mod_p(r, p);
    if (ker.size() != 1)
      throw VerificationError("top-degree quotient has dimension " + std::to_string(ker.size()) + ", expected 1");
    auto v = ker[0];
    std::size_t j = 0;
    while (j < n && !v[j]) ++j;
    if (anchor == n) anchor = j;
    if (j != anchor) continue;
    const std::uint64_t inv = inverse_mod(v[j], p);
    for (auto& x : v) x = x * inv % p;
    primes.push_back(p);
    residues.push_back(std::move(v));
    if (primes.size() < 2) continue;
    Integer modulus = 1;
    for (auto q : primes) modulus *= Integer(static_cast<unsigned long>(q));
    std::vector<Rational> lam(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::vector<std::uint64_t> res;
      for (const auto& v2 : residues) res.push_back(v2[i]);
      const auto q = rational_reconstruct(crt(res, primes), modulus);
      if (!q) ok = false;
      else lam[i] = *q;
    }
    if (!ok) continue;
    for (const auto& row : r.rows()) {
      Rational s = 0;
      for (const auto& e : row) s += e.value * lam[e.col];
      if (s != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    lambda_ = std::move(lam);
    return;
  }
  throw VerificationError("could not reconstruct the integration functional");
}

Rational GradedQuotient::integral_of(const Monomial& m) const {
  if (m.degree() != top_) throw std::domain_error("integral of a monomial off the top degree");
  const auto i = index_of(m);
  return i ? scale_ * lambda_[*i] : Rational(0);
}

Rational GradedQuotient::raw_integral(const RingElement& e) const {
  Rational s = 0;
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() != top_) throw std::domain_error("integrand is not homogeneous of top degree");
    if (auto i = index_of(m)) s += c * lambda_[*i];
  }
  return s;
}

Rational GradedQuotient::integrate(const RingElement& e) const { return scale_ * raw_integral(e); }

void GradedQuotient::normalize(const RingElement& cls, const Rational& value) {
  const Rational raw = raw_integral(cls);
  if (raw == 0) throw std::domain_error("cannot normalize on a class of degree zero");
  scale_ = value / raw;
}

void GradedQuotient::choose_bases() {
  basis_.assign(top_ + 1, {});
  dual_.assign(top_ + 1, {});
  basis_[0] = {Monomial()};
  for (std::size_t i = 0; i < admissible_[top_].size(); ++i)
    if (lambda_[i] != 0) {
      basis_[top_] = {admissible_[top_][i]};
      break;
    }
  auto pair_raw = [this](const Monomial& a, const Monomial& b) -> Rational {
    const auto m = a.times(b);
    if (!m) return 0;
    const auto i = index_of(*m);
    return i ? lambda_[*i] : Rational(0);
  };
  for (int k = 1; k < top_; ++k) {
    const auto& tests = admissible_[top_ - k];
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& m : admissible_[k]) {
      std::vector<std::uint64_t> v(tests.size());
      for (std::size_t j = 0; j < tests.size(); ++j) v[j] = mod_of(pair_raw(m, tests[j]), kPrimeA);
      rows.push_back(std::move(v));
    }
    for (auto i : greedy_independent(rows, kPrimeA)) basis_[k].push_back(admissible_[k][i]);
    if (basis_[k].size() != ranks_[k])
      throw VerificationError("pairing in degree " + std::to_string(k) + " has rank " +
                              std::to_string(basis_[k].size()) + ", quotient has rank " + std::to_string(ranks_[k]));
  }
  for (int k = 1; k < top_; ++k) {
    if (ranks_[k] != ranks_[top_ - k])
      throw VerificationError("ranks in degrees " + std::to_string(k) + " and " + std::to_string(top_ - k) + " differ");
  }
  for (int k = 1; k < top_; ++k) {
    const auto& b = basis_[k];
    const auto& c = basis_[top_ - k];
    std::vector<std::vector<Rational>> gt(c.size(), std::vector<Rational>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) gt[j][i] = pair_raw(b[i], c[j]);
    try {
      dual_[k] = dense_inverse(std::move(gt));
    } catch (const std::domain_error&) {
      throw VerificationError("pairing matrix in degree " + std::to_string(k) + " is singular");
    }
  }
}

RingElement GradedQuotient::prune(const RingElement& e) const {
  return e.filter([this](const Monomial& m) { return is_admissible(m); });
}

RingElement GradedQuotient::normal_form(const RingElement& e) const {
  RingElement out;
  for (int k = 0; k <= top_; ++k) {
    const RingElement part = prune(e.component(k));
    if (part.empty()) continue;
    if (k == 0) {
      out += part;
      continue;
    }
    if (k == top_) {
      const Rational v = raw_integral(part);
      out.add(basis_[top_][0], v / lambda_[*index_of(basis_[top_][0])]);
      continue;
    }
    const auto& c = basis_[top_ - k];
    std::vector<Rational> y(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      Rational s = 0;
      for (const auto& [m, coef] : part.terms())
        if (auto i = index_of(*m.times(c[j]))) s += coef * lambda_[*i];
      y[j] = s;
    }
    const auto& inv = dual_[k];
    for (std::size_t i = 0; i < basis_[k].size(); ++i) {
      Rational x = 0;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j] != 0) x += inv[i][j] * y[j];
      out.add(basis_[k][i], x);
    }
  }
  return out;
}

std::vector<std::vector<Rational>> GradedQuotient::pairing_matrix(int k) const {
  const auto& b = basis_.at(k);
  const auto& c = basis_.at(top_ - k);
  std::vector<std::vector<Rational>> g(b.size(), std::vector<Rational>(c.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) g[i][j] = integrate(RingElement::monomial(*b[i].times(c[j])));
  return g;
}

}  // namespace m36
