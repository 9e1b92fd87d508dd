#include "m36/classes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "m36/data.hpp"

namespace m36 {

namespace {

std::vector<int> rest(MarkSet s) { return marks_of(static_cast<MarkSet>(kAllMarks & ~s)); }

RingElement gen(DivisorId d) { return divisor_class(d); }

RingElement cyc(MarkSet a, MarkSet b, MarkSet c) { return gen(DivisorId::cyclic(a, b, c)); }

bool is_pair(MarkSet s) { return !(s & ~kAllMarks) && mark_count(s) == 2; }

void check_k(MarkSet ij, int k) {
  if (!is_pair(ij)) throw std::invalid_argument("delta: ij must be a pair of marks");
  if (k != rest(ij).front()) throw std::invalid_argument("delta: k must be the smallest mark outside ij");
}

std::vector<Rational> coordinates(const GradedQuotient& q, const RingElement& e, int k) {
  const RingElement nf = q.normal_form(e);
  std::vector<Rational> row;
  for (const auto& b : q.basis(k)) row.push_back(nf.coefficient(b));
  return row;
}

void require_all_lines(const ChowRing& ring, const char* what) {
  if (!ring.config().s2().empty()) throw std::invalid_argument(std::string(what) + " needs the all-lines configuration");
}

int psi_slot(std::pair<int, int> p) { return (p.first - 1) * 6 + (p.second - 1); }

std::uint32_t encode(const PsiMonomial& m) {
  std::uint32_t key = 0;
  for (const auto& p : m.f) key = key * 36 + psi_slot(p);
  return key;
}

PsiMonomial apply(const Permutation& s, const PsiMonomial& m) {
  PsiMonomial out;
  for (int i = 0; i < 4; ++i) out.f[i] = {s(m.f[i].first), s(m.f[i].second)};
  std::sort(out.f.begin(), out.f.end());
  return out;
}

const std::vector<Permutation>& s6() {
  static const std::vector<Permutation> all = Permutation::all();
  return all;
}

}  // namespace

RingElement delta_triple(MarkSet ijk) { return gen(DivisorId::triple(ijk)); }

RingElement delta_pair(MarkSet ij, int k) {
  check_k(ij, k);
  const auto lmn = rest(static_cast<MarkSet>(ij | mark_set({k})));
  RingElement e = gen(DivisorId::pair(ij));
  for (int x = 0; x < 3; ++x) {
    MarkSet other = 0;
    for (int y = 0; y < 3; ++y)
      if (y != x) other = static_cast<MarkSet>(other | mark_set({lmn[y]}));
    e += cyc(mark_set({k, lmn[x]}), ij, other);
  }
  return e;
}

RingElement delta_cyc(MarkSet ij, MarkSet kl, MarkSet mn) {
  if (!is_pair(kl) || !is_pair(mn) || (ij | kl | mn) != kAllMarks) throw std::invalid_argument("delta: pairs must form a matching");
  check_k(ij, marks_of(kl).front());
  return cyc(ij, kl, mn) - cyc(kl, ij, mn);
}

std::vector<NamedClass> delta_classes() {
  std::vector<NamedClass> out;
  for (auto d : enumerate_divisors())
    if (d.kind() == DivisorKind::Triple)
      out.push_back({"delta[" + mark_string(d.triple_set()) + "]", delta_triple(d.triple_set())});
  for (auto d : enumerate_divisors())
    if (d.kind() == DivisorKind::Pair) {
      const int k = rest(d.pair_set()).front();
      out.push_back({"delta[" + mark_string(d.pair_set()) + "," + std::to_string(k) + "]", delta_pair(d.pair_set(), k)});
    }
  for (auto pt : enumerate_points()) {
    const auto m = pt.matching();
    out.push_back({"delta[" + mark_string(m[0]) + "," + mark_string(m[1]) + "," + mark_string(m[2]) + "]",
                   delta_cyc(m[0], m[1], m[2])});
  }
  return out;
}

bool PicardCertificate::ok() const {
  return basis.size() == 36 && rank == 36 && kernel_dim == 36 &&
         std::all_of(in_subring.begin(), in_subring.end(), [](bool b) { return b; });
}

PicardCertificate picard_m36_basis(const ChowRing& ring) {
  require_all_lines(ring, "Picard basis");
  static const std::set<std::string> triples{"156", "256", "345", "346", "356", "456"};
  PicardCertificate c;
  for (auto& d : delta_classes()) {
    const bool keep = d.name.find(',') != std::string::npos || triples.count(d.name.substr(6, 3));
    if (keep) c.basis.push_back(std::move(d));
  }
  std::vector<std::vector<Rational>> m;
  for (const auto& d : c.basis) {
    m.push_back(coordinates(ring.quotient(), d.expansion, 1));
    c.in_subring.push_back(ring.m36_subring_membership(d.expansion));
  }
  c.rank = dense_rank(std::move(m));
  c.kernel_dim = ring.m36_chow_ranks()[1];
  if (c.rank != 36) throw VerificationError("Picard basis has rank " + std::to_string(c.rank));
  return c;
}

RingElement canonical_K() {
  RingElement k;
  for (auto d : enumerate_divisors()) {
    const Rational c = d.kind() == DivisorKind::Triple ? Rational(-3, 10) : d.kind() == DivisorKind::Pair ? Rational(-1, 5) : Rational(1, 5);
    k += gen(d) * c;
  }
  return k;
}

RingElement boundary_B() {
  RingElement b;
  for (auto d : enumerate_divisors()) b += gen(d);
  return b;
}

RingElement canonical_from_blowup() {
  auto b05 = [](int k) {
    RingElement e;
    const auto others = rest(mark_set({k}));
    for (std::size_t a = 0; a < others.size(); ++a)
      for (std::size_t b = a + 1; b < others.size(); ++b) e += pullback_r(k, mark_set({others[a], others[b]}));
    return e;
  };
  RingElement d;
  const MarkSet m1234 = mark_set({1, 2, 3, 4}), m56 = mark_set({5, 6});
  for (auto div : enumerate_divisors()) {
    if (div.kind() == DivisorKind::Triple && (div.triple_set() & ~m1234) == 0) d += gen(div);
    if (div.kind() == DivisorKind::Pair && (div.pair_set() & ~m1234) == 0) {
      d += gen(div);
      d += cyc(div.pair_set(), static_cast<MarkSet>(m1234 & ~div.pair_set()), m56);
    }
    if (div.kind() == DivisorKind::CyclicTriple) d += gen(div);
  }
  d += gen(DivisorId::pair(m56));
  return (b05(6) + b05(5)) * Rational(-1, 2) + d;
}

bool CanonicalReport::ok() const {
  return identity_residual.empty() && KplusB_fourth > 0 &&
         std::all_of(line_restrictions.begin(), line_restrictions.end(), [](const auto& r) { return r.second.is_zero(); });
}

std::string CanonicalReport::to_json() const {
  auto coeffs = [](const RingElement& e) {
    nlohmann::ordered_json j;
    for (auto d : enumerate_divisors()) j[d.to_string()] = m36::to_string(e.coefficient(Monomial({d.index()})));
    return j;
  };
  nlohmann::ordered_json j;
  j["K"] = coeffs(K);
  j["B"] = coeffs(B);
  j["KplusB"] = coeffs(KplusB);
  j["identity_holds"] = identity_residual.empty();
  nlohmann::ordered_json lines;
  for (const auto& [pt, v] : line_restrictions) lines[pt.to_string()] = v.to_string();
  j["KplusB_on_lines"] = lines;
  j["KplusB_fourth"] = m36::to_string(KplusB_fourth);
  j["ok"] = ok();
  return j.dump(2);
}

CanonicalReport canonical_classes(const ChowRing& ring) {
  require_all_lines(ring, "canonical classes");
  CanonicalReport r;
  r.K = canonical_K();
  r.B = boundary_B();
  r.KplusB = r.K + r.B;
  r.identity_residual = ring.normal_form(r.K - canonical_from_blowup());
  if (!r.identity_residual.empty()) throw VerificationError("canonical class identity fails");
  for (auto pt : enumerate_points()) r.line_restrictions.emplace_back(pt, ring.restrict_to_fiber(r.KplusB, pt));
  r.KplusB_fourth = ring.integrate(ring.product({r.KplusB, r.KplusB, r.KplusB, r.KplusB}));
  return r;
}

std::vector<CurveValue> curve_checks(const ChowRing& ring) {
  const auto e = [](const char* s) { return DivisorId::parse(s); };
  const RingElement r612 = pullback_r(6, mark_set({1, 2}));
  struct Curve {
    std::string name;
    RingElement cls;
    std::map<DivisorId, Rational> expected;
  };
  const std::vector<Curve> curves{
      {"L=F[12]*F[34]*F[56]",
       ring.product({gen(e("F[12]")), gen(e("F[34]")), gen(e("F[56]"))}),
       {{e("F[12]"), -1}, {e("G[56,12,34]"), 1}, {e("E[345]"), 0}, {e("G[36,12,45]"), 0}, {e("G[46,12,35]"), 0}}},
      {"C=E[123]*E[345]*E[246]",
       ring.product({gen(e("E[123]")), gen(e("E[345]")), gen(e("E[246]"))}),
       {{e("E[345]"), -1}, {e("G[46,12,35]"), 1}, {e("F[12]"), 0}, {e("G[36,12,45]"), 0}, {e("G[56,12,34]"), 0}}},
  };
  std::vector<CurveValue> out;
  for (const auto& c : curves) {
    for (auto d : enumerate_divisors()) {
      CurveValue v{c.name, d.to_string(), ring.integrate(ring.multiply(c.cls, gen(d))), std::nullopt};
      if (auto it = c.expected.find(d); it != c.expected.end()) v.expected = it->second;
      out.push_back(std::move(v));
    }
    out.push_back({c.name, "r6*(D12)", ring.integrate(ring.multiply(c.cls, r612)), Rational(0)});
  }
  return out;
}

PsiMonomial make_psi_monomial(std::array<std::pair<int, int>, 4> factors) {
  for (const auto& [i, j] : factors)
    if (i < 1 || i > 6 || j < 1 || j > 6 || i == j) throw std::invalid_argument("psi[i,j] needs distinct marks in 1..6");
  std::sort(factors.begin(), factors.end());
  return PsiMonomial{factors};
}

std::string to_string(const PsiMonomial& m) {
  std::string s;
  for (const auto& [i, j] : m.f) s += (s.empty() ? "" : "*") + ("psi[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return s;
}

PsiMonomial parse_psi_monomial(const std::string& text) {
  std::array<std::pair<int, int>, 4> f;
  std::size_t pos = 0;
  for (int n = 0; n < 4; ++n) {
    if (n > 0) {
      if (pos >= text.size() || text[pos] != '*') throw std::invalid_argument("bad psi monomial: " + text);
      ++pos;
    }
    if (text.compare(pos, 4, "psi[") != 0 || pos + 8 > text.size() || text[pos + 5] != ',' || text[pos + 7] != ']')
      throw std::invalid_argument("bad psi monomial: " + text);
    f[n] = {text[pos + 4] - '0', text[pos + 6] - '0'};
    pos += 8;
  }
  if (pos != text.size()) throw std::invalid_argument("bad psi monomial: " + text);
  return make_psi_monomial(f);
}

PsiMonomial orbit_representative(const PsiMonomial& m) {
  PsiMonomial best = m;
  for (const auto& s : s6()) best = std::min(best, apply(s, m));
  return best;
}

bool psi_zero_criterion(const PsiMonomial& m) {
  std::array<int, 7> count{};
  for (const auto& p : m.f)
    if (++count[p.first] >= 3) return true;
  return false;
}

std::vector<PsiMonomial> all_psi_monomials() {
  std::vector<std::pair<int, int>> psis;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      if (i != j) psis.emplace_back(i, j);
  std::vector<PsiMonomial> out;
  const std::size_t n = psis.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c)
        for (std::size_t d = c; d < n; ++d) out.push_back(PsiMonomial{{psis[a], psis[b], psis[c], psis[d]}});
  return out;
}

Rational PsiTable::value(const PsiMonomial& m) const { return orbits.at(orbit_representative(m)); }

PsiTable psi_table(const ChowRing& ring) {
  PsiTable t;
  std::set<std::uint32_t> seen;
  std::vector<PsiMonomial> reps;
  for (const auto& m : all_psi_monomials()) {
    if (seen.count(encode(m))) continue;
    std::set<PsiMonomial> orbit;
    for (const auto& s : s6()) orbit.insert(apply(s, m));
    for (const auto& x : orbit) seen.insert(encode(x));
    reps.push_back(*orbit.begin());
    t.sizes[*orbit.begin()] = orbit.size();
  }
  // integral of (ab)(cd) = x_ab^T P x_cd with x the coordinates in basis(2)
  const GradedQuotient& q = ring.quotient();
  const auto pairing = q.pairing_matrix(2);
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, std::vector<Rational>> coords;
  auto x = [&](std::pair<int, int> a, std::pair<int, int> b) -> const std::vector<Rational>& {
    auto it = coords.find({a, b});
    if (it == coords.end()) it = coords.emplace(std::pair{a, b}, coordinates(q, q.multiply(psi(a.first, a.second), psi(b.first, b.second)), 2)).first;
    return it->second;
  };
  std::vector<Rational> values;
  for (const auto& m : reps) {
    const auto& u = x(m.f[0], m.f[1]);
    const auto& v = x(m.f[2], m.f[3]);
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) s += u[i] * pairing[i][j] * v[j];
    }
    values.push_back(s);
  }
  for (std::size_t i = 0; i < reps.size(); ++i) t.orbits[reps[i]] = values[i];
  return t;
}

std::vector<Table1Entry> table1() {
  std::vector<Table1Entry> out;
  std::istringstream in{std::string(data::table1_csv())};
  std::string line;
  std::getline(in, line);
  if (line != "product,value") throw std::runtime_error("table1.csv: unexpected header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',', line.rfind(']'));
    if (comma == std::string::npos) throw std::runtime_error("table1.csv: bad line " + line);
    out.push_back({parse_psi_monomial(line.substr(0, comma)), std::stoi(line.substr(comma + 1))});
  }
  return out;
}

bool TableComparison::ok() const { return discrepancies.empty() && zero_criterion && values_in_range; }

TableComparison compare_with_table1(const PsiTable& t) {
  TableComparison c;
  std::map<PsiMonomial, TableDiscrepancy> printed;
  for (const auto& e : table1()) {
    const auto rep = orbit_representative(e.printed);
    auto& slot = printed[rep];
    slot.orbit = rep;
    slot.printed.push_back(to_string(e.printed));
    slot.printed_values.push_back(e.value);
    ++c.printed_entries;
  }
  c.printed_orbits = printed.size();
  c.orbits = t.orbits.size();
  for (auto& [rep, slot] : printed) {
    slot.computed = t.orbits.at(rep);
    if (slot.printed.size() > 1) c.repeated.push_back(slot);
    if (std::any_of(slot.printed_values.begin(), slot.printed_values.end(), [&](int v) { return slot.computed != v; }))
      c.discrepancies.push_back(slot);
  }
  for (const auto& [rep, v] : t.orbits) {
    if (v != 0) {
      ++c.computed_nonzero_orbits;
      if (!printed.count(rep)) c.discrepancies.push_back({rep, {}, {}, v});
      if (v.get_den() != 1 || v < 1 || v > 9) c.values_in_range = false;
    }
    if ((v == 0) != psi_zero_criterion(rep)) c.zero_criterion = false;
  }
  return c;
}

std::vector<std::string> psi_choice_failures(const ChowRing& ring) {
  std::vector<std::string> failures;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      const RingElement base = psi(i, j);
      bool agree = true;
      for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k) {
          if (n == i || n == j || k == i || k == j || k == n) continue;
          if (!ring.is_zero(psi(i, j, n, k) - base)) agree = false;
        }
      if (!agree) failures.push_back("psi[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  return failures;
}

RingElement m35_psi(const M0nRing& ring, int i, int j) {
  if (ring.n() != 5) throw std::invalid_argument("m35_psi needs M_{0,5}");
  if (i < 1 || i > 5 || j < 1 || j > 5 || i == j) throw std::invalid_argument("m35_psi: marks must be distinct in 1..5");
  std::vector<int> others;
  for (int m = 1; m <= 5; ++m)
    if (m != i && m != j) others.push_back(m);
  return ring.divisor(mark_set({j, others[0]})) + ring.divisor(mark_set({others[1], others[2]}));
}

}  // namespace m36
