#include "m36/chow.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

namespace m36 {

MultiplicativeRelations multiplicative_relation_generators(const ResolutionConfig& cfg) {
  MultiplicativeRelations r;
  const auto all = enumerate_divisors();
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (!intersects(all[a], all[b], cfg)) r.quadratics.push_back(Monomial({all[a].index(), all[b].index()}));
  for (const auto& t : s2_triple_relations(cfg)) r.cubics.push_back(Monomial({t[0].index(), t[1].index(), t[2].index()}));
  return r;
}

std::vector<std::size_t> expected_ranks(const ResolutionConfig& cfg) {
  return {1, 51, 127 + cfg.s2().size(), 51, 1};
}

bool FiberValue::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

std::string FiberValue::to_string() const {
  const char* var = kind == Fiber::Line ? "p" : "h";
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
    const Rational a = abs(coeffs[i]);
    std::string term = mono.empty() ? m36::to_string(a) : (a == 1 ? mono : m36::to_string(a) + "*" + mono);
    if (out.empty())
      out = (coeffs[i] < 0 ? "-" : "") + term;
    else
      out += (coeffs[i] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

FiberValue fiber_product(const FiberValue& a, const FiberValue& b) {
  if (a.kind != b.kind) throw std::invalid_argument("fiber kinds differ");
  FiberValue out{a.kind, std::vector<Rational>(a.coeffs.size())};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; i + j < a.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

QuotientData chow_data(const ResolutionConfig& cfg) {
  QuotientData d;
  d.generators = kDivisorCount;
  d.top_degree = 4;
  d.complex = build_complex(cfg);
  for (const auto& rel : linear_relations()) {
    LinearForm f;
    for (const auto& [m, c] : rel.terms()) f.emplace_back(m[0], c.get_num());
    d.linear.push_back(std::move(f));
  }
  return d;
}

namespace {

GradedQuotient timed_build(const ResolutionConfig& cfg, Mode mode, long& ms) {
  const auto t0 = std::chrono::steady_clock::now();
  GradedQuotient q(chow_data(cfg), mode);
  ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return q;
}

std::string profile(const std::vector<std::size_t>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

}  // namespace

ChowRing::ChowRing(const ResolutionConfig& cfg, Mode mode) : cfg_(cfg), build_ms_(0), q_(timed_build(cfg, mode, build_ms_)) {
  const auto want = expected_ranks(cfg);
  if (q_.ranks() != want)
    throw VerificationError("Chow ranks " + profile(q_.ranks()) + " differ from " + profile(want));
  if (q_.torsion_free() == false) throw VerificationError("Chow groups have torsion");
  const auto a = psi(5, 6), b = psi(6, 5);
  q_.normalize(product({a, a, b, b}), 1);
}

RingElement ChowRing::product(const std::vector<RingElement>& factors) const {
  RingElement out = RingElement::constant(1);
  for (const auto& f : factors) out = q_.multiply(out, f);
  return out;
}

FiberValue ChowRing::restrict_to_fiber(const RingElement& e, SingularPointId pt) const {
  const Fiber kind = cfg_.fiber(pt);
  const std::size_t len = kind == Fiber::Line ? 2 : 3;
  auto image = [&](int g) {
    FiberValue v{kind, std::vector<Rational>(len)};
    const auto d = DivisorId::from_index(g);
    if (d.kind() == DivisorKind::Pair && pt.contains_pair(d.pair_set()))
      v.coeffs[1] = kind == Fiber::Line ? -1 : 1;
    else if (d.kind() == DivisorKind::CyclicTriple && point_of(d) == pt)
      v.coeffs[1] = kind == Fiber::Line ? 1 : -1;
    return v;
  };
  FiberValue out{kind, std::vector<Rational>(len)};
  for (const auto& [mono, c] : e.terms()) {
    FiberValue t{kind, std::vector<Rational>(len)};
    t.coeffs[0] = c;
    for (int g : mono.factors()) t = fiber_product(t, image(g));
    for (std::size_t i = 0; i < len; ++i) out.coeffs[i] += t.coeffs[i];
  }
  return out;
}

FiberValue ChowRing::restrict_to_fiber(const RingElement& e, SingularPointId pt, Fiber kind) const {
  if (cfg_.fiber(pt) != kind)
    throw std::invalid_argument(pt.to_string() + " carries a " + (cfg_.in_s1(pt) ? "line" : "plane") + " in this configuration");
  return restrict_to_fiber(e, pt);
}

bool ChowRing::m36_subring_membership(const RingElement& e) const {
  if (!cfg_.s2().empty()) throw std::invalid_argument("subring test needs the all-lines configuration");
  const RingElement d1 = e.component(1);
  if (d1.empty()) return true;
  for (auto pt : enumerate_points())
    if (!restrict_to_fiber(d1, pt).is_zero()) return false;
  return true;
}

std::vector<std::size_t> ChowRing::m36_chow_ranks() const {
  if (!cfg_.s2().empty()) throw std::invalid_argument("subring ranks need the all-lines configuration");
  std::vector<std::vector<Rational>> m;
  for (auto pt : enumerate_points()) {
    std::vector<Rational> row;
    for (const auto& b : q_.basis(1)) row.push_back(restrict_to_fiber(RingElement::monomial(b), pt).coeffs[1]);
    m.push_back(std::move(row));
  }
  auto r = q_.ranks();
  r[1] -= dense_rank(std::move(m));
  return r;
}

std::string ChowRing::ranks_json() const {
  nlohmann::json j;
  j["config"] = nlohmann::json::parse(cfg_.to_json());
  j["mode"] = to_string(mode());
  j["ranks"] = q_.ranks();
  if (auto t = q_.torsion_free())
    j["torsion_free"] = *t;
  else
    j["torsion_free"] = nullptr;
  j["admissible_monomials"] = q_.admissible_counts();
  j["runtime_ms"] = build_ms_;
  return j.dump();
}

std::vector<std::size_t> blowup_rank_recursion() {
  using Ranks = std::vector<std::size_t>;
  const Ranks p2{1, 1, 1}, bl4p2{1, 5, 1}, p1p1{1, 2, 1}, bl2p1p1{1, 4, 1}, bl3p1p1{1, 5, 1};
  struct Center {
    int count;
    Ranks ranks;
  };
  const std::vector<std::vector<Center>> tower{
      {{4, p2}, {4, bl4p2}},
      {{4, p1p1}},
      {{3, bl2p1p1}, {3, bl3p1p1}},
      {{1, bl4p2}},
      {{30, p1p1}},
  };
  Ranks r{1, 2, 3, 2, 1};
  for (const auto& step : tower)
    for (const auto& c : step)
      for (std::size_t k = 1; k < r.size(); ++k)
        if (k - 1 < c.ranks.size()) r[k] += c.count * c.ranks[k - 1];
  return r;
}

}  // namespace m36
