#include "m36/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include <json.hpp>

#include "m36/classes.hpp"
#include "m36/data.hpp"

namespace m36 {

namespace {

using Ranks = std::vector<std::size_t>;

std::string profile(const Ranks& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

// Collects failed assertions; the detail is the first few of them.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  // Builds the message only on failure.
  template <class F>
  void check(bool ok, F&& message) {
    ++count_;
    if (!ok) failures_.push_back(message());
  }
  bool pass() const { return failures_.empty(); }
  std::string detail(const std::string& summary) const {
    if (pass()) return summary + " [" + std::to_string(count_) + " checks]";
    std::string s = std::to_string(failures_.size()) + " of " + std::to_string(count_) + " checks failed: ";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) s += (i ? "; " : "") + failures_[i];
    return s;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

class Context {
 public:
  explicit Context(Mode mode) : mode_(mode) {}
  Mode mode() const { return mode_; }

  const ChowRing& lines() { return get(lines_, ResolutionConfig::all_lines(), Mode::Exact); }
  const ChowRing& planes() { return get(planes_, ResolutionConfig::all_planes(), Mode::Exact); }

  // Three mixed configurations drawn from a fixed seed.
  const std::vector<ResolutionConfig>& mixed() {
    if (mixed_.empty()) {
      std::mt19937 rng(36);
      const auto points = enumerate_points();
      while (mixed_.size() < 3) {
        const int size = std::uniform_int_distribution<int>(1, kPointCount - 1)(rng);
        auto shuffled = points;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.erase(shuffled.begin() + size, shuffled.end());
        mixed_.push_back(ResolutionConfig::with_planes(shuffled));
      }
    }
    return mixed_;
  }

 private:
  static const ChowRing& get(std::unique_ptr<ChowRing>& slot, const ResolutionConfig& cfg, Mode mode) {
    if (!slot) slot = std::make_unique<ChowRing>(cfg, mode);
    return *slot;
  }

  Mode mode_;
  std::unique_ptr<ChowRing> lines_, planes_;
  std::vector<ResolutionConfig> mixed_;
};

long millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

CriterionResult ranks(Context& ctx) {
  Checks c;
  const Ranks want{1, 51, 127, 51, 1};
  const auto& exact = ctx.lines();
  c.expect(exact.quotient().ranks() == want, "exact ranks " + profile(exact.quotient().ranks()));
  c.expect(exact.quotient().torsion_free() == true, "exact torsion");
  for (int k = 0; k <= 4; ++k) c.expect(exact.quotient().torsion(k).empty(), "torsion in degree " + std::to_string(k));
  c.expect(exact.build_ms() <= 10 * 60 * 1000, "exact build over 10 minutes");
  const ChowRing fast(ResolutionConfig::all_lines(), Mode::TwoPrime);
  c.expect(fast.quotient().ranks() == want, "two-prime ranks " + profile(fast.quotient().ranks()));
  c.expect(fast.build_ms() <= 60 * 1000, "two-prime build over 1 minute");
  return {0, "", c.pass(), c.detail("ranks (1,51,127,51,1), all invariant factors 1, exact and two-prime builds within budget")};
}

CriterionResult config_family(Context& ctx) {
  Checks c;
  std::vector<ResolutionConfig> cfgs{ResolutionConfig::all_planes()};
  for (const auto& m : ctx.mixed()) cfgs.push_back(m);
  std::string sizes;
  for (const auto& cfg : cfgs) {
    const ChowRing r(cfg, ctx.mode());
    const Ranks want{1, 51, 127 + cfg.s2().size(), 51, 1};
    c.expect(r.quotient().ranks() == want, "|S2|=" + std::to_string(cfg.s2().size()) + " ranks " + profile(r.quotient().ranks()));
    if (ctx.mode() == Mode::Exact) c.expect(r.quotient().torsion_free() == true, "torsion for |S2|=" + std::to_string(cfg.s2().size()));
    sizes += (sizes.empty() ? "" : ",") + std::to_string(cfg.s2().size());
  }
  return {0, "", c.pass(), c.detail("degree-2 rank 127+|S2| for |S2| in {" + sizes + "}, " + to_string(ctx.mode()) + " mode")};
}

CriterionResult census(Context&) {
  Checks c;
  const auto delta = unresolved_complex();
  const auto counts = delta.face_counts();
  c.expect(counts[0] == 65, "vertices");
  c.expect(counts[1] == 550, "edges " + std::to_string(counts[1]));
  c.expect(counts.size() == 5 && counts[4] == 15, "4-simplices");
  const std::map<std::string, int> want{{"ee-share-one", 90}, {"ee-complement", 10}, {"ff", 45}, {"gg", 15},
                                        {"ef-disjoint", 60}, {"ef-contained", 60}, {"eg", 180}, {"fg", 90}};
  for (const auto& [k, v] : edge_census(delta)) c.expect(want.at(k) == v, k + " = " + std::to_string(v));
  const auto lines = build_complex(ResolutionConfig::all_lines()).face_counts();
  c.expect(lines[1] == 535, "all-lines edges");
  c.expect(lines.size() <= 4 || lines[4] == 0, "all-lines 4-simplices");
  const auto planes = build_complex(ResolutionConfig::all_planes()).face_counts();
  c.expect(planes[1] == 550, "all-planes edges");
  c.expect(planes[2] + 15 == counts[2], "all-planes triangles");
  return {0, "", c.pass(), c.detail("65 vertices, edge types (90,10,45,15,60,60,180,90), fifteen 4-simplices")};
}

CriterionResult homology(Context& ctx) {
  Checks c;
  auto check = [&](const SimplicialComplex& k, const std::string& name) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& h : k.reduced_homology()) {
      const std::size_t want = h.dim == 3 ? 126 : 0;
      c.expect(h.rank == want && h.torsion.empty(), name + " H" + std::to_string(h.dim) + " rank " + std::to_string(h.rank));
    }
    c.expect(millis_since(t0) <= 60 * 1000, name + " over 1 minute");
  };
  check(unresolved_complex(), "Delta");
  check(build_complex(ResolutionConfig::all_lines()), "all-lines");
  check(build_complex(ResolutionConfig::all_planes()), "all-planes");
  for (const auto& m : ctx.mixed()) check(build_complex(m), "|S2|=" + std::to_string(m.s2().size()));
  return {0, "", c.pass(), c.detail("reduced homology Z^126 in degree 3 only, torsion-free, for Delta and 5 resolutions")};
}

CriterionResult psi_tables(Context& ctx) {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  for (const ChowRing* r : {&ctx.lines(), &ctx.planes()}) {
    const auto a = psi(5, 6), b = psi(6, 5);
    c.expect(r->integrate(r->product({a, a, b, b})) == 1, "normalization");
  }
  const auto t = psi_table(ctx.lines());
  const auto cmp = compare_with_table1(t);
  c.expect(cmp.zero_criterion, "zero criterion");
  c.expect(cmp.values_in_range, "values outside 1..9");
  for (const auto& d : cmp.discrepancies) {
    std::string printed;
    for (std::size_t i = 0; i < d.printed.size(); ++i) printed += d.printed[i] + "=" + std::to_string(d.printed_values[i]) + " ";
    c.expect(false, to_string(d.orbit) + " computed " + to_string(d.computed) + " printed " + (printed.empty() ? "absent" : printed));
  }
  c.expect(cmp.printed_orbits == cmp.computed_nonzero_orbits, "nonzero orbit count");
  const auto second = psi_table(ctx.planes());
  c.expect(second.orbits == t.orbits, "all-planes table differs");
  c.expect(millis_since(t0) <= 2 * 60 * 1000, "over 2 minutes");
  return {0, "", c.pass(),
          c.detail(std::to_string(cmp.computed_nonzero_orbits) + " nonzero of " + std::to_string(cmp.orbits) +
                   " orbits equal the " + std::to_string(cmp.printed_entries) + " printed entries; same table on all-planes")};
}

CriterionResult oracles(Context&) {
  Checks c;
  const std::vector<Ranks> want{{1, 1}, {1, 5, 1}, {1, 16, 16, 1}};
  for (int n = 4; n <= 6; ++n) {
    const M0nRing m(n);
    c.expect(m.quotient().ranks() == want[n - 4], "M0," + std::to_string(n) + " ranks");
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        e[i] = left;
        c.check(m.integrate_psi(e) == multinomial(n - 3, e), [&] { return "multinomial on M0," + std::to_string(n); });
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, n - 3);
  }
  const M0nRing m5(5);
  for (int i1 = 1; i1 <= 5; ++i1)
    for (int j1 = 1; j1 <= 5; ++j1)
      for (int i2 = 1; i2 <= 5; ++i2)
        for (int j2 = 1; j2 <= 5; ++j2) {
          if (i1 == j1 || i2 == j2) continue;
          const auto v = m5.integrate(m5.quotient().multiply(m35_psi(m5, i1, j1), m35_psi(m5, i2, j2)));
          c.expect(v == (i1 == i2 ? 0 : 1), "M(3,5) psi product");
        }
  return {0, "", c.pass(), c.detail("M0,n ranks and multinomial psi integrals for n=4,5,6; M(3,5) psi products 0/1")};
}

CriterionResult picard(Context& ctx) {
  Checks c;
  const auto cert = picard_m36_basis(ctx.lines());
  c.expect(cert.basis.size() == 36, "basis size");
  c.expect(cert.rank == 36, "rank " + std::to_string(cert.rank));
  c.expect(cert.kernel_dim == 36, "kernel dimension " + std::to_string(cert.kernel_dim));
  for (std::size_t i = 0; i < cert.basis.size(); ++i) c.expect(cert.in_subring[i], cert.basis[i].name + " not Cartier");
  return {0, "", c.pass(), c.detail("36 delta classes independent in A^1, in the subring, spanning the rank-36 kernel")};
}

CriterionResult canonical(Context& ctx) {
  Checks c;
  const auto rep = canonical_classes(ctx.lines());
  for (auto d : enumerate_divisors()) {
    const Monomial m({d.index()});
    const auto kind = d.kind();
    const Rational k = kind == DivisorKind::Triple ? Rational(-3, 10) : kind == DivisorKind::Pair ? Rational(-1, 5) : Rational(1, 5);
    const Rational kb = kind == DivisorKind::Triple ? Rational(7, 10) : kind == DivisorKind::Pair ? Rational(4, 5) : Rational(6, 5);
    c.expect(rep.K.coefficient(m) == k, "K on " + d.to_string());
    c.expect(rep.KplusB.coefficient(m) == kb, "K+B on " + d.to_string());
  }
  c.expect(rep.identity_residual.empty(), "blowup identity for K");
  for (const auto& [pt, v] : rep.line_restrictions) c.expect(v.is_zero(), "K+B on line " + pt.to_string());
  c.expect(rep.KplusB_fourth > 0, "(K+B)^4 not positive");
  const auto base = nlohmann::json::parse(data::canonical_baseline_json());
  c.expect(base.contains("KplusB_fourth") && parse_rational(base["KplusB_fourth"].get<std::string>()) == rep.KplusB_fourth,
           "(K+B)^4 = " + to_string(rep.KplusB_fourth) + " differs from the baseline");
  return {0, "", c.pass(), c.detail("K, K+B coefficients, blowup identity, K+B zero on 15 lines, (K+B)^4 = " + to_string(rep.KplusB_fourth))};
}

CriterionResult recursion(Context& ctx) {
  Checks c;
  const auto r = blowup_rank_recursion();
  c.expect(r == Ranks{1, 51, 127, 51, 1}, "recursion " + profile(r));
  c.expect(r == ctx.lines().quotient().ranks(), "recursion differs from the quotient");
  return {0, "", c.pass(), c.detail("blowup tower gives (1,51,127,51,1)")};
}

CriterionResult curves(Context& ctx) {
  Checks c;
  for (const auto& v : curve_checks(ctx.lines()))
    if (v.expected) c.expect(v.value == *v.expected, v.curve + " . " + v.against + " = " + to_string(v.value));
  return {0, "", c.pass(), c.detail("L.F12=-1, L.G[56,12,34]=1, C.E345=-1, C.G[46,12,35]=1, L.r6*D12=C.r6*D12=0")};
}

CriterionResult properties(Context& ctx) {
  Checks c;
  const auto& r = ctx.lines();
  // integration is invariant under S6 and duality
  std::mt19937 rng(2024);
  const auto perms = Permutation::all();
  const auto& top = r.quotient().admissible(4);
  const int samples = 600;
  for (int s = 0; s < samples; ++s) {
    const auto m = RingElement::monomial(top[std::uniform_int_distribution<std::size_t>(0, top.size() - 1)(rng)]);
    const auto& sigma = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
    const Rational v = r.integrate(m);
    const auto moved = m.substitute([&](int g) { return RingElement::generator(apply_perm(sigma, DivisorId::from_index(g)).index()); });
    const auto dual = m.substitute([&](int g) { return RingElement::generator(duality(DivisorId::from_index(g)).index()); });
    c.expect(r.integrate(moved) == v, "S6 invariance");
    c.expect(r.integrate(dual) == v, "duality invariance");
  }
  // restriction is multiplicative
  for (const ChowRing* ring : {&ctx.lines(), &ctx.planes()})
    for (auto pt : enumerate_points())
      for (int a = 0; a < kDivisorCount; ++a)
        for (int b = a; b < kDivisorCount; ++b) {
          const auto x = RingElement::generator(a), y = RingElement::generator(b);
          c.check(ring->restrict_to_fiber(x * y, pt) == fiber_product(ring->restrict_to_fiber(x, pt), ring->restrict_to_fiber(y, pt)),
                  [&] { return "restriction of " + divisor_name(a) + "*" + divisor_name(b) + " to " + pt.to_string(); });
        }
  // psi does not depend on the choices in its formula
  for (const ChowRing* ring : {&ctx.lines(), &ctx.planes()})
    for (const auto& f : psi_choice_failures(*ring)) c.expect(false, f + " depends on the choice of n and k");
  // the integral kills every linear relation times every cubic
  const ChowRing fast(ResolutionConfig::all_lines(), Mode::TwoPrime);
  const auto rels = linear_relations();
  for (const auto& m : fast.quotient().admissible(3)) {
    const auto mono = RingElement::monomial(m);
    for (std::size_t g = 0; g < rels.size(); ++g)
      c.check(fast.integrate(fast.multiply(rels[g], mono)) == 0, [&] { return "relation " + std::to_string(g) + " times " + mono.to_string(divisor_name); });
  }
  return {0, "", c.pass(),
          c.detail(std::to_string(samples) + " sampled monomials S6/duality invariant; restriction multiplicative on all generator pairs; "
                   "30 psi classes agree over 12 expansions; integral kills 60 relations x all cubics (two-prime build)")};
}

struct Entry {
  const char* name;
  CriterionResult (*run)(Context&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{{"ranks", ranks},         {"config-family", config_family}, {"census", census},
                                    {"homology", homology},   {"psi-table", psi_tables},        {"oracles", oracles},
                                    {"picard", picard},       {"canonical", canonical},         {"recursion", recursion},
                                    {"curves", curves},       {"properties", properties}};
  return e;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = to_string(mode);
  j["pass"] = pass();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : results) list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  j["criteria"] = list;
  return j.dump(2);
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : results) out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << "\n";
  return out.str();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

VerifyReport run_verify(const std::string& suite, Mode mode) {
  const auto& all = entries();
  if (suite != "acceptance" && std::none_of(all.begin(), all.end(), [&](const Entry& e) { return suite == e.name; }))
    throw std::invalid_argument("unknown suite '" + suite + "'");
  VerifyReport rep;
  rep.mode = mode;
  Context ctx(mode);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (suite != "acceptance" && suite != all[i].name) continue;
    CriterionResult r;
    try {
      r = all[i].run(ctx);
    } catch (const std::exception& e) {
      r = {0, "", false, std::string("error: ") + e.what()};
    }
    r.id = static_cast<int>(i) + 1;
    r.name = all[i].name;
    rep.results.push_back(std::move(r));
  }
  return rep;
}

}  // namespace m36
