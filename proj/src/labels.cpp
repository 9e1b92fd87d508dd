#include "m36/labels.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace m36 {

namespace {

// Lexicographic key of a 2-subset, (lo, hi).
int pair_key(MarkSet p) {
  const auto m = marks_of(p);
  return m[0] * 8 + m[1];
}

bool is_pair(MarkSet p) { return (p & ~kAllMarks) == 0 && mark_count(p) == 2; }

struct Tables {
  std::vector<MarkSet> triples;                // by index
  std::vector<MarkSet> pairs;                  // by index - 20
  std::vector<std::array<MarkSet, 3>> cyclic;  // by index - 35
  std::array<int, 64> triple_index{};
  std::array<int, 64> pair_index{};
  std::map<std::array<MarkSet, 3>, int> cyclic_index;
  std::vector<std::array<MarkSet, 3>> matchings;
  std::map<std::array<MarkSet, 3>, int> matching_index;

  Tables() {
    triple_index.fill(-1);
    pair_index.fill(-1);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) {
          triple_index[mark_set({i, j, k})] = static_cast<int>(triples.size());
          triples.push_back(mark_set({i, j, k}));
        }
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        pair_index[mark_set({i, j})] = kTripleCount + static_cast<int>(pairs.size());
        pairs.push_back(mark_set({i, j}));
      }
    // Matchings: sorted pairs, the first contains 1.
    for (MarkSet a : pairs) {
      if (!(a & 1)) continue;
      for (MarkSet b : pairs) {
        if ((b & a) || pair_key(b) <= pair_key(a)) continue;
        const MarkSet c = static_cast<MarkSet>(kAllMarks & ~(a | b));
        if (pair_key(c) <= pair_key(b)) continue;
        matchings.push_back({a, b, c});
      }
    }
    std::sort(matchings.begin(), matchings.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                          [](MarkSet u, MarkSet v) { return pair_key(u) < pair_key(v); });
    });
    for (int i = 0; i < static_cast<int>(matchings.size()); ++i) matching_index[matchings[i]] = i;

    for (const auto& m : matchings) {
      cyclic.push_back({m[0], m[1], m[2]});
      cyclic.push_back({m[0], m[2], m[1]});
    }
    std::sort(cyclic.begin(), cyclic.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                          [](MarkSet u, MarkSet v) { return pair_key(u) < pair_key(v); });
    });
    for (int i = 0; i < static_cast<int>(cyclic.size()); ++i)
      cyclic_index[cyclic[i]] = kTripleCount + kPairCount + i;
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

std::array<MarkSet, 3> sorted_matching(MarkSet a, MarkSet b, MarkSet c) {
  std::array<MarkSet, 3> m{a, b, c};
  std::sort(m.begin(), m.end(), [](MarkSet u, MarkSet v) { return pair_key(u) < pair_key(v); });
  return m;
}

}  // namespace

MarkSet mark_set(std::initializer_list<int> marks) {
  MarkSet s = 0;
  for (int m : marks) {
    if (m < 1 || m > 6) throw std::invalid_argument("mark out of range: " + std::to_string(m));
    s = static_cast<MarkSet>(s | (1u << (m - 1)));
  }
  return s;
}

int mark_count(MarkSet s) { return std::popcount(static_cast<unsigned>(s)); }

std::vector<int> marks_of(MarkSet s) {
  std::vector<int> out;
  for (int i = 1; i <= 6; ++i)
    if (s & (1u << (i - 1))) out.push_back(i);
  return out;
}

std::string mark_string(MarkSet s) {
  std::string out;
  for (int m : marks_of(s)) out.push_back(static_cast<char>('0' + m));
  return out;
}

MarkSet parse_marks(std::string_view digits) {
  MarkSet s = 0;
  for (char ch : digits) {
    if (ch < '1' || ch > '6') throw std::invalid_argument("bad mark digit in '" + std::string(digits) + "'");
    const MarkSet bit = static_cast<MarkSet>(1u << (ch - '1'));
    if (s & bit) throw std::invalid_argument("repeated mark in '" + std::string(digits) + "'");
    s = static_cast<MarkSet>(s | bit);
  }
  return s;
}

// ---------------------------------------------------------------- DivisorId

DivisorId DivisorId::triple(MarkSet first3) {
  if ((first3 & ~kAllMarks) || mark_count(first3) != 3) throw std::invalid_argument("triple divisor needs a 3-subset");
  return DivisorId(tables().triple_index[first3]);
}

DivisorId DivisorId::pair(MarkSet pair2) {
  if (!is_pair(pair2)) throw std::invalid_argument("pair divisor needs a 2-subset");
  return DivisorId(tables().pair_index[pair2]);
}

DivisorId DivisorId::cyclic(MarkSet a, MarkSet b, MarkSet c) {
  if (!is_pair(a) || !is_pair(b) || !is_pair(c) || (a & b) || (a & c) || (b & c))
    throw std::invalid_argument("cyclic divisor needs three disjoint pairs");
  std::array<MarkSet, 3> r{a, b, c};
  while (!(r[0] & 1)) std::rotate(r.begin(), r.begin() + 1, r.end());
  return DivisorId(tables().cyclic_index.at(r));
}

DivisorId DivisorId::from_index(int index) {
  if (index < 0 || index >= kDivisorCount) throw std::out_of_range("divisor index");
  return DivisorId(index);
}

DivisorKind DivisorId::kind() const {
  if (index_ < kTripleCount) return DivisorKind::Triple;
  if (index_ < kTripleCount + kPairCount) return DivisorKind::Pair;
  return DivisorKind::CyclicTriple;
}

MarkSet DivisorId::triple_set() const {
  if (kind() != DivisorKind::Triple) throw std::logic_error("not a triple divisor");
  return tables().triples[index_];
}

MarkSet DivisorId::pair_set() const {
  if (kind() != DivisorKind::Pair) throw std::logic_error("not a pair divisor");
  return tables().pairs[index_ - kTripleCount];
}

std::array<MarkSet, 3> DivisorId::cyclic_pairs() const {
  if (kind() != DivisorKind::CyclicTriple) throw std::logic_error("not a cyclic divisor");
  return tables().cyclic[index_ - kTripleCount - kPairCount];
}

std::string DivisorId::to_string() const {
  switch (kind()) {
    case DivisorKind::Triple:
      return "E[" + mark_string(triple_set()) + "]";
    case DivisorKind::Pair:
      return "F[" + mark_string(pair_set()) + "]";
    case DivisorKind::CyclicTriple: {
      const auto p = cyclic_pairs();
      return "G[" + mark_string(p[0]) + "," + mark_string(p[1]) + "," + mark_string(p[2]) + "]";
    }
  }
  return {};
}

DivisorId DivisorId::parse(std::string_view text) {
  if (text.size() < 4 || text[1] != '[' || text.back() != ']')
    throw std::invalid_argument("bad divisor syntax: " + std::string(text));
  const std::string_view body = text.substr(2, text.size() - 3);
  switch (text[0]) {
    case 'E':
      return triple(parse_marks(body));
    case 'F':
      return pair(parse_marks(body));
    case 'G': {
      if (body.size() != 8 || body[2] != ',' || body[5] != ',')
        throw std::invalid_argument("bad cyclic divisor syntax: " + std::string(text));
      return cyclic(parse_marks(body.substr(0, 2)), parse_marks(body.substr(3, 2)), parse_marks(body.substr(6, 2)));
    }
    default:
      throw std::invalid_argument("bad divisor syntax: " + std::string(text));
  }
}

// ---------------------------------------------------------- SingularPointId

SingularPointId SingularPointId::from_matching(MarkSet a, MarkSet b, MarkSet c) {
  if (!is_pair(a) || !is_pair(b) || !is_pair(c) || (a & b) || (a & c) || (b & c))
    throw std::invalid_argument("a matching needs three disjoint pairs");
  return SingularPointId(tables().matching_index.at(sorted_matching(a, b, c)));
}

SingularPointId SingularPointId::from_index(int index) {
  if (index < 0 || index >= kPointCount) throw std::out_of_range("point index");
  return SingularPointId(index);
}

std::array<MarkSet, 3> SingularPointId::matching() const { return tables().matchings[index_]; }

bool SingularPointId::contains_pair(MarkSet pair2) const {
  const auto m = matching();
  return m[0] == pair2 || m[1] == pair2 || m[2] == pair2;
}

std::string SingularPointId::to_string() const {
  const auto m = matching();
  return "P[" + mark_string(m[0]) + "," + mark_string(m[1]) + "," + mark_string(m[2]) + "]";
}

// --------------------------------------------------------- ResolutionConfig

ResolutionConfig ResolutionConfig::all_lines() { return ResolutionConfig(); }

ResolutionConfig ResolutionConfig::all_planes() {
  ResolutionConfig c;
  c.fibers_.fill(Fiber::Plane);
  return c;
}

ResolutionConfig ResolutionConfig::with_planes(const std::vector<SingularPointId>& s2) {
  ResolutionConfig c;
  for (auto p : s2) c.set(p, Fiber::Plane);
  return c;
}

std::vector<SingularPointId> ResolutionConfig::s1() const {
  std::vector<SingularPointId> out;
  for (auto p : enumerate_points())
    if (in_s1(p)) out.push_back(p);
  return out;
}

std::vector<SingularPointId> ResolutionConfig::s2() const {
  std::vector<SingularPointId> out;
  for (auto p : enumerate_points())
    if (in_s2(p)) out.push_back(p);
  return out;
}

std::string ResolutionConfig::to_json() const {
  nlohmann::json s2 = nlohmann::json::array();
  for (auto p : this->s2()) {
    const auto m = p.matching();
    s2.push_back({mark_string(m[0]), mark_string(m[1]), mark_string(m[2])});
  }
  return nlohmann::json{{"S2", s2}}.dump();
}

ResolutionConfig ResolutionConfig::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ResolutionConfig cfg;
  if (!j.contains("S2")) return cfg;
  const auto& s2 = j.at("S2");
  if (!s2.is_array()) throw std::invalid_argument("\"S2\" must be an array of matchings");
  std::set<int> seen;
  for (const auto& m : s2) {
    if (!m.is_array() || m.size() != 3) throw std::invalid_argument("each matching must list three pairs");
    std::array<MarkSet, 3> pairs{};
    for (int i = 0; i < 3; ++i) {
      if (!m[i].is_string()) throw std::invalid_argument("pairs must be strings like \"12\"");
      const auto s = m[i].get<std::string>();
      if (s.size() != 2) throw std::invalid_argument("bad pair \"" + s + "\"");
      pairs[i] = parse_marks(s);
    }
    const auto p = SingularPointId::from_matching(pairs[0], pairs[1], pairs[2]);
    if (!seen.insert(p.index()).second) throw std::invalid_argument("matching listed twice: " + p.to_string());
    cfg.set(p, Fiber::Plane);
  }
  return cfg;
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation() { std::iota(image_.begin(), image_.end(), 1); }

Permutation::Permutation(const std::array<int, 6>& images) : image_(images) {
  MarkSet seen = 0;
  for (int v : images) {
    if (v < 1 || v > 6) throw std::invalid_argument("permutation image out of range");
    seen = static_cast<MarkSet>(seen | (1u << (v - 1)));
  }
  if (seen != kAllMarks) throw std::invalid_argument("not a bijection of {1..6}");
}

Permutation Permutation::transposition(int a, int b) {
  std::array<int, 6> im{1, 2, 3, 4, 5, 6};
  std::swap(im[a - 1], im[b - 1]);
  return Permutation(im);
}

std::vector<Permutation> Permutation::all() {
  std::array<int, 6> im{1, 2, 3, 4, 5, 6};
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

MarkSet Permutation::operator()(MarkSet s) const {
  MarkSet out = 0;
  for (int m : marks_of(s)) out = static_cast<MarkSet>(out | (1u << (image_[m - 1] - 1)));
  return out;
}

Permutation Permutation::compose(const Permutation& other) const {
  std::array<int, 6> im{};
  for (int i = 1; i <= 6; ++i) im[i - 1] = (*this)(other(i));
  return Permutation(im);
}

Permutation Permutation::inverse() const {
  std::array<int, 6> im{};
  for (int i = 1; i <= 6; ++i) im[image_[i - 1] - 1] = i;
  return Permutation(im);
}

// --------------------------------------------------------------- operations

std::vector<DivisorId> enumerate_divisors() {
  std::vector<DivisorId> out;
  out.reserve(kDivisorCount);
  for (int i = 0; i < kDivisorCount; ++i) out.push_back(DivisorId::from_index(i));
  return out;
}

std::vector<SingularPointId> enumerate_points() {
  std::vector<SingularPointId> out;
  for (int i = 0; i < kPointCount; ++i) out.push_back(SingularPointId::from_index(i));
  return out;
}

DivisorId apply_perm(const Permutation& sigma, DivisorId d) {
  switch (d.kind()) {
    case DivisorKind::Triple:
      return DivisorId::triple(sigma(d.triple_set()));
    case DivisorKind::Pair:
      return DivisorId::pair(sigma(d.pair_set()));
    case DivisorKind::CyclicTriple: {
      const auto p = d.cyclic_pairs();
      return DivisorId::cyclic(sigma(p[0]), sigma(p[1]), sigma(p[2]));
    }
  }
  return d;
}

SingularPointId apply_perm(const Permutation& sigma, SingularPointId p) {
  const auto m = p.matching();
  return SingularPointId::from_matching(sigma(m[0]), sigma(m[1]), sigma(m[2]));
}

ResolutionConfig apply_perm(const Permutation& sigma, const ResolutionConfig& cfg) {
  ResolutionConfig out;
  for (auto p : enumerate_points()) out.set(apply_perm(sigma, p), cfg.fiber(p));
  return out;
}

DivisorId duality(DivisorId d) {
  switch (d.kind()) {
    case DivisorKind::Triple:
      return DivisorId::triple(static_cast<MarkSet>(kAllMarks & ~d.triple_set()));
    case DivisorKind::Pair:
      return d;
    case DivisorKind::CyclicTriple: {
      const auto p = d.cyclic_pairs();
      return DivisorId::cyclic(p[1], p[0], p[2]);
    }
  }
  return d;
}

SingularPointId point_of(DivisorId cyclic) {
  const auto p = cyclic.cyclic_pairs();
  return SingularPointId::from_matching(p[0], p[1], p[2]);
}

DivisorId partner(DivisorId cyclic) {
  const auto p = cyclic.cyclic_pairs();
  return DivisorId::cyclic(p[0], p[2], p[1]);
}

namespace {

bool triple_meets_cyclic(MarkSet t, const std::array<MarkSet, 3>& p) {
  for (int r = 0; r < 3; ++r) {
    const MarkSet lead = p[r];
    const MarkSet next = p[(r + 1) % 3];
    if ((t & lead) == lead && (t & ~lead & ~next) == 0) return true;
  }
  return false;
}

}  // namespace

bool intersects(DivisorId a, DivisorId b, const ResolutionConfig& cfg) {
  if (a == b) throw std::invalid_argument("intersects: self-intersection is not a disjointness question");
  if (a.kind() > b.kind()) std::swap(a, b);
  using K = DivisorKind;
  switch (a.kind()) {
    case K::Triple:
      switch (b.kind()) {
        case K::Triple:
          return mark_count(a.triple_set() & b.triple_set()) != 2;
        case K::Pair:
          return mark_count(a.triple_set() & b.pair_set()) != 1;
        case K::CyclicTriple:
          return triple_meets_cyclic(a.triple_set(), b.cyclic_pairs());
      }
      break;
    case K::Pair:
      if (b.kind() == K::Pair) return mark_count(a.pair_set() & b.pair_set()) != 1;
      return point_of(b).contains_pair(a.pair_set());
    case K::CyclicTriple: {
      const auto pa = point_of(a);
      if (pa != point_of(b)) return false;
      return cfg.in_s2(pa);
    }
  }
  return false;
}

std::vector<std::array<DivisorId, 3>> s2_triple_relations(const ResolutionConfig& cfg) {
  std::vector<std::array<DivisorId, 3>> out;
  for (auto p : cfg.s2()) {
    const auto m = p.matching();
    out.push_back({DivisorId::pair(m[0]), DivisorId::pair(m[1]), DivisorId::pair(m[2])});
  }
  return out;
}

}  // namespace m36
