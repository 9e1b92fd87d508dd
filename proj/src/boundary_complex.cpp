#include "m36/boundary_complex.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace m36 {

std::uint64_t SimplicialComplex::key(const Face& f) {
  std::uint64_t k = 0;
  for (int v : f) k = (k << 7) | static_cast<std::uint64_t>(v + 1);
  return k;
}

SimplicialComplex::SimplicialComplex(int nvertices, std::vector<std::vector<Face>> faces_by_dim)
    : n_(nvertices), faces_(std::move(faces_by_dim)) {
  if (n_ >= 128) throw std::invalid_argument("too many vertices");
  while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
  index_.resize(faces_.size());
  for (std::size_t d = 0; d < faces_.size(); ++d) {
    if (d > 8) throw std::invalid_argument("face too large");
    for (auto& f : faces_[d]) std::sort(f.begin(), f.end());
    std::sort(faces_[d].begin(), faces_[d].end());
    for (std::uint32_t i = 0; i < faces_[d].size(); ++i) {
      if (faces_[d][i].size() != d + 1) throw std::invalid_argument("face has wrong dimension");
      index_[d].emplace(key(faces_[d][i]), i);
    }
  }
}

SimplicialComplex SimplicialComplex::flag(int nvertices, const std::function<bool(int, int)>& adjacent, int max_dim) {
  std::vector<std::vector<char>> adj(nvertices, std::vector<char>(nvertices, 0));
  for (int i = 0; i < nvertices; ++i)
    for (int j = i + 1; j < nvertices; ++j) adj[i][j] = adj[j][i] = adjacent(i, j) ? 1 : 0;
  std::vector<std::vector<Face>> faces(max_dim + 1);
  Face current;
  std::function<void(int)> grow = [&](int from) {
    for (int v = from; v < nvertices; ++v) {
      bool ok = true;
      for (int u : current)
        if (!adj[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      if (static_cast<int>(current.size()) > max_dim + 1) throw std::logic_error("clique larger than the dimension bound");
      faces[current.size() - 1].push_back(current);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(0);
  return SimplicialComplex(nvertices, std::move(faces));
}

SimplicialComplex SimplicialComplex::without(const std::vector<Face>& removed) const {
  std::vector<std::vector<Face>> kept(faces_.size());
  for (std::size_t d = 0; d < faces_.size(); ++d)
    for (const auto& f : faces_[d]) {
      bool drop = false;
      for (const auto& r : removed)
        if (std::includes(f.begin(), f.end(), r.begin(), r.end())) {
          drop = true;
          break;
        }
      if (!drop) kept[d].push_back(f);
    }
  return SimplicialComplex(n_, std::move(kept));
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> out;
  for (const auto& f : faces_) out.push_back(f.size());
  return out;
}

bool SimplicialComplex::contains(const Face& f) const {
  if (f.empty()) return true;
  if (f.size() > faces_.size()) return false;
  return index_[f.size() - 1].count(key(f)) > 0;
}

bool SimplicialComplex::contains_support(std::vector<int> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return contains(vertices);
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < faces_.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long>(faces_[d].size());
  return chi;
}

SparseIntegerMatrix SimplicialComplex::boundary_matrix(int k) const {
  if (k < 0 || k > dimension()) return SparseIntegerMatrix(0, 0);
  const auto& rows = faces_[k];
  if (k == 0) {
    SparseIntegerMatrix m(rows.size(), 1);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, {{0, Integer(1)}});
    return m;
  }
  SparseIntegerMatrix m(rows.size(), faces_[k - 1].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::pair<std::uint32_t, Integer>> e;
    for (std::size_t drop = 0; drop < rows[i].size(); ++drop) {
      Face g;
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (j != drop) g.push_back(rows[i][j]);
      const auto it = index_[k - 1].find(key(g));
      if (it == index_[k - 1].end()) throw std::logic_error("complex is not closed under faces");
      e.emplace_back(it->second, Integer(drop % 2 ? -1 : 1));
    }
    m.set_row(i, std::move(e));
  }
  return m;
}

std::vector<HomologyGroup> SimplicialComplex::reduced_homology() const {
  const int top = dimension();
  std::vector<SmithInvariants> snf(top + 2);
  for (int k = 0; k <= top; ++k) snf[k] = smith_normal_form(boundary_matrix(k));
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= top; ++k) {
    HomologyGroup h;
    h.dim = k;
    h.rank = faces_[k].size() - snf[k].rank - snf[k + 1].rank;
    h.torsion = snf[k + 1].torsion();
    out.push_back(std::move(h));
  }
  return out;
}

SimplicialComplex unresolved_complex() {
  const auto planes = ResolutionConfig::all_planes();
  return SimplicialComplex::flag(
      kDivisorCount,
      [&](int a, int b) { return intersects(DivisorId::from_index(a), DivisorId::from_index(b), planes); }, 4);
}

SimplicialComplex build_complex(const ResolutionConfig& cfg) {
  std::vector<Face> removed;
  for (auto d : enumerate_divisors()) {
    if (d.kind() != DivisorKind::CyclicTriple || !cfg.in_s1(point_of(d))) continue;
    const int a = d.index(), b = partner(d).index();
    if (a < b) removed.push_back({a, b});
  }
  for (const auto& t : s2_triple_relations(cfg)) removed.push_back({t[0].index(), t[1].index(), t[2].index()});
  return unresolved_complex().without(removed);
}

std::map<std::string, int> edge_census(const SimplicialComplex& c) {
  std::map<std::string, int> out;
  for (const char* k : {"ee-share-one", "ee-complement", "ff", "gg", "ef-disjoint", "ef-contained", "eg", "fg"}) out[k] = 0;
  if (c.dimension() < 1) return out;
  using K = DivisorKind;
  for (const auto& e : c.faces(1)) {
    const auto a = DivisorId::from_index(e[0]), b = DivisorId::from_index(e[1]);
    if (a.kind() == K::Triple && b.kind() == K::Triple)
      ++out[(a.triple_set() & b.triple_set()) ? "ee-share-one" : "ee-complement"];
    else if (a.kind() == K::Pair && b.kind() == K::Pair)
      ++out["ff"];
    else if (a.kind() == K::CyclicTriple && b.kind() == K::CyclicTriple)
      ++out["gg"];
    else if (a.kind() == K::Triple && b.kind() == K::Pair)
      ++out[(a.triple_set() & b.pair_set()) ? "ef-contained" : "ef-disjoint"];
    else if (a.kind() == K::Triple)
      ++out["eg"];
    else
      ++out["fg"];
  }
  return out;
}

std::string homology_json(const std::vector<HomologyGroup>& h, const std::vector<std::size_t>& faces) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& g : h) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& x : g.torsion) t.push_back(x.get_str());
    degrees.push_back({{"dim", g.dim}, {"rank", g.rank}, {"torsion", t}});
  }
  return nlohmann::json{{"degrees", degrees}, {"faces", faces}}.dump();
}

}  // namespace m36
