#pragma once

// Dual complex of the boundary and its modifications for the small resolutions.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "m36/exactla.hpp"
#include "m36/labels.hpp"

namespace m36 {

/// Sorted vertex list.
using Face = std::vector<int>;

struct HomologyGroup {
  int dim = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

/// Finite simplicial complex on vertices 0..n-1 (n < 128, faces of at most
/// nine vertices). The empty face is implicit.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Faces of each dimension; need not be sorted but must be closed under subsets.
  SimplicialComplex(int nvertices, std::vector<std::vector<Face>> faces_by_dim);

  /// Clique complex of the graph. Throws std::logic_error when a clique has
  /// more than max_dim + 1 vertices.
  static SimplicialComplex flag(int nvertices, const std::function<bool(int, int)>& adjacent, int max_dim);

  /// Removes every face containing one of the given faces.
  SimplicialComplex without(const std::vector<Face>& removed) const;

  int vertex_count() const { return n_; }
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Face>& faces(int dim) const { return faces_.at(dim); }
  std::vector<std::size_t> face_counts() const;
  bool contains(const Face& f) const;
  /// Whether the set of distinct vertices in the list is a face.
  bool contains_support(std::vector<int> vertices) const;
  long euler_characteristic() const;

  /// Rows are k-faces, columns (k-1)-faces; for k = 0 the single column is the empty face.
  SparseIntegerMatrix boundary_matrix(int k) const;
  /// Reduced integral homology in degrees 0..dimension().
  std::vector<HomologyGroup> reduced_homology() const;

 private:
  static std::uint64_t key(const Face& f);
  int n_ = 0;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index_;
};

/// The complex of the unresolved space: flag complex of the full 550-edge graph.
SimplicialComplex unresolved_complex();
/// Its modification for a small resolution.
SimplicialComplex build_complex(const ResolutionConfig& cfg);

/// Counts of the eight edge types of the unresolved complex, keyed
/// ee-share-one, ee-complement, ff, gg, ef-disjoint, ef-contained, eg, fg.
std::map<std::string, int> edge_census(const SimplicialComplex& c);

/// {"degrees":[{"dim","rank","torsion"}],"faces":[f0..]}.
std::string homology_json(const std::vector<HomologyGroup>& h, const std::vector<std::size_t>& faces);

}  // namespace m36
