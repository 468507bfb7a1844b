#pragma once

#include "dendric/language.hpp"

namespace dendric {

// Colored multigraph given by a multiset of "generators": vertex subsets of
// size >= 2, each contributing a monochromatic clique.  The vertex set is
// explicit (isolated vertices count against connectedness).  Canonical form:
// generators sorted, duplicates kept.
class MultiClique {
 public:
  MultiClique() = default;
  MultiClique(std::vector<Letter> vertices, std::vector<std::vector<Letter>> generators);
  static MultiClique complete(int d);
  static MultiClique on_range(int d, std::vector<std::vector<Letter>> generators);

  const std::vector<Letter>& vertices() const { return vertices_; }
  const std::vector<std::vector<Letter>>& generators() const { return generators_; }
  bool has_vertex(Letter v) const;
  // Number of edges of the underlying multigraph.
  long long edge_count() const;

  bool operator==(const MultiClique& o) const {
    return vertices_ == o.vertices_ && generators_ == o.generators_;
  }
  bool operator!=(const MultiClique& o) const { return !(*this == o); }
  bool operator<(const MultiClique& o) const {
    if (vertices_ != o.vertices_) return vertices_ < o.vertices_;
    return generators_ < o.generators_;
  }

 private:
  std::vector<Letter> vertices_;                  // sorted, distinct
  std::vector<std::vector<Letter>> generators_;   // each sorted, list sorted
};

// Every simple cycle is monochromatic.  Equivalent to: pairwise generator
// intersections have at most one vertex, and the vertex-generator incidence
// graph is a forest.
bool is_acyclic_for_coloring(const MultiClique& g);
bool is_connected(const MultiClique& g);
// All generators are distinct 2-sets forming a spanning tree.
bool is_tree(const MultiClique& g);

// Subgraph induced on S: generators intersected with S, sizes < 2 dropped.
MultiClique induced(const MultiClique& g, const std::vector<Letter>& s);

// Reference acyclicity check: expand to the edge-colored multigraph and
// enumerate simple cycles.
bool is_acyclic_for_coloring_bruteforce(const MultiClique& g);

enum class Side { Left, Right };

// G({E^side(v) : v in L_n(X)}), singleton extension sets dropped.
MultiClique side_graph(const MorphicSpec& spec, Side side, int n);
inline MultiClique left_graph(const MorphicSpec& spec, int n) {
  return side_graph(spec, Side::Left, n);
}
inline MultiClique right_graph(const MorphicSpec& spec, int n) {
  return side_graph(spec, Side::Right, n);
}

std::string to_dot(const MultiClique& g, const Alphabet& a);
std::string to_json(const MultiClique& g, const Alphabet& a);

}  // namespace dendric
