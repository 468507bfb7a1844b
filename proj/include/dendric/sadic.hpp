#pragma once

#include "dendric/decide.hpp"

namespace dendric {

// Covering trees are multi-cliques whose generators are distinct 2-sets
// forming a spanning tree; is_tree() characterizes them.
using LabeledTree = MultiClique;

// All labeled trees on d vertices, by Prufer decoding; d^(d-2) of them.
std::vector<LabeledTree> enumerate_trees(int d);

enum class VertexUniverse { Trees, MultiCliques };

// Vertices are candidate graphs; an edge from T' to T labeled by the i-th
// morphism means (T', sigma_i, T) is a valid triplet.  The walk direction
// follows the derived tower: level n -> level n+1.
struct CharGraph {
  Side side = Side::Left;
  VertexUniverse universe = VertexUniverse::Trees;
  std::vector<MultiClique> vertices;
  struct Edge {
    int from;      // the image vertex T'
    int morphism;  // index into the defining set
    int to;        // the source vertex T
    bool operator==(const Edge& o) const = default;
  };
  std::vector<Edge> edges;
};

// Universe MultiCliques: every duplicate-free family of vertex subsets of
// size >= 2 (duplicates can never satisfy condition 1).
CharGraph build_char_graph(const std::vector<ReturnMorphism>& s, Side side,
                           VertexUniverse universe);

// Given a valid triplet (target, sigma, source) and a covering tree of the
// target, produces a covering tree T of the source with (tree, sigma, T)
// valid, by iterated generator splitting.
LabeledTree refine_to_trees(Side side, const MultiClique& target, const ReturnMorphism& rm,
                            const MultiClique& source, const LabeledTree& tree);

// True iff some infinite path is labeled prefix . cycle^omega.
bool path_query(const CharGraph& g, const std::vector<int>& prefix,
                const std::vector<int>& cycle);

MultiClique relabel(const MultiClique& g, const std::vector<Letter>& perm);

// Pairs (T_L, T_R) of tree vertices modulo simultaneous letter permutation.
struct QuotientGraph {
  std::vector<std::pair<MultiClique, MultiClique>> representatives;  // canonical minima
  std::vector<int> pair_class;  // indexed by left_index * |right| + right_index
  struct Edge {
    int from, morphism, to;
    bool operator==(const Edge& o) const = default;
  };
  std::vector<Edge> edges;
};
QuotientGraph quotient_by_permutations(const CharGraph& left, const CharGraph& right);

std::string to_dot(const CharGraph& g, const std::vector<std::string>& labels);
std::string to_json(const CharGraph& g, const std::vector<std::string>& labels);
std::string to_json(const QuotientGraph& q, const std::vector<std::string>& labels);

}  // namespace dendric
