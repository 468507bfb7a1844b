#pragma once

#include "dendric/sadic.hpp"

namespace dendric {

// Total order on 0..d-1 stored as letter -> rank.
struct TotalOrder {
  std::vector<int> rank;

  // seq lists the letters from smallest to largest.
  static TotalOrder from_sequence(const std::vector<Letter>& seq);
  int size() const { return static_cast<int>(rank.size()); }
  bool less(Letter a, Letter b) const { return rank.at(a) < rank.at(b); }
  std::vector<Letter> sequence() const;
  TotalOrder reversed() const;

  bool operator==(const TotalOrder& o) const = default;
  bool operator<(const TotalOrder& o) const { return rank < o.rank; }
};

struct OrderPair {
  TotalOrder left, right;
  bool operator==(const OrderPair& o) const = default;
  bool operator<(const OrderPair& o) const {
    return left != o.left ? left < o.left : right < o.right;
  }
};

// Reversing both orders describes the same geometry; the canonical form
// puts letter 0 before letter 1 on the left.
bool is_normalized(const OrderPair& p);
OrderPair normalized(const OrderPair& p);

// For every 0 < k < d, the k smallest letters on the left differ from the k
// smallest letters on the right.
bool is_irreducible(const OrderPair& p);

// No two biextension edges cross when the sides are laid out by the orders:
// a1 strictly below a2 on the left forces b1 at or below b2 on the right.
bool planar(const ExtensionData& data, const OrderPair& p);
bool factor_planar(const MorphicSpec& spec, const Word& w, const OrderPair& p);
// Every initial factor of the return morphism is planar in its own language.
bool morphism_planar(const ReturnMorphism& rm, const OrderPair& p);

// The unique order on the domain making every context map order preserving
// into the target order on the codomain: letters compare by the first
// mismatch of their context words.
TotalOrder transfer_order(Side side, const ReturnMorphism& rm, const TotalOrder& target);

// Edges join order-consecutive letters.
MultiClique line_graph(const TotalOrder& o);

// Conditions: both line-graph triplets valid, rm planar for `from`, and
// `to` (or its reversal) is the transferred pair of `from`.
bool iet_edge(const ReturnMorphism& rm, const OrderPair& from, const OrderPair& to);

// Walks lambda then theta from every normalized irreducible start pair;
// accepts when the deterministic successor walk closes a validated cycle.
// The accepted pair orders the exchanged intervals (right order on top).
std::optional<OrderPair> decide_iet(const MorphicSpec& spec);
std::optional<OrderPair> decide_iet(const MorphicSpec& spec, const Classification& evidence);

struct IetGraph {
  std::vector<OrderPair> vertices;  // normalized irreducible pairs
  struct Edge {
    int from, morphism, to;
    bool operator==(const Edge& o) const = default;
  };
  std::vector<Edge> edges;
};
IetGraph build_iet_graph(const std::vector<ReturnMorphism>& s);

// Vertex classes under simultaneous letter permutation (after
// renormalization).
struct IetQuotient {
  std::vector<int> vertex_class;
  int classes = 0;
};
IetQuotient quotient_by_permutations(const IetGraph& g);

std::string order_text(const TotalOrder& o, const Alphabet& a);
std::string to_dot(const IetGraph& g, const Alphabet& a, const std::vector<std::string>& labels);

}  // namespace dendric
