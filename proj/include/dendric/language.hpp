#pragma once

#include <memory>
#include <mutex>
#include <utility>

#include "dendric/core.hpp"

namespace dendric {

// Generator of a minimal shift: the one-sided limit word
// x = outer(inner^(power*n)(seed)) with inner primitive (or on one letter)
// and inner^power prolongable on seed.  All language queries are answered
// from prefixes of x long enough that the answer is certified stable.
class MorphicSpec {
 public:
  MorphicSpec(Morphism inner, Morphism outer, Letter seed);
  static MorphicSpec pure(Morphism inner, Letter seed);

  const Morphism& inner() const { return inner_; }
  const Morphism& outer() const { return outer_; }
  Letter seed() const { return seed_; }
  int power() const { return power_; }
  const Alphabet& alphabet() const { return outer_.codomain(); }
  bool is_pure() const { return outer_.is_identity(); }

  // Prefix of x containing every factor of x of length <= n (certified: the
  // per-letter factor sets of the given length are saturated).
  Word certified_prefix(int n) const;
  // Prefix of x of length >= len (may include certification overshoot).
  Word prefix(long long len) const;
  // All factors of length n of the shift's language.
  std::set<Word> factor_set(int n) const;

 private:
  struct Cache;
  Morphism inner_;
  Morphism outer_;
  Letter seed_ = -1;
  int power_ = 1;
  std::shared_ptr<Cache> cache_;
};

// All factors of length n of the shift's language.
std::set<Word> factors(const MorphicSpec& spec, int n);
long long complexity(const MorphicSpec& spec, int n);
bool is_factor(const MorphicSpec& spec, const Word& w);

struct ExtensionData {
  Word word;
  std::set<Letter> left;                      // E^L(w)
  std::set<Letter> right;                     // E^R(w)
  std::set<std::pair<Letter, Letter>> bi;     // E(w)
};
ExtensionData extensions(const MorphicSpec& spec, const Word& w);

// Bipartite extension graph: left copies of E^L(w), right copies of E^R(w),
// one edge per biextension.
struct ExtensionGraph {
  std::set<Letter> left_vertices;
  std::set<Letter> right_vertices;
  std::set<std::pair<Letter, Letter>> edges;
};
ExtensionGraph extension_graph(const MorphicSpec& spec, const Word& w);
ExtensionGraph graph_from_extensions(const ExtensionData& data);
bool is_tree(const ExtensionGraph& g);
bool is_connected(const ExtensionGraph& g);
bool is_acyclic(const ExtensionGraph& g);

// E(w) is contained in ({a} x A) union (A x {b}) for some biextension (a,b).
bool is_ordinary(const MorphicSpec& spec, const Word& w);

// Non-dendric factors of length < n, sorted by (length, lex).
std::vector<Word> dendric_up_to(const MorphicSpec& spec, int n);

struct PeriodicityResult {
  bool periodic = false;
  int period = 0;    // the stalled complexity value, when periodic
  int cap = 0;       // lengths 1..cap were probed otherwise
};
// Morse-Hedlund probe: the shift is periodic iff complexity stalls.
PeriodicityResult periodicity_probe(const MorphicSpec& spec, int cap);

// Extension data of u inside the factorial closure of a finite set of words.
ExtensionData extensions_in(const std::vector<Word>& generators, const Word& u);
bool is_tree_in(const std::vector<Word>& generators, const Word& u);

}  // namespace dendric
