#pragma once

#include <optional>

#include "dendric/clique.hpp"

namespace dendric {

// Morphism sigma with a word w such that, for every letter a, sigma(a)w
// contains exactly two occurrences of w: one as a prefix and one as a proper
// suffix.  The valid w form a chain of prefixes; `word` is the longest one.
struct ReturnMorphism {
  Morphism morphism;
  Word word;                      // maximal valid w
  std::vector<Word> valid_words;  // all valid w, shortest first
};

// Tests the definition for every candidate length; returns nullopt when no
// word works.  Requires letter-injectivity.
std::optional<ReturnMorphism> recognize_return_morphism(const Morphism& m);
ReturnMorphism require_return_morphism(const Morphism& m);

// Factors of union_a L(sigma(a)w) with no occurrence of w, i.e. the words
// whose extension graphs the images do not control.
std::set<Word> initial_factors(const ReturnMorphism& rm);
// All initial factors have tree extension graphs inside L(sigma).
bool is_dendric_return_morphism(const ReturnMorphism& rm);
std::vector<Word> non_dendric_initial_factors(const ReturnMorphism& rm);

// T^L: longest common suffixes of pairs of images.
// T^R: longest common prefixes of pairs of sigma(a)w.
std::set<Word> tau_left(const ReturnMorphism& rm);
std::set<Word> tau_right(const ReturnMorphism& rm);
std::set<Word> tau_left(const Morphism& m);
std::set<Word> tau_right(const Morphism& m);

struct PartialLetterMap {
  std::map<Letter, Letter> map;
  bool contains(Letter a) const { return map.count(a) > 0; }
  Letter at(Letter a) const;
  std::vector<Letter> domain() const;
};

// phi^L_{sigma,s}: defined on letters a with sigma(a) in B+ s; maps a to the
// letter of sigma(a) just before the suffix s.
PartialLetterMap phi_left(const ReturnMorphism& rm, const Word& s);
// phi^R_{sigma,p}: defined on letters a with sigma(a)w in p B+; maps a to
// the letter of sigma(a)w just after the prefix p.
PartialLetterMap phi_right(const ReturnMorphism& rm, const Word& p);
PartialLetterMap phi_left(const Morphism& m, const Word& s);
PartialLetterMap phi_right(const Morphism& m, const Word& p);

// G({phi(C_i ∩ dom phi)}) over phi in the tau family, images of size < 2
// dropped, duplicates kept.  Vertices: the codomain alphabet of rm.
MultiClique image(const ReturnMorphism& rm, Side side, const MultiClique& g);
MultiClique image_left(const Morphism& m, const MultiClique& g);
MultiClique image_right(const Morphism& m, const MultiClique& g);

struct StabilizeViolation {
  enum class Kind {
    SourceNotAcyclic,
    SourceNotConnected,
    SubgraphDisconnected,
    ImageNotAcyclic,
    ImageNotConnected,
    InternalMonotonicityBreach,
  };
  Kind kind;
  Word context;  // offending s or p for SubgraphDisconnected
  int step = 0;
};

struct StabilizeResult {
  MultiClique stable;               // last graph computed
  std::vector<MultiClique> trace;   // G_0 = complete, G_1, ...
  std::optional<StabilizeViolation> failure;
};

// Iterates G <- image(rm, side, G) from the complete graph until a fixed
// point, validating each step (source/image acyclic + connected, induced
// subgraphs on the phi domains connected).
StabilizeResult stabilize(const ReturnMorphism& rm, Side side);
StabilizeResult stabilize(const Morphism& m, Side side);

// Antecedent of u in sigma . X: either u avoids w (initial factor), or there
// is a unique triplet (s, v, p) with u = s sigma(v) p, p in w B*, and the
// restricted extension set of v between s and p non-empty.
struct Antecedent {
  bool initial = false;
  Word s, v, p;
};
Antecedent antecedent(const ReturnMorphism& rm, const MorphicSpec& x, const Word& u);

// Extension graph of v in X restricted to left extensions ending the image
// context s and right extensions starting the context p.
ExtensionGraph restricted_extension_graph(const MorphicSpec& x, const Word& v,
                                          const ReturnMorphism& rm, const Word& s,
                                          const Word& p);

// Return words to w in the shift of spec, ordered by first occurrence in the
// limit word; the scan window is certified complete via a block-gap bound.
std::vector<Word> return_words(const MorphicSpec& spec, const Word& w);

struct Derivation {
  Morphism coding;     // theta_u : {1..k} -> A*, i-th return word
  MorphicSpec derived; // pure spec generating the derived sequence
};
// u must be a non-empty prefix of the limit word of a pure spec.
Derivation derive(const MorphicSpec& spec, const Word& u);

struct ReturnRepresentation {
  ReturnMorphism lambda;  // level 0..m-1 composed
  ReturnMorphism theta;   // cycle part, primitive, prolongable on letter 1
  std::vector<Morphism> chain;  // theta_0, ..., theta_{n-1}
  int cycle_start = 0;          // m
  int cycle_length = 0;         // n - m
  long long verified_prefix = 0;
};
// x = lambda(theta^infinity(1)); derived-level chain with budget 64.
ReturnRepresentation return_representation(const MorphicSpec& spec);

}  // namespace dendric
