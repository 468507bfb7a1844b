#pragma once

#include "dendric/returns.hpp"

namespace dendric {

struct TripletVerdict {
  enum class Failure {
    SourceNotAcyclicConnected,
    SubgraphDisconnected,
    ImageNotAcyclicConnected,
    ImageMismatch,
  };
  bool valid = false;
  std::optional<Failure> failed;
  Word context;        // offending tau word for SubgraphDisconnected
  MultiClique image;   // sigma^side(source), whenever condition 1-2 hold
};

// Conditions: (1) source acyclic for the coloring and connected; (2) the
// subgraph induced on each phi domain is connected; (3) the image is acyclic
// for the coloring, connected, and canonically equal to the target.
TripletVerdict valid_triplet(Side side, const MultiClique& target, const ReturnMorphism& rm,
                             const MultiClique& source);

enum class Verdict { Periodic, Dendric, EventuallyDendric, NotEventuallyDendric, Inconclusive };
const char* verdict_name(Verdict v);
int exit_code(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Inconclusive;
  int period = 0;     // Periodic: the stalled complexity value
  int threshold = 0;  // minimal N with every factor of length >= N dendric
  std::optional<ReturnRepresentation> rep;
  std::optional<MultiClique> stable_left;   // of the cycle level y
  std::optional<MultiClique> stable_right;
  std::vector<Word> witnesses;  // non-dendric factors, sorted by length
  std::string detail;           // failure step or inconclusive reason
};

// Periodicity probe, then the return representation (lambda, theta); X is
// eventually dendric iff theta is a dendric return morphism and both
// stabilizations of theta succeed with every consecutive triplet valid, and
// dendric iff moreover the lambda-triplets on the stabilized graphs are
// valid.  Budget failures surface as Inconclusive, never as a verdict.
Classification classify(const MorphicSpec& spec);

// Minimal threshold: stabilization depth of the cycle level pushed through
// lambda bounds the longest non-dendric factor; the range below the bound is
// scanned directly.  Requires a Dendric or EventuallyDendric classification.
int threshold(const MorphicSpec& spec, const Classification& evidence);

// Stabilized graphs of X itself: images under lambda of the cycle-level
// stable graphs.
std::pair<MultiClique, MultiClique> stabilized_graphs(const MorphicSpec& spec);

std::string classification_json(const MorphicSpec& spec, const Classification& c);

}  // namespace dendric
