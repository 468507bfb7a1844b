#include "dendric/decide.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace dendric {

TripletVerdict valid_triplet(Side side, const MultiClique& target, const ReturnMorphism& rm,
                             const MultiClique& source) {
  const int ddom = rm.morphism.domain().size();
  std::vector<Letter> expect(ddom);
  std::iota(expect.begin(), expect.end(), 0);
  if (source.vertices() != expect)
    fail(Errc::AlphabetMismatch, "source vertices differ from the morphism domain");

  TripletVerdict out;
  if (!is_acyclic_for_coloring(source) || !is_connected(source)) {
    out.failed = TripletVerdict::Failure::SourceNotAcyclicConnected;
    return out;
  }
  std::set<Word> contexts = side == Side::Left ? tau_left(rm) : tau_right(rm);
  for (const Word& s : contexts) {
    PartialLetterMap phi = side == Side::Left ? phi_left(rm, s) : phi_right(rm, s);
    if (!is_connected(induced(source, phi.domain()))) {
      out.failed = TripletVerdict::Failure::SubgraphDisconnected;
      out.context = s;
      return out;
    }
  }
  out.image = image(rm, side, source);
  if (!is_acyclic_for_coloring(out.image) || !is_connected(out.image)) {
    out.failed = TripletVerdict::Failure::ImageNotAcyclicConnected;
    return out;
  }
  if (out.image != target) {
    out.failed = TripletVerdict::Failure::ImageMismatch;
    return out;
  }
  out.valid = true;
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Periodic: return "periodic";
    case Verdict::Dendric: return "dendric";
    case Verdict::EventuallyDendric: return "eventually-dendric";
    case Verdict::NotEventuallyDendric: return "not-eventually-dendric";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Dendric: return 0;
    case Verdict::EventuallyDendric: return 2;
    case Verdict::NotEventuallyDendric: return 3;
    case Verdict::Periodic: return 4;
    case Verdict::Inconclusive: return 5;
  }
  return 5;
}

namespace {

constexpr int kPeriodicityCap = 100;
constexpr int kStableDepthCap = 256;

// The fixed point of theta, as a spec on the canonical alphabet.
MorphicSpec cycle_level(const ReturnRepresentation& rep) {
  return MorphicSpec::pure(rep.theta.morphism, 0);
}

std::string describe(const StabilizeViolation& v, Side side, const Alphabet& a) {
  std::ostringstream os;
  os << (side == Side::Left ? "left" : "right") << " stabilization, step " << v.step << ": ";
  switch (v.kind) {
    case StabilizeViolation::Kind::SourceNotAcyclic: os << "graph not acyclic"; break;
    case StabilizeViolation::Kind::SourceNotConnected: os << "graph not connected"; break;
    case StabilizeViolation::Kind::SubgraphDisconnected:
      os << "subgraph for context \"" << format(v.context, a) << "\" disconnected";
      break;
    case StabilizeViolation::Kind::ImageNotAcyclic: os << "image not acyclic"; break;
    case StabilizeViolation::Kind::ImageNotConnected: os << "image not connected"; break;
    case StabilizeViolation::Kind::InternalMonotonicityBreach:
      fail(Errc::InternalMonotonicityBreach, "stabilization revisited a non-consecutive graph");
  }
  return os.str();
}

}  // namespace

int threshold(const MorphicSpec& spec, const Classification& evidence) {
  if (!evidence.rep || !evidence.stable_left || !evidence.stable_right)
    fail(Errc::NotEventuallyDendricInput, "threshold needs a dendric classification");
  const ReturnRepresentation& rep = *evidence.rep;
  MorphicSpec y = cycle_level(rep);
  int depth = -1;
  for (int n = 0; n <= kStableDepthCap && depth < 0; ++n)
    if (side_graph(y, Side::Left, n) == *evidence.stable_left &&
        side_graph(y, Side::Right, n) == *evidence.stable_right)
      depth = n;
  if (depth < 0) fail(Errc::InternalMonotonicityBreach, "stable graphs never reached");
  long long bound = static_cast<long long>(rep.lambda.morphism.max_image_length()) * (depth + 1) +
                    static_cast<long long>(rep.lambda.word.size()) - 1;
  std::vector<Word> bad = dendric_up_to(spec, static_cast<int>(bound) + 1);
  return bad.empty() ? 0 : static_cast<int>(bad.back().size()) + 1;
}

Classification classify(const MorphicSpec& spec) {
  Classification c;
  PeriodicityResult probe = periodicity_probe(spec, kPeriodicityCap);
  if (probe.periodic) {
    c.verdict = Verdict::Periodic;
    c.period = probe.period;
    return c;
  }
  try {
    c.rep = return_representation(spec);
  } catch (const Error& e) {
    if (e.code() == Errc::DerivationInconclusive || e.code() == Errc::ChainBudgetExceeded) {
      c.verdict = Verdict::Inconclusive;
      c.detail = e.what();
      return c;
    }
    throw;
  }
  std::vector<Word> bad = non_dendric_initial_factors(c.rep->theta);
  if (!bad.empty()) {
    c.verdict = Verdict::NotEventuallyDendric;
    std::string witness = bad.front().empty()
                              ? "the empty word"
                              : format(bad.front(), c.rep->theta.morphism.domain());
    c.detail = "cycle morphism is not a dendric return morphism (" + witness +
               " is not a tree in its language)";
    return c;
  }
  StabilizeResult left = stabilize(c.rep->theta, Side::Left);
  StabilizeResult right = stabilize(c.rep->theta, Side::Right);
  if (left.failure || right.failure) {
    c.verdict = Verdict::NotEventuallyDendric;
    const StabilizeViolation& v = left.failure ? *left.failure : *right.failure;
    c.detail = describe(v, left.failure ? Side::Left : Side::Right,
                        c.rep->theta.morphism.domain());
    return c;
  }
  c.stable_left = left.stable;
  c.stable_right = right.stable;

  // The cycle level is dendric; X is dendric iff lambda extends the path.
  bool dendric = is_dendric_return_morphism(c.rep->lambda);
  if (dendric) {
    TripletVerdict l = valid_triplet(Side::Left, image(c.rep->lambda, Side::Left, left.stable),
                                     c.rep->lambda, left.stable);
    TripletVerdict r = valid_triplet(Side::Right, image(c.rep->lambda, Side::Right, right.stable),
                                     c.rep->lambda, right.stable);
    dendric = l.valid && r.valid;
  }
  if (dendric) {
    c.verdict = Verdict::Dendric;
    c.threshold = 0;
    return c;
  }
  c.verdict = Verdict::EventuallyDendric;
  c.threshold = threshold(spec, c);
  c.witnesses = dendric_up_to(spec, c.threshold);
  return c;
}

std::pair<MultiClique, MultiClique> stabilized_graphs(const MorphicSpec& spec) {
  Classification c = classify(spec);
  if (c.verdict != Verdict::Dendric && c.verdict != Verdict::EventuallyDendric)
    fail(Errc::NotEventuallyDendricInput, "shift is not eventually dendric");
  return {image(c.rep->lambda, Side::Left, *c.stable_left),
          image(c.rep->lambda, Side::Right, *c.stable_right)};
}

std::string classification_json(const MorphicSpec& spec, const Classification& c) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(c.verdict);
  if (c.verdict == Verdict::Periodic) j["period"] = c.period;
  if (c.verdict == Verdict::Dendric || c.verdict == Verdict::EventuallyDendric)
    j["threshold"] = c.threshold;
  auto rules = [](const Morphism& m) {
    nlohmann::ordered_json r;
    for (Letter a = 0; a < m.domain().size(); ++a)
      r[m.domain().symbol(a)] = format(m.image(a), m.codomain());
    return r;
  };
  if (c.rep) {
    j["lambda"] = rules(c.rep->lambda.morphism);
    j["theta"] = rules(c.rep->theta.morphism);
  }
  if (c.stable_left && c.stable_right &&
      (c.verdict == Verdict::Dendric || c.verdict == Verdict::EventuallyDendric)) {
    auto [gl, gr] = stabilized_graphs(spec);
    j["stable_left"] = nlohmann::ordered_json::parse(to_json(gl, spec.alphabet()));
    j["stable_right"] = nlohmann::ordered_json::parse(to_json(gr, spec.alphabet()));
  }
  nlohmann::ordered_json wits = nlohmann::ordered_json::array();
  for (const Word& w : c.witnesses) wits.push_back(format(w, spec.alphabet()));
  j["witnesses"] = wits;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j.dump(2);
}

}  // namespace dendric
