#include "dendric/returns.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dendric {
namespace {

Word common_suffix(const Word& u, const Word& v) {
  size_t k = 0;
  while (k < u.size() && k < v.size() && u[u.size() - 1 - k] == v[v.size() - 1 - k]) ++k;
  return Word(u.end() - k, u.end());
}

Word common_prefix(const Word& u, const Word& v) {
  size_t k = 0;
  while (k < u.size() && k < v.size() && u[k] == v[k]) ++k;
  return Word(u.begin(), u.begin() + k);
}

Word cat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

std::vector<Letter> range_vertices(int d) {
  std::vector<Letter> v(d);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::optional<ReturnMorphism> recognize_return_morphism(const Morphism& m) {
  if (!m.is_injective_on_letters()) fail(Errc::NotInjective, "images are not distinct");
  const int d = m.domain().size();
  const int cap = 2 * m.max_image_length() + 2;
  // Any valid w is a prefix of sigma(a)^omega for every a; generate
  // candidates from the first image and let the occurrence test prune.
  Word gen;
  while (static_cast<int>(gen.size()) < cap) gen = cat(gen, m.image(0));
  std::vector<Word> valid;
  for (int len = 1; len <= cap; ++len) {
    Word w(gen.begin(), gen.begin() + len);
    bool ok = true;
    for (Letter a = 0; a < d && ok; ++a) {
      std::vector<int> occ = occurrences(w, cat(m.image(a), w));
      ok = occ.size() == 2 && occ[0] == 0 && occ[1] == static_cast<int>(m.image(a).size());
    }
    if (ok) valid.push_back(std::move(w));
  }
  if (valid.empty()) return std::nullopt;
  return ReturnMorphism{m, valid.back(), valid};
}

ReturnMorphism require_return_morphism(const Morphism& m) {
  auto rm = recognize_return_morphism(m);
  if (!rm) fail(Errc::NotReturnMorphism, "no word satisfies the two-occurrence condition");
  return *rm;
}

std::set<Word> initial_factors(const ReturnMorphism& rm) {
  std::set<Word> out;
  const int d = rm.morphism.domain().size();
  for (Letter a = 0; a < d; ++a) {
    Word t = cat(rm.morphism.image(a), rm.word);
    for (size_t i = 0; i <= t.size(); ++i)
      for (size_t len = 0; i + len <= t.size(); ++len) {
        Word f(t.begin() + i, t.begin() + i + len);
        if (occurrences(rm.word, f).empty()) out.insert(std::move(f));
      }
  }
  return out;
}

std::vector<Word> non_dendric_initial_factors(const ReturnMorphism& rm) {
  std::vector<Word> gens;
  const int d = rm.morphism.domain().size();
  for (Letter a = 0; a < d; ++a) gens.push_back(cat(rm.morphism.image(a), rm.word));
  std::vector<Word> bad;
  for (const Word& u : initial_factors(rm))
    if (!is_tree_in(gens, u)) bad.push_back(u);
  std::sort(bad.begin(), bad.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return bad;
}

bool is_dendric_return_morphism(const ReturnMorphism& rm) {
  return non_dendric_initial_factors(rm).empty();
}

std::set<Word> tau_left(const ReturnMorphism& rm) {
  std::set<Word> out;
  const int d = rm.morphism.domain().size();
  for (Letter a = 0; a < d; ++a)
    for (Letter b = a + 1; b < d; ++b)
      out.insert(common_suffix(rm.morphism.image(a), rm.morphism.image(b)));
  return out;
}

std::set<Word> tau_right(const ReturnMorphism& rm) {
  std::set<Word> out;
  const int d = rm.morphism.domain().size();
  for (Letter a = 0; a < d; ++a)
    for (Letter b = a + 1; b < d; ++b)
      out.insert(common_prefix(cat(rm.morphism.image(a), rm.word),
                               cat(rm.morphism.image(b), rm.word)));
  return out;
}

std::set<Word> tau_left(const Morphism& m) { return tau_left(require_return_morphism(m)); }
std::set<Word> tau_right(const Morphism& m) { return tau_right(require_return_morphism(m)); }

Letter PartialLetterMap::at(Letter a) const {
  auto it = map.find(a);
  if (it == map.end()) fail(Errc::LetterNotInDomain, "letter outside the partial map domain");
  return it->second;
}

std::vector<Letter> PartialLetterMap::domain() const {
  std::vector<Letter> d;
  for (const auto& [a, b] : map) d.push_back(a);
  return d;
}

PartialLetterMap phi_left(const ReturnMorphism& rm, const Word& s) {
  PartialLetterMap phi;
  const int d = rm.morphism.domain().size();
  for (Letter a = 0; a < d; ++a) {
    const Word& img = rm.morphism.image(a);
    if (img.size() > s.size() && is_suffix(s, img))
      phi.map[a] = img[img.size() - s.size() - 1];
  }
  return phi;
}

PartialLetterMap phi_right(const ReturnMorphism& rm, const Word& p) {
  PartialLetterMap phi;
  const int d = rm.morphism.domain().size();
  for (Letter a = 0; a < d; ++a) {
    Word t = cat(rm.morphism.image(a), rm.word);
    if (t.size() > p.size() && is_prefix(p, t)) phi.map[a] = t[p.size()];
  }
  return phi;
}

PartialLetterMap phi_left(const Morphism& m, const Word& s) {
  return phi_left(require_return_morphism(m), s);
}
PartialLetterMap phi_right(const Morphism& m, const Word& p) {
  return phi_right(require_return_morphism(m), p);
}

MultiClique image(const ReturnMorphism& rm, Side side, const MultiClique& g) {
  const int ddom = rm.morphism.domain().size();
  if (g.vertices() != range_vertices(ddom))
    fail(Errc::AlphabetMismatch, "graph vertices differ from the morphism domain");
  std::set<Word> contexts = side == Side::Left ? tau_left(rm) : tau_right(rm);
  std::vector<std::vector<Letter>> gens;
  for (const Word& s : contexts) {
    PartialLetterMap phi = side == Side::Left ? phi_left(rm, s) : phi_right(rm, s);
    for (const auto& c : g.generators()) {
      std::set<Letter> img;
      for (Letter a : c)
        if (phi.contains(a)) img.insert(phi.at(a));
      if (img.size() >= 2) gens.emplace_back(img.begin(), img.end());
    }
  }
  return MultiClique::on_range(rm.morphism.codomain().size(), std::move(gens));
}

MultiClique image_left(const Morphism& m, const MultiClique& g) {
  return image(require_return_morphism(m), Side::Left, g);
}
MultiClique image_right(const Morphism& m, const MultiClique& g) {
  return image(require_return_morphism(m), Side::Right, g);
}

StabilizeResult stabilize(const ReturnMorphism& rm, Side side) {
  if (!rm.morphism.is_endomorphism())
    fail(Errc::AlphabetMismatch, "stabilization needs an endomorphism");
  const int d = rm.morphism.domain().size();
  std::set<Word> contexts = side == Side::Left ? tau_left(rm) : tau_right(rm);
  StabilizeResult res;
  MultiClique g = MultiClique::complete(d);
  res.trace.push_back(g);
  std::set<MultiClique> seen{g};
  for (int step = 0;; ++step) {
    auto bail = [&](StabilizeViolation::Kind k, Word ctx) {
      res.failure = StabilizeViolation{k, std::move(ctx), step};
      res.stable = g;
      return res;
    };
    if (!is_acyclic_for_coloring(g)) return bail(StabilizeViolation::Kind::SourceNotAcyclic, {});
    if (!is_connected(g)) return bail(StabilizeViolation::Kind::SourceNotConnected, {});
    for (const Word& s : contexts) {
      PartialLetterMap phi = side == Side::Left ? phi_left(rm, s) : phi_right(rm, s);
      if (!is_connected(induced(g, phi.domain())))
        return bail(StabilizeViolation::Kind::SubgraphDisconnected, s);
    }
    MultiClique next = image(rm, side, g);
    if (!is_acyclic_for_coloring(next))
      return bail(StabilizeViolation::Kind::ImageNotAcyclic, {});
    if (!is_connected(next)) return bail(StabilizeViolation::Kind::ImageNotConnected, {});
    res.trace.push_back(next);
    if (next == g) {
      res.stable = next;
      return res;
    }
    // The iteration is a decreasing chain of subgraphs; any other repeat is
    // an internal error, and the chain cannot run forever without one.
    if (seen.count(next)) return bail(StabilizeViolation::Kind::InternalMonotonicityBreach, {});
    seen.insert(next);
    g = std::move(next);
  }
}

StabilizeResult stabilize(const Morphism& m, Side side) {
  return stabilize(require_return_morphism(m), side);
}

ExtensionGraph restricted_extension_graph(const MorphicSpec& x, const Word& v,
                                          const ReturnMorphism& rm, const Word& s,
                                          const Word& p) {
  ExtensionData ext = extensions(x, v);
  PartialLetterMap phiL = phi_left(rm, s);
  PartialLetterMap phiR = phi_right(rm, p);
  ExtensionGraph g;
  for (const auto& [a, b] : ext.bi)
    if (phiL.contains(a) && phiR.contains(b)) {
      g.edges.insert({a, b});
      g.left_vertices.insert(a);
      g.right_vertices.insert(b);
    }
  return g;
}

Antecedent antecedent(const ReturnMorphism& rm, const MorphicSpec& x, const Word& u) {
  const Word& w = rm.word;
  std::vector<int> occ = occurrences(w, u);
  if (occ.empty()) return Antecedent{true, {}, {}, {}};
  Antecedent res;
  res.s = Word(u.begin(), u.begin() + occ.front());
  res.p = Word(u.begin() + occ.back(), u.end());
  // Occurrences of w are exactly the block starts of the sigma-decomposition,
  // so consecutive gaps must be whole images.
  const int d = rm.morphism.domain().size();
  std::map<Word, Letter> decode;
  for (Letter a = 0; a < d; ++a) decode[rm.morphism.image(a)] = a;
  for (size_t i = 0; i + 1 < occ.size(); ++i) {
    Word gap(u.begin() + occ[i], u.begin() + occ[i + 1]);
    auto it = decode.find(gap);
    if (it == decode.end()) fail(Errc::NotAFactor, "gap between markers is not an image");
    res.v.push_back(it->second);
  }
  if (restricted_extension_graph(x, res.v, rm, res.s, res.p).edges.empty())
    fail(Errc::NotAFactor, "empty restricted extension set");
  return res;
}

namespace {

// Length bound on return words: every window of x of length `gap_bound`
// contains a full outer(step^m(c)) block, hence an occurrence of w.
int gap_bound(const MorphicSpec& spec, const Word& w) {
  Morphism step = spec.power() == 1 ? spec.inner() : power(spec.inner(), spec.power());
  const int d = step.domain().size();
  std::vector<Word> blocks;
  for (Letter c = 0; c < d; ++c) blocks.push_back(step.image(c));
  for (int m = 1; m <= 60; ++m) {
    bool all = true;
    int maxlen = 0;
    for (Letter c = 0; c < d; ++c) {
      Word out = spec.outer().apply(blocks[c]);
      if (occurrences(w, out).empty()) all = false;
      maxlen = std::max(maxlen, static_cast<int>(out.size()));
    }
    if (all) return 2 * maxlen;
    bool grew = false;
    for (Letter c = 0; c < d; ++c) {
      Word next = step.apply(blocks[c]);
      if (next.size() > blocks[c].size()) grew = true;
      blocks[c] = std::move(next);
    }
    if (!grew) break;  // bounded blocks: w will never fit
  }
  fail(Errc::DerivationInconclusive, "no block level contains the word");
}

}  // namespace

std::vector<Word> return_words(const MorphicSpec& spec, const Word& w) {
  if (w.empty() || !is_factor(spec, w)) fail(Errc::NotAFactor, "not a nonempty factor");
  const int g = gap_bound(spec, w);
  const int wl = static_cast<int>(w.size());
  // Complete set: r is a return word iff w.r..w is a factor in which w
  // occurs exactly as prefix and suffix; |r| <= g by the gap bound.
  std::set<Word> found;
  for (int len = wl + 1; len <= g + wl; ++len)
    for (const Word& f : factors(spec, len)) {
      if (!is_prefix(w, f) || !is_suffix(w, f)) continue;
      if (occurrences(w, f).size() != 2) continue;
      found.insert(Word(f.begin(), f.end() - wl));
    }
  // Order by first occurrence as a marker gap in the limit word; the prefix
  // certified for length g+|w| contains every f above, hence every gap.
  Word pref = spec.certified_prefix(g + wl);
  std::vector<int> occ = occurrences(w, pref);
  std::vector<Word> ordered;
  std::set<Word> seenw;
  for (size_t i = 0; i + 1 < occ.size() && ordered.size() < found.size(); ++i) {
    Word r(pref.begin() + occ[i], pref.begin() + occ[i + 1]);
    if (found.count(r) && seenw.insert(r).second) ordered.push_back(std::move(r));
  }
  if (ordered.size() != found.size())
    fail(Errc::DerivationInconclusive, "certified window misses a return word");
  return ordered;
}

namespace {

// Decodes the marker gaps of phi(r)+u lying before |phi(r)| as indices into
// the return-word list.
Word decode_blocks(const Word& img, const Word& u, const std::map<Word, Letter>& index) {
  Word t = cat(img, u);
  std::vector<int> occ = occurrences(u, t);
  const int end = static_cast<int>(img.size());
  std::vector<int> cuts;
  for (int q : occ)
    if (q <= end) cuts.push_back(q);
  if (cuts.empty() || cuts.front() != 0 || cuts.back() != end)
    fail(Errc::DerivationInconclusive, "image is not aligned on marker boundaries");
  Word code;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Word gap(t.begin() + cuts[i], t.begin() + cuts[i + 1]);
    auto it = index.find(gap);
    if (it == index.end()) fail(Errc::DerivationInconclusive, "gap is not a known return word");
    code.push_back(it->second);
  }
  return code;
}

Derivation derive_pure(const MorphicSpec& spec, const Word& u) {
  if (u.empty() || !is_prefix(u, spec.prefix(static_cast<long long>(u.size()))))
    fail(Errc::NotAPrefix, "derivation needs a nonempty prefix");
  std::vector<Word> rw = return_words(spec, u);
  const int k = static_cast<int>(rw.size());
  std::map<Word, Letter> index;
  for (Letter i = 0; i < k; ++i) index[rw[i]] = i;
  Morphism step = spec.power() == 1 ? spec.inner() : power(spec.inner(), spec.power());
  std::vector<Word> zeta;
  for (Letter i = 0; i < k; ++i) zeta.push_back(decode_blocks(step.apply(rw[i]), u, index));
  Morphism coding(Alphabet::canonical(k), spec.alphabet(), rw);
  MorphicSpec derived =
      MorphicSpec::pure(Morphism(Alphabet::canonical(k), Alphabet::canonical(k), zeta), 0);
  // Round trip: the coded derived prefix must reproduce a prefix of x.
  Word dp = derived.prefix(50);
  dp.resize(std::min<size_t>(dp.size(), 50));
  Word back = coding.apply(dp);
  if (!is_prefix(back, spec.prefix(static_cast<long long>(back.size()))))
    fail(Errc::DerivationInconclusive, "derived prefix does not code back to x");
  return Derivation{std::move(coding), std::move(derived)};
}

// For a coded spec, sequences derived with respect to a valid word w of some
// psi_j = outer . step^j are relabelings of the inner fixed point: the
// blocks psi_j(a) start exactly at the occurrences of w.
struct CodedEntry {
  Morphism coding;      // theta_0 : {1..d} -> A*, i -> psi(nu^-1(i))
  MorphicSpec derived;  // nu . step . nu^-1
  Word word;            // the recognized w
};

std::optional<CodedEntry> coded_entry_at(const MorphicSpec& spec, int j,
                                         const std::optional<Word>& wanted) {
  Morphism step = spec.power() == 1 ? spec.inner() : power(spec.inner(), spec.power());
  Morphism psi = j == 0 ? spec.outer() : compose(spec.outer(), power(step, j));
  if (!psi.is_injective_on_letters()) return std::nullopt;
  auto rm = recognize_return_morphism(psi);
  if (!rm) return std::nullopt;
  Word w = rm->word;
  if (wanted) {
    if (std::find(rm->valid_words.begin(), rm->valid_words.end(), *wanted) ==
        rm->valid_words.end())
      return std::nullopt;
    w = *wanted;
  }
  if (!is_prefix(w, spec.prefix(static_cast<long long>(w.size())))) return std::nullopt;
  // First-occurrence relabeling of the inner fixed point.
  const int d = step.domain().size();
  MorphicSpec y = MorphicSpec::pure(spec.inner(), spec.seed());
  std::vector<Letter> nu(d, -1);
  Letter next = 0;
  for (long long len = 64; next < d; len *= 2) {
    Word yp = y.prefix(len);
    for (Letter c : yp)
      if (nu[c] < 0) nu[c] = next++;
    if (len > (1LL << 40)) fail(Errc::DerivationInconclusive, "letter missing from fixed point");
  }
  std::vector<Letter> inv(d);
  for (Letter c = 0; c < d; ++c) inv[nu[c]] = c;
  std::vector<Word> theta0(d), zeta(d);
  for (Letter i = 0; i < d; ++i) {
    theta0[i] = psi.image(inv[i]);
    for (Letter c : step.image(inv[i])) zeta[i].push_back(nu[c]);
  }
  Morphism coding(Alphabet::canonical(d), psi.codomain(), theta0);
  MorphicSpec derived =
      MorphicSpec::pure(Morphism(Alphabet::canonical(d), Alphabet::canonical(d), zeta), 0);
  return CodedEntry{std::move(coding), std::move(derived), std::move(w)};
}

constexpr int kChainBudget = 64;

}  // namespace

Derivation derive(const MorphicSpec& spec, const Word& u) {
  if (spec.is_pure()) return derive_pure(spec, u);
  if (u.empty() || !is_prefix(u, spec.prefix(static_cast<long long>(u.size()))))
    fail(Errc::NotAPrefix, "derivation needs a nonempty prefix");
  for (int j = 0; j <= kChainBudget; ++j)
    if (auto entry = coded_entry_at(spec, j, u))
      return Derivation{std::move(entry->coding), std::move(entry->derived)};
  fail(Errc::DerivationInconclusive, "no composed level is a return morphism for this prefix");
}

ReturnRepresentation return_representation(const MorphicSpec& spec) {
  std::vector<Morphism> chain;          // chain[i] = theta_i
  std::vector<MorphicSpec> levels;      // levels[i] = level i+1, canonical
  if (spec.is_pure()) {
    Derivation d0 = derive_pure(spec, Word{spec.seed()});
    chain.push_back(d0.coding);
    levels.push_back(d0.derived);
  } else {
    std::optional<CodedEntry> entry;
    for (int j = 0; j <= kChainBudget && !entry; ++j) entry = coded_entry_at(spec, j, std::nullopt);
    if (!entry)
      fail(Errc::DerivationInconclusive, "no composed level is a return morphism");
    chain.push_back(entry->coding);
    levels.push_back(entry->derived);
  }
  auto same_level = [](const MorphicSpec& a, const MorphicSpec& b) {
    return a.inner() == b.inner() && a.seed() == b.seed();
  };
  int m = -1, n = -1;
  while (static_cast<int>(levels.size()) < kChainBudget) {
    const MorphicSpec& z = levels.back();
    for (size_t i = 0; i + 1 < levels.size(); ++i)
      if (same_level(levels[i], z)) {
        m = static_cast<int>(i) + 1;
        n = static_cast<int>(levels.size());
        break;
      }
    if (m >= 0) break;
    Derivation d = derive_pure(z, Word{0});
    chain.push_back(d.coding);
    levels.push_back(d.derived);
  }
  if (m < 0) fail(Errc::ChainBudgetExceeded, "no derived level repeated within the budget");

  Morphism lam = chain[0];
  for (int i = 1; i < m; ++i) lam = compose(lam, chain[i]);
  Morphism the = chain[m];
  for (int i = m + 1; i < n; ++i) the = compose(the, chain[i]);

  if (!is_primitive(the)) fail(Errc::NotPrimitive, "cycle morphism is not primitive");
  if (the.image(0).empty() || the.image(0)[0] != 0)
    fail(Errc::NotProlongable, "cycle morphism does not fix its first letter");
  Word cur{0};
  for (int it = 0; it < 40 && lam.apply(cur).size() < 2000; ++it) cur = the.apply(cur);
  Word p = lam.apply(cur);
  if (!is_prefix(p, spec.prefix(static_cast<long long>(p.size()))))
    fail(Errc::DerivationInconclusive, "representation does not reproduce a prefix of x");
  return ReturnRepresentation{require_return_morphism(lam), require_return_morphism(the),
                              std::move(chain), m, n - m,
                              static_cast<long long>(p.size())};
}

}  // namespace dendric

