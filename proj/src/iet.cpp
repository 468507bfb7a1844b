#include "dendric/iet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dendric {

TotalOrder TotalOrder::from_sequence(const std::vector<Letter>& seq) {
  TotalOrder o;
  o.rank.assign(seq.size(), -1);
  for (size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] < 0 || seq[k] >= static_cast<int>(seq.size()) || o.rank[seq[k]] >= 0)
      fail(Errc::FormatError, "order sequence is not a permutation");
    o.rank[seq[k]] = static_cast<int>(k);
  }
  return o;
}

std::vector<Letter> TotalOrder::sequence() const {
  std::vector<Letter> seq(rank.size());
  for (Letter a = 0; a < size(); ++a) seq[rank[a]] = a;
  return seq;
}

TotalOrder TotalOrder::reversed() const {
  TotalOrder o = *this;
  for (int& r : o.rank) r = size() - 1 - r;
  return o;
}

bool is_normalized(const OrderPair& p) { return p.left.less(0, 1); }

OrderPair normalized(const OrderPair& p) {
  if (is_normalized(p)) return p;
  return {p.left.reversed(), p.right.reversed()};
}

bool is_irreducible(const OrderPair& p) {
  int d = p.left.size();
  std::vector<Letter> l = p.left.sequence(), r = p.right.sequence();
  std::set<Letter> bl, br;
  for (int k = 0; k + 1 < d; ++k) {
    bl.insert(l[k]);
    br.insert(r[k]);
    if (bl == br) return false;
  }
  return true;
}

bool planar(const ExtensionData& data, const OrderPair& p) {
  for (const auto& [a1, b1] : data.bi)
    for (const auto& [a2, b2] : data.bi)
      if (p.left.less(a1, a2) && p.right.less(b2, b1)) return false;
  return true;
}

bool factor_planar(const MorphicSpec& spec, const Word& w, const OrderPair& p) {
  if (!is_factor(spec, w)) fail(Errc::NotAFactor, "word is not in the language");
  return planar(extensions(spec, w), p);
}

bool morphism_planar(const ReturnMorphism& rm, const OrderPair& p) {
  std::vector<Word> gens;
  for (Letter a = 0; a < rm.morphism.domain().size(); ++a) {
    Word t = rm.morphism.image(a);
    t.insert(t.end(), rm.word.begin(), rm.word.end());
    gens.push_back(std::move(t));
  }
  for (const Word& u : initial_factors(rm))
    if (!planar(extensions_in(gens, u), p)) return false;
  return true;
}

TotalOrder transfer_order(Side side, const ReturnMorphism& rm, const TotalOrder& target) {
  int d = rm.morphism.domain().size();
  if (target.size() != rm.morphism.codomain().size())
    fail(Errc::AlphabetMismatch, "target order must live on the codomain");
  std::vector<Word> ctx(d);
  for (Letter a = 0; a < d; ++a) {
    ctx[a] = rm.morphism.image(a);
    if (side == Side::Right) ctx[a].insert(ctx[a].end(), rm.word.begin(), rm.word.end());
  }
  auto cmp = [&](Letter x, Letter y) {
    const Word& u = ctx[x];
    const Word& v = ctx[y];
    // The context words form a prefix (resp. suffix) code, so the first
    // mismatch from the aligned end always exists.
    size_t n = std::min(u.size(), v.size());
    for (size_t k = 0; k < n; ++k) {
      Letter cu = side == Side::Right ? u[k] : u[u.size() - 1 - k];
      Letter cv = side == Side::Right ? v[k] : v[v.size() - 1 - k];
      if (cu != cv) return target.less(cu, cv);
    }
    fail(Errc::InternalMonotonicityBreach, "context words are not a code");
  };
  std::vector<Letter> seq(d);
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(), cmp);
  return TotalOrder::from_sequence(seq);
}

MultiClique line_graph(const TotalOrder& o) {
  std::vector<Letter> seq = o.sequence();
  std::vector<std::vector<Letter>> gens;
  for (size_t k = 0; k + 1 < seq.size(); ++k)
    gens.push_back({std::min(seq[k], seq[k + 1]), std::max(seq[k], seq[k + 1])});
  return MultiClique::on_range(o.size(), std::move(gens));
}

bool iet_edge(const ReturnMorphism& rm, const OrderPair& from, const OrderPair& to) {
  if (!is_normalized(from) || !is_irreducible(from)) return false;
  if (!is_normalized(to) || !is_irreducible(to)) return false;
  if (!valid_triplet(Side::Left, line_graph(from.left), rm, line_graph(to.left)).valid)
    return false;
  if (!valid_triplet(Side::Right, line_graph(from.right), rm, line_graph(to.right)).valid)
    return false;
  if (!morphism_planar(rm, from)) return false;
  OrderPair t = {transfer_order(Side::Left, rm, from.left),
                 transfer_order(Side::Right, rm, from.right)};
  return to == t || to == OrderPair{t.left.reversed(), t.right.reversed()};
}

namespace {

std::vector<OrderPair> normalized_irreducible_pairs(int d) {
  std::vector<TotalOrder> orders;
  std::vector<Letter> seq(d);
  std::iota(seq.begin(), seq.end(), 0);
  do {
    orders.push_back(TotalOrder::from_sequence(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  std::vector<OrderPair> out;
  for (const auto& l : orders)
    for (const auto& r : orders) {
      OrderPair p = {l, r};
      if (is_normalized(p) && is_irreducible(p)) out.push_back(std::move(p));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Deterministic successor: transfer both orders and renormalize; nullopt
// when the step is not an edge.
std::optional<OrderPair> successor(const ReturnMorphism& rm, const OrderPair& from) {
  OrderPair t = normalized({transfer_order(Side::Left, rm, from.left),
                            transfer_order(Side::Right, rm, from.right)});
  if (!iet_edge(rm, from, t)) return std::nullopt;
  return t;
}

}  // namespace

std::optional<OrderPair> decide_iet(const MorphicSpec& spec, const Classification& evidence) {
  if (evidence.verdict != Verdict::Dendric)
    fail(Errc::NotDendricInput, "interval exchange coding requires a dendric shift");
  const ReturnMorphism& lambda = evidence.rep->lambda;
  const ReturnMorphism& theta = evidence.rep->theta;
  for (const OrderPair& start : normalized_irreducible_pairs(spec.alphabet().size())) {
    std::optional<OrderPair> cur = successor(lambda, start);
    std::set<OrderPair> seen;
    while (cur && !seen.count(*cur)) {
      seen.insert(*cur);
      cur = successor(theta, *cur);
    }
    if (cur) return start;  // the walk closed a cycle of valid edges
  }
  return std::nullopt;
}

std::optional<OrderPair> decide_iet(const MorphicSpec& spec) {
  return decide_iet(spec, classify(spec));
}

IetGraph build_iet_graph(const std::vector<ReturnMorphism>& s) {
  if (s.empty()) fail(Errc::AlphabetMismatch, "empty morphism set");
  const Alphabet& a = s.front().morphism.domain();
  for (const auto& rm : s)
    if (!rm.morphism.is_endomorphism() || rm.morphism.domain() != a)
      fail(Errc::AlphabetMismatch, "morphisms must share one alphabet");
  IetGraph g;
  g.vertices = normalized_irreducible_pairs(a.size());
  std::map<OrderPair, int> index;
  for (size_t k = 0; k < g.vertices.size(); ++k) index[g.vertices[k]] = static_cast<int>(k);
  for (size_t from = 0; from < g.vertices.size(); ++from)
    for (size_t m = 0; m < s.size(); ++m)
      if (auto to = successor(s[m], g.vertices[from]))
        g.edges.push_back({static_cast<int>(from), static_cast<int>(m), index.at(*to)});
  return g;
}

IetQuotient quotient_by_permutations(const IetGraph& g) {
  IetQuotient q;
  q.vertex_class.assign(g.vertices.size(), -1);
  if (g.vertices.empty()) return q;
  int d = g.vertices.front().left.size();
  std::vector<std::vector<Letter>> perms;
  std::vector<Letter> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto relabel_order = [&](const TotalOrder& o, const std::vector<Letter>& pi) {
    TotalOrder r;
    r.rank.assign(d, 0);
    for (Letter a = 0; a < d; ++a) r.rank[pi[a]] = o.rank[a];
    return r;
  };
  std::map<OrderPair, int> classes;
  for (size_t k = 0; k < g.vertices.size(); ++k) {
    OrderPair best = g.vertices[k];
    for (const auto& pi : perms) {
      OrderPair cand = normalized(
          {relabel_order(g.vertices[k].left, pi), relabel_order(g.vertices[k].right, pi)});
      if (cand < best) best = std::move(cand);
    }
    auto [it, fresh] = classes.try_emplace(best, static_cast<int>(classes.size()));
    q.vertex_class[k] = it->second;
  }
  q.classes = static_cast<int>(classes.size());
  return q;
}

std::string order_text(const TotalOrder& o, const Alphabet& a) {
  std::string out;
  for (Letter x : o.sequence()) {
    if (!out.empty()) out += "<";
    out += a.symbol(x);
  }
  return out;
}

std::string to_dot(const IetGraph& g, const Alphabet& a, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph ietgraph {\n";
  for (size_t k = 0; k < g.vertices.size(); ++k)
    os << "  v" << k << " [label=\"" << order_text(g.vertices[k].left, a) << " | "
       << order_text(g.vertices[k].right, a) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << labels.at(e.morphism)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace dendric
