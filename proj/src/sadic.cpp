#include "dendric/sadic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dendric {
namespace {

// Prufer decoding: sequence over [0,d) of length d-2 to edge list.
MultiClique decode_prufer(int d, const std::vector<int>& seq) {
  std::vector<int> degree(d, 1);
  for (int v : seq) ++degree[v];
  std::vector<std::vector<Letter>> edges;
  std::set<int> leaves;
  for (int v = 0; v < d; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int v : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    if (--degree[v] == 1) leaves.insert(v);
  }
  int u = *leaves.begin(), v = *std::next(leaves.begin());
  edges.push_back({u, v});
  return MultiClique::on_range(d, std::move(edges));
}

Word side_context_base(const ReturnMorphism& rm, Side side, Letter a) {
  if (side == Side::Left) return rm.morphism.image(a);
  Word u = rm.morphism.image(a);
  u.insert(u.end(), rm.word.begin(), rm.word.end());
  return u;
}

// Longest common suffix (left) or prefix (right) of the context-bearing
// words of the letters in c.
Word common_context(const ReturnMorphism& rm, Side side, const std::vector<Letter>& c) {
  Word acc = side_context_base(rm, side, c.front());
  for (size_t k = 1; k < c.size(); ++k) {
    Word u = side_context_base(rm, side, c[k]);
    size_t n = 0;
    if (side == Side::Left) {
      while (n < acc.size() && n < u.size() && acc[acc.size() - 1 - n] == u[u.size() - 1 - n]) ++n;
      acc.assign(acc.end() - n, acc.end());
    } else {
      while (n < acc.size() && n < u.size() && acc[n] == u[n]) ++n;
      acc.resize(n);
    }
  }
  return acc;
}

PartialLetterMap context_map(const ReturnMorphism& rm, Side side, const Word& s) {
  return side == Side::Left ? phi_left(rm, s) : phi_right(rm, s);
}

std::vector<Word> contexts(const ReturnMorphism& rm, Side side) {
  auto t = side == Side::Left ? tau_left(rm) : tau_right(rm);
  return {t.begin(), t.end()};
}

}  // namespace

std::vector<LabeledTree> enumerate_trees(int d) {
  if (d < 2) fail(Errc::AlphabetMismatch, "need at least two letters");
  if (d == 2) return {MultiClique::on_range(2, {{0, 1}})};
  std::vector<LabeledTree> out;
  std::vector<int> seq(d - 2, 0);
  for (;;) {
    out.push_back(decode_prufer(d, seq));
    int k = d - 3;
    while (k >= 0 && seq[k] == d - 1) seq[k--] = 0;
    if (k < 0) break;
    ++seq[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

CharGraph build_char_graph(const std::vector<ReturnMorphism>& s, Side side,
                           VertexUniverse universe) {
  if (s.empty()) fail(Errc::AlphabetMismatch, "empty morphism set");
  const Alphabet& a = s.front().morphism.domain();
  for (const auto& rm : s)
    if (!rm.morphism.is_endomorphism() || rm.morphism.domain() != a)
      fail(Errc::AlphabetMismatch, "morphisms must share one alphabet");
  int d = a.size();

  CharGraph g;
  g.side = side;
  g.universe = universe;
  if (universe == VertexUniverse::Trees) {
    g.vertices = enumerate_trees(d);
  } else {
    // All duplicate-free families of vertex subsets of size >= 2.
    std::vector<std::vector<Letter>> subsets;
    for (int mask = 0; mask < (1 << d); ++mask) {
      std::vector<Letter> sub;
      for (int v = 0; v < d; ++v)
        if (mask & (1 << v)) sub.push_back(v);
      if (sub.size() >= 2) subsets.push_back(std::move(sub));
    }
    for (long long pick = 0; pick < (1LL << subsets.size()); ++pick) {
      std::vector<std::vector<Letter>> gens;
      for (size_t k = 0; k < subsets.size(); ++k)
        if (pick & (1LL << k)) gens.push_back(subsets[k]);
      g.vertices.push_back(MultiClique::on_range(d, std::move(gens)));
    }
    std::sort(g.vertices.begin(), g.vertices.end());
  }

  std::map<MultiClique, int> index;
  for (size_t k = 0; k < g.vertices.size(); ++k) index[g.vertices[k]] = static_cast<int>(k);

  for (size_t src = 0; src < g.vertices.size(); ++src) {
    const MultiClique& source = g.vertices[src];
    for (size_t m = 0; m < s.size(); ++m) {
      if (!is_acyclic_for_coloring(source) || !is_connected(source)) continue;
      MultiClique img = image(s[m], side, source);
      auto it = index.find(img);
      if (it == index.end()) continue;
      if (!valid_triplet(side, img, s[m], source).valid) continue;
      g.edges.push_back({it->second, static_cast<int>(m), static_cast<int>(src)});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.morphism, x.to) < std::tie(y.from, y.morphism, y.to);
  });
  return g;
}

LabeledTree refine_to_trees(Side side, const MultiClique& target, const ReturnMorphism& rm,
                            const MultiClique& source, const LabeledTree& tree) {
  if (!valid_triplet(side, target, rm, source).valid)
    fail(Errc::InvalidInputTriplet, "input triplet is not valid");
  if (!is_tree(tree) || tree.vertices() != target.vertices())
    fail(Errc::InvalidInputTriplet, "covering tree expected");
  for (const auto& e : tree.generators()) {
    bool covered = false;
    for (const auto& c : target.generators())
      covered = covered || std::includes(c.begin(), c.end(), e.begin(), e.end());
    if (!covered) fail(Errc::InvalidInputTriplet, "tree does not cover the target");
  }

  auto taus = contexts(rm, side);
  MultiClique g = source;
  long long edges = g.edge_count();
  for (;;) {
    MultiClique img = image(rm, side, g);
    if (is_tree(g)) {
      if (img != tree || !valid_triplet(side, tree, rm, g).valid)
        fail(Errc::InternalMonotonicityBreach, "refinement lost validity");
      return g;
    }

    // Pick the generator to split and the context identifying it.
    int gen = -1;
    Word s;
    Letter a = -1, b = -1;
    if (!is_tree(img)) {
      // Some image generator has three or more vertices; split its source.
      for (const Word& t : taus) {
        PartialLetterMap phi = context_map(rm, side, t);
        for (size_t i = 0; i < g.generators().size() && gen < 0; ++i) {
          std::set<Letter> c;
          for (Letter d : g.generators()[i])
            if (phi.contains(d)) c.insert(phi.at(d));
          if (c.size() < 3) continue;
          gen = static_cast<int>(i);
          s = t;
          // In the covering tree restricted to c, take a leaf and its
          // neighbor; dropping the leaf's other edges keeps the cover.
          MultiClique sub = induced(tree, {c.begin(), c.end()});
          for (Letter v : c) {
            int deg = 0;
            Letter nb = -1;
            for (const auto& e : sub.generators())
              if (e[0] == v || e[1] == v) {
                ++deg;
                nb = e[0] == v ? e[1] : e[0];
              }
            if (deg == 1) {
              a = v;
              b = nb;
              break;
            }
          }
        }
        if (gen >= 0) break;
      }
    } else {
      // The image is already a tree; split a big source generator along
      // the longest common context of its letters.
      for (size_t i = 0; i < g.generators().size(); ++i)
        if (g.generators()[i].size() >= 3) {
          gen = static_cast<int>(i);
          break;
        }
      s = common_context(rm, side, g.generators()[gen]);
      PartialLetterMap phi = context_map(rm, side, s);
      std::map<Letter, int> count;
      for (Letter d : g.generators()[gen])
        if (phi.contains(d)) ++count[phi.at(d)];
      if (count.size() != 2) fail(Errc::InternalMonotonicityBreach, "split context not binary");
      for (const auto& [v, n] : count)
        if (n >= 2 && b < 0) b = v;
      for (const auto& [v, n] : count)
        if (v != b) a = v;
    }
    if (gen < 0 || a < 0 || b < 0)
      fail(Errc::InternalMonotonicityBreach, "no splitting step available");

    PartialLetterMap phi = context_map(rm, side, s);
    const std::vector<Letter>& ci = g.generators()[gen];
    Letter c = -1;
    for (Letter d : ci)
      if (phi.contains(d) && phi.at(d) == b && c < 0) c = d;
    std::vector<Letter> dpart, epart;
    for (Letter d : ci) {
      if (d == c || (phi.contains(d) && phi.at(d) == a))
        dpart.push_back(d);
      else
        epart.push_back(d);
    }
    epart.push_back(c);
    std::sort(epart.begin(), epart.end());

    std::vector<std::vector<Letter>> gens = g.generators();
    gens.erase(gens.begin() + gen);
    gens.push_back(std::move(dpart));
    gens.push_back(std::move(epart));
    g = MultiClique(g.vertices(), std::move(gens));
    if (g.edge_count() >= edges)
      fail(Errc::InternalMonotonicityBreach, "splitting did not reduce edges");
    edges = g.edge_count();
  }
}

bool path_query(const CharGraph& g, const std::vector<int>& prefix,
                const std::vector<int>& cycle) {
  if (cycle.empty()) fail(Errc::FormatError, "cycle must be nonempty");
  auto step = [&](const std::set<int>& cur, int m) {
    std::set<int> nxt;
    for (const auto& e : g.edges)
      if (e.morphism == m && cur.count(e.from)) nxt.insert(e.to);
    return nxt;
  };
  std::set<int> cur;
  for (size_t k = 0; k < g.vertices.size(); ++k) cur.insert(static_cast<int>(k));
  for (int m : prefix) cur = step(cur, m);

  // Greatest fixed point: vertices from which the cycle word can be read
  // forever.
  std::set<int> live;
  for (size_t k = 0; k < g.vertices.size(); ++k) live.insert(static_cast<int>(k));
  for (;;) {
    std::set<int> next;
    for (int v : live) {
      std::set<int> reach = {v};
      for (int m : cycle) reach = step(reach, m);
      bool ok = false;
      for (int u : reach) ok = ok || live.count(u);
      if (ok) next.insert(v);
    }
    if (next == live) break;
    live = std::move(next);
  }
  for (int v : cur)
    if (live.count(v)) return true;
  return false;
}

MultiClique relabel(const MultiClique& g, const std::vector<Letter>& perm) {
  std::vector<Letter> verts;
  for (Letter v : g.vertices()) verts.push_back(perm.at(v));
  std::sort(verts.begin(), verts.end());
  std::vector<std::vector<Letter>> gens;
  for (const auto& c : g.generators()) {
    std::vector<Letter> mapped;
    for (Letter v : c) mapped.push_back(perm.at(v));
    std::sort(mapped.begin(), mapped.end());
    gens.push_back(std::move(mapped));
  }
  return MultiClique(std::move(verts), std::move(gens));
}

QuotientGraph quotient_by_permutations(const CharGraph& left, const CharGraph& right) {
  if (left.vertices.empty() || right.vertices.empty() ||
      left.vertices.front().vertices() != right.vertices.front().vertices())
    fail(Errc::AlphabetMismatch, "both graphs must live on one alphabet");
  int d = static_cast<int>(left.vertices.front().vertices().size());
  std::vector<std::vector<Letter>> perms;
  std::vector<Letter> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  QuotientGraph q;
  std::map<std::pair<MultiClique, MultiClique>, int> classes;
  q.pair_class.assign(left.vertices.size() * right.vertices.size(), -1);
  for (size_t i = 0; i < left.vertices.size(); ++i)
    for (size_t j = 0; j < right.vertices.size(); ++j) {
      std::pair<MultiClique, MultiClique> best;
      bool first = true;
      for (const auto& pi : perms) {
        std::pair<MultiClique, MultiClique> cand = {relabel(left.vertices[i], pi),
                                                    relabel(right.vertices[j], pi)};
        if (first || cand < best) best = std::move(cand);
        first = false;
      }
      auto [it, fresh] = classes.try_emplace(best, static_cast<int>(q.representatives.size()));
      if (fresh) q.representatives.push_back(it->first);
      q.pair_class[i * right.vertices.size() + j] = it->second;
    }

  std::set<std::tuple<int, int, int>> edges;
  for (const auto& el : left.edges)
    for (const auto& er : right.edges)
      if (el.morphism == er.morphism)
        edges.insert({q.pair_class[el.from * right.vertices.size() + er.from], el.morphism,
                      q.pair_class[el.to * right.vertices.size() + er.to]});
  for (const auto& [f, m, t] : edges) q.edges.push_back({f, m, t});
  return q;
}

namespace {
std::string gens_label(const MultiClique& g) {
  Alphabet a = Alphabet::digits(static_cast<int>(g.vertices().size()));
  std::string out = "{";
  for (size_t k = 0; k < g.generators().size(); ++k) {
    if (k) out += ",";
    out += format(g.generators()[k], a);
  }
  return out + "}";
}
}  // namespace

std::string to_dot(const CharGraph& g, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph chargraph {\n";
  for (size_t k = 0; k < g.vertices.size(); ++k)
    os << "  v" << k << " [label=\"" << gens_label(g.vertices[k]) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << labels.at(e.morphism)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const CharGraph& g, const std::vector<std::string>& labels) {
  nlohmann::ordered_json j;
  j["side"] = g.side == Side::Left ? "L" : "R";
  j["universe"] = g.universe == VertexUniverse::Trees ? "trees" : "multicliques";
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back(gens_label(v));
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"from", e.from}, {"morphism", labels.at(e.morphism)}, {"to", e.to}});
  return j.dump(2);
}

std::string to_json(const QuotientGraph& q, const std::vector<std::string>& labels) {
  nlohmann::ordered_json j;
  j["classes"] = nlohmann::json::array();
  for (const auto& [l, r] : q.representatives)
    j["classes"].push_back({{"left", gens_label(l)}, {"right", gens_label(r)}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : q.edges)
    j["edges"].push_back({{"from", e.from}, {"morphism", labels.at(e.morphism)}, {"to", e.to}});
  return j.dump(2);
}

}  // namespace dendric
