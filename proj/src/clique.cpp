#include "dendric/clique.hpp"

#include <algorithm>
#include <sstream>

namespace dendric {

MultiClique::MultiClique(std::vector<Letter> vertices,
                         std::vector<std::vector<Letter>> generators)
    : vertices_(std::move(vertices)), generators_(std::move(generators)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::vector<std::vector<Letter>> kept;
  for (auto& g : generators_) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    for (Letter v : g)
      if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
        fail(Errc::ForeignVertex, "generator uses a vertex outside the declared set");
    if (g.size() >= 2) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  generators_ = std::move(kept);
}

MultiClique MultiClique::complete(int d) {
  std::vector<Letter> vs(d);
  for (int i = 0; i < d; ++i) vs[i] = i;
  std::vector<std::vector<Letter>> gens;
  if (d >= 2) gens.push_back(vs);
  return MultiClique(std::move(vs), std::move(gens));
}

MultiClique MultiClique::on_range(int d, std::vector<std::vector<Letter>> generators) {
  std::vector<Letter> vs(d);
  for (int i = 0; i < d; ++i) vs[i] = i;
  return MultiClique(std::move(vs), std::move(generators));
}

bool MultiClique::has_vertex(Letter v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

long long MultiClique::edge_count() const {
  long long n = 0;
  for (const auto& g : generators_) {
    long long k = static_cast<long long>(g.size());
    n += k * (k - 1) / 2;
  }
  return n;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  // Returns false if already joined.
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_acyclic_for_coloring(const MultiClique& g) {
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      std::vector<Letter> inter;
      std::set_intersection(gens[i].begin(), gens[i].end(), gens[j].begin(), gens[j].end(),
                            std::back_inserter(inter));
      if (inter.size() >= 2) return false;
    }
  // Vertex-generator incidence graph must be a forest.
  std::map<Letter, int> vid;
  for (Letter v : g.vertices()) vid.emplace(v, static_cast<int>(vid.size()));
  UnionFind uf(static_cast<int>(vid.size() + gens.size()));
  for (size_t i = 0; i < gens.size(); ++i)
    for (Letter v : gens[i])
      if (!uf.join(vid.at(v), static_cast<int>(vid.size() + i))) return false;
  return true;
}

bool is_connected(const MultiClique& g) {
  if (g.vertices().size() <= 1) return true;
  std::map<Letter, int> vid;
  for (Letter v : g.vertices()) vid.emplace(v, static_cast<int>(vid.size()));
  UnionFind uf(static_cast<int>(vid.size()));
  for (const auto& gen : g.generators())
    for (size_t i = 1; i < gen.size(); ++i) uf.join(vid.at(gen[0]), vid.at(gen[i]));
  int root = uf.find(0);
  for (int i = 1; i < static_cast<int>(vid.size()); ++i)
    if (uf.find(i) != root) return false;
  return true;
}

bool is_tree(const MultiClique& g) {
  for (const auto& gen : g.generators())
    if (gen.size() != 2) return false;
  return is_connected(g) && is_acyclic_for_coloring(g);
}

MultiClique induced(const MultiClique& g, const std::vector<Letter>& s) {
  std::vector<Letter> vs(s);
  std::sort(vs.begin(), vs.end());
  std::vector<std::vector<Letter>> gens;
  for (const auto& gen : g.generators()) {
    std::vector<Letter> inter;
    std::set_intersection(gen.begin(), gen.end(), vs.begin(), vs.end(),
                          std::back_inserter(inter));
    if (inter.size() >= 2) gens.push_back(std::move(inter));
  }
  return MultiClique(std::move(vs), std::move(gens));
}

bool is_acyclic_for_coloring_bruteforce(const MultiClique& g) {
  // Expand generators into colored edges.
  struct Edge {
    Letter a, b;
    int color;
  };
  std::vector<Edge> edges;
  const auto& gens = g.generators();
  for (size_t c = 0; c < gens.size(); ++c)
    for (size_t i = 0; i < gens[c].size(); ++i)
      for (size_t j = i + 1; j < gens[c].size(); ++j)
        edges.push_back({gens[c][i], gens[c][j], static_cast<int>(c)});
  // DFS over simple cycles: walk edge-disjoint, vertex-simple paths and
  // report a bichromatic cycle when the start vertex is re-entered.
  const int m = static_cast<int>(edges.size());
  for (int first = 0; first < m; ++first) {
    // Path state: vertices visited, edges used, colors used.
    struct Frame {
      Letter at;
      std::vector<int> used;
      std::set<Letter> visited;
      std::set<int> colors;
    };
    Letter start = edges[first].a;
    std::vector<Frame> stack;
    stack.push_back({edges[first].b, {first}, {edges[first].a, edges[first].b},
                     {edges[first].color}});
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      for (int e = 0; e < m; ++e) {
        if (std::find(f.used.begin(), f.used.end(), e) != f.used.end()) continue;
        Letter to;
        if (edges[e].a == f.at)
          to = edges[e].b;
        else if (edges[e].b == f.at)
          to = edges[e].a;
        else
          continue;
        std::set<int> colors = f.colors;
        colors.insert(edges[e].color);
        if (to == start) {
          if (f.used.size() >= 1 && colors.size() >= 2) return false;
          // A 2-cycle needs two parallel edges of different colors; a
          // monochromatic simple cycle is fine.
          continue;
        }
        if (f.visited.count(to)) continue;
        Frame next;
        next.at = to;
        next.used = f.used;
        next.used.push_back(e);
        next.visited = f.visited;
        next.visited.insert(to);
        next.colors = std::move(colors);
        stack.push_back(std::move(next));
      }
    }
  }
  return true;
}

MultiClique side_graph(const MorphicSpec& spec, Side side, int n) {
  std::vector<std::vector<Letter>> gens;
  for (const Word& w : factors(spec, n)) {
    ExtensionData e = extensions(spec, w);
    const std::set<Letter>& ext = (side == Side::Left) ? e.left : e.right;
    if (ext.size() >= 2) gens.emplace_back(ext.begin(), ext.end());
  }
  return MultiClique::on_range(spec.alphabet().size(), std::move(gens));
}

std::string to_dot(const MultiClique& g, const Alphabet& a) {
  std::ostringstream os;
  os << "graph multiclique {\n";
  for (Letter v : g.vertices()) os << "  v" << v << " [label=\"" << a.symbol(v) << "\"];\n";
  const auto& gens = g.generators();
  for (size_t c = 0; c < gens.size(); ++c)
    for (size_t i = 0; i < gens[c].size(); ++i)
      for (size_t j = i + 1; j < gens[c].size(); ++j)
        os << "  v" << gens[c][i] << " -- v" << gens[c][j] << " [color=" << c << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const MultiClique& g, const Alphabet& a) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  bool first = true;
  for (Letter v : g.vertices()) {
    if (!first) os << ",";
    first = false;
    os << "\"" << a.symbol(v) << "\"";
  }
  os << "],\"generators\":[";
  first = true;
  for (const auto& gen : g.generators()) {
    if (!first) os << ",";
    first = false;
    os << "[";
    for (size_t i = 0; i < gen.size(); ++i) {
      if (i) os << ",";
      os << "\"" << a.symbol(gen[i]) << "\"";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace dendric
