#include "dendric/language.hpp"

#include <algorithm>

namespace dendric {

namespace {
constexpr long long kPrefixCap = 200'000'000;
}

// Shared per-spec language cache.  All factor queries reduce to the exact
// two-letter factor set of the inner fixed point y: once every inner block
// sigma^(pJ)(c) maps under outer to a word of length >= n, the length-n
// factors of x are exactly the length-n factors of the words
// outer(sigma^(pJ)(ab)) over the two-letter factors ab of y (a length-n
// factor of x fits inside the image of at most two adjacent level-pJ
// blocks).
struct MorphicSpec::Cache {
  std::mutex mu;
  Morphism step;   // inner^power
  Morphism outer;  // codomain morphism
  Letter seed;

  std::set<Word> pairs;          // exact two-letter factors of y
  std::vector<Word> blocks;      // sigma^(pJ)(c) per letter, shared level J
  std::map<int, std::set<Word>> factors_x;
  Word y_prefix;
  Word x_prefix;
  std::map<int, long long> certified_len;  // n -> x-prefix length covering F_n

  Cache(Morphism step_, Morphism outer_, Letter seed_)
      : step(std::move(step_)), outer(std::move(outer_)), seed(seed_) {
    const Alphabet& b = step.domain();
    for (Letter c = 0; c < b.size(); ++c) blocks.push_back({c});
    y_prefix = {seed};
    x_prefix = outer.apply(y_prefix);
  }

  void compute_pairs() {
    if (!pairs.empty()) return;
    Word w = {seed};
    while (w.size() < 2) w = step.apply(w);
    std::set<Word> p = factors_of(w, 2);
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<Word> add;
      for (const Word& v : p) {
        for (const Word& f : factors_of(step.apply(v), 2))
          if (!p.count(f)) add.insert(f);
      }
      if (!add.empty()) {
        p.insert(add.begin(), add.end());
        changed = true;
      }
    }
    pairs = std::move(p);
  }

  long long outer_block_length(const Word& block) const {
    long long n = 0;
    for (Letter c : block) n += static_cast<long long>(outer.image(c).size());
    return n;
  }

  void grow_blocks_to(long long n) {
    auto min_len = [&] {
      long long m = -1;
      for (const Word& b : blocks) {
        long long l = outer_block_length(b);
        if (m < 0 || l < m) m = l;
      }
      return m;
    };
    while (min_len() < n) {
      for (Word& b : blocks) {
        b = step.apply(b);
        if (static_cast<long long>(b.size()) > kPrefixCap)
          fail(Errc::FormatError, "language cache block cap exceeded");
      }
    }
  }

  const std::set<Word>& factors_n(int n) {
    auto it = factors_x.find(n);
    if (it != factors_x.end()) return it->second;
    std::set<Word> out;
    if (n == 0) {
      out.insert(Word{});
    } else {
      compute_pairs();
      grow_blocks_to(n);
      for (const Word& ab : pairs) {
        Word img;
        for (Letter c : ab) {
          Word part = outer.apply(blocks[c]);
          img.insert(img.end(), part.begin(), part.end());
        }
        auto f = factors_of(img, n);
        out.insert(f.begin(), f.end());
      }
    }
    return factors_x.emplace(n, std::move(out)).first->second;
  }

  void grow_prefix() {
    y_prefix = step.apply(y_prefix);
    if (static_cast<long long>(y_prefix.size()) > kPrefixCap)
      fail(Errc::FormatError, "language cache prefix cap exceeded");
    x_prefix = outer.apply(y_prefix);
  }

  long long certify_prefix(int n) {
    auto it = certified_len.find(n);
    if (it != certified_len.end()) return it->second;
    const std::set<Word>& want = factors_n(n);
    while (true) {
      std::set<Word> have = factors_of(x_prefix, n);
      if (std::includes(have.begin(), have.end(), want.begin(), want.end())) break;
      grow_prefix();
    }
    long long len = static_cast<long long>(x_prefix.size());
    certified_len[n] = len;
    return len;
  }
};

MorphicSpec::MorphicSpec(Morphism inner, Morphism outer, Letter seed)
    : inner_(std::move(inner)), outer_(std::move(outer)), seed_(seed) {
  if (!inner_.is_endomorphism())
    fail(Errc::NotEndomorphism, "spec: inner morphism must be an endomorphism");
  if (outer_.domain() != inner_.domain())
    fail(Errc::AlphabetMismatch, "spec: outer domain must equal inner domain");
  if (!inner_.domain().contains(seed_)) fail(Errc::LetterNotInDomain, "spec: bad seed letter");
  if (!is_primitive(inner_)) fail(Errc::NotPrimitive, "spec: inner morphism must be primitive");
  // Minimal k with sigma^k(seed) starting with seed.
  const int d = inner_.domain().size();
  Letter cur = seed_;
  power_ = 0;
  for (int k = 1; k <= d; ++k) {
    cur = inner_.image(cur).front();
    if (cur == seed_) {
      power_ = k;
      break;
    }
  }
  if (power_ == 0)
    fail(Errc::NotProlongable, "spec: no inner power is prolongable on the seed");
  cache_ = std::make_shared<Cache>(dendric::power(inner_, power_), outer_, seed_);
}

MorphicSpec MorphicSpec::pure(Morphism inner, Letter seed) {
  Alphabet a = inner.domain();
  return MorphicSpec(std::move(inner), Morphism::identity(a), seed);
}

Word MorphicSpec::certified_prefix(int n) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  long long len = cache_->certify_prefix(n);
  return Word(cache_->x_prefix.begin(), cache_->x_prefix.begin() + len);
}

Word MorphicSpec::prefix(long long len) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  while (static_cast<long long>(cache_->x_prefix.size()) < len) cache_->grow_prefix();
  return Word(cache_->x_prefix.begin(), cache_->x_prefix.begin() + len);
}

std::set<Word> MorphicSpec::factor_set(int n) const {
  if (n < 0) fail(Errc::FormatError, "factor length must be >= 0");
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->factors_n(n);
}

std::set<Word> factors(const MorphicSpec& spec, int n) { return spec.factor_set(n); }

long long complexity(const MorphicSpec& spec, int n) {
  return static_cast<long long>(factors(spec, n).size());
}

bool is_factor(const MorphicSpec& spec, const Word& w) {
  return factors(spec, static_cast<int>(w.size())).count(w) > 0;
}

ExtensionData extensions(const MorphicSpec& spec, const Word& w) {
  if (!is_factor(spec, w)) fail(Errc::NotAFactor, "extensions: word is not in the language");
  const int n = static_cast<int>(w.size());
  ExtensionData data;
  data.word = w;
  for (const Word& f : factors(spec, n + 2)) {
    if (std::equal(w.begin(), w.end(), f.begin() + 1))
      data.bi.emplace(f.front(), f.back());
  }
  for (const Word& f : factors(spec, n + 1)) {
    if (std::equal(w.begin(), w.end(), f.begin() + 1)) data.left.insert(f.front());
    if (std::equal(w.begin(), w.end(), f.begin())) data.right.insert(f.back());
  }
  return data;
}

ExtensionGraph graph_from_extensions(const ExtensionData& data) {
  ExtensionGraph g;
  g.left_vertices = data.left;
  g.right_vertices = data.right;
  g.edges = data.bi;
  return g;
}

ExtensionGraph extension_graph(const MorphicSpec& spec, const Word& w) {
  return graph_from_extensions(extensions(spec, w));
}

namespace {

// Components of the bipartite graph; left vertices are encoded as 2a,
// right vertices as 2b+1.
int component_count(const ExtensionGraph& g, int* vertex_count) {
  std::map<int, int> comp;
  int next = 0;
  for (Letter a : g.left_vertices) comp[2 * a] = next++;
  for (Letter b : g.right_vertices) comp[2 * b + 1] = next++;
  *vertex_count = next;
  // Union-find.
  std::vector<int> parent(next);
  for (int i = 0; i < next; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : g.edges) {
    int u = find(comp.at(2 * a)), v = find(comp.at(2 * b + 1));
    if (u != v) parent[u] = v;
  }
  std::set<int> roots;
  for (int i = 0; i < next; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

}  // namespace

bool is_connected(const ExtensionGraph& g) {
  int n = 0;
  int c = component_count(g, &n);
  return n == 0 || c == 1;
}

bool is_acyclic(const ExtensionGraph& g) {
  int n = 0;
  int c = component_count(g, &n);
  return static_cast<int>(g.edges.size()) == n - c;
}

bool is_tree(const ExtensionGraph& g) {
  int n = 0;
  int c = component_count(g, &n);
  return n > 0 && c == 1 && static_cast<int>(g.edges.size()) == n - 1;
}

bool is_ordinary(const MorphicSpec& spec, const Word& w) {
  ExtensionData data = extensions(spec, w);
  for (auto [a, b] : data.bi) {
    bool ok = true;
    for (auto [x, y] : data.bi)
      if (x != a && y != b) ok = false;
    if (ok) return true;
  }
  return false;
}

std::vector<Word> dendric_up_to(const MorphicSpec& spec, int n) {
  std::vector<Word> bad;
  for (int len = 0; len < n; ++len)
    for (const Word& w : factors(spec, len))
      if (!is_tree(extension_graph(spec, w))) bad.push_back(w);
  return bad;
}

PeriodicityResult periodicity_probe(const MorphicSpec& spec, int cap) {
  PeriodicityResult r;
  r.cap = cap;
  long long prev = complexity(spec, 1);
  for (int n = 1; n <= cap; ++n) {
    long long next = complexity(spec, n + 1);
    if (next == prev) {
      r.periodic = true;
      r.period = static_cast<int>(prev);
      return r;
    }
    prev = next;
  }
  return r;
}

ExtensionData extensions_in(const std::vector<Word>& generators, const Word& u) {
  ExtensionData data;
  data.word = u;
  for (const Word& g : generators) {
    for (int i : occurrences(u, g)) {
      int end = i + static_cast<int>(u.size());
      if (i > 0) data.left.insert(g[i - 1]);
      if (end < static_cast<int>(g.size())) data.right.insert(g[end]);
      if (i > 0 && end < static_cast<int>(g.size()))
        data.bi.emplace(g[i - 1], g[end]);
    }
  }
  return data;
}

bool is_tree_in(const std::vector<Word>& generators, const Word& u) {
  return is_tree(graph_from_extensions(extensions_in(generators, u)));
}

}  // namespace dendric
