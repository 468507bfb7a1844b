// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "dendric/iet.hpp"
#include "dendric/io.hpp"

using namespace dendric;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
  if (!ok) ++failures;
}

std::string fixture(const std::string& name) {
  return std::string(DENDRIC_FIXTURES) + "/" + name;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(DENDRIC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

ReturnMorphism rm_of(std::vector<Word> images) {
  int d = static_cast<int>(images.size());
  Alphabet a = Alphabet::digits(d);
  return require_return_morphism(Morphism(a, a, std::move(images)));
}

using Pairs = std::set<std::pair<Letter, Letter>>;

void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  MorphicSpec fib = load_spec(fixture("fibonacci.toml"));
  bool ok = run_cli("factors " + fixture("fibonacci.toml") + " -n 3").output ==
            "001\n010\n100\n101\n";
  ok = ok && extensions(fib, {}).bi == Pairs{{0, 0}, {0, 1}, {1, 0}};
  ok = ok && extensions(fib, {0}).bi == Pairs{{0, 1}, {1, 0}, {1, 1}};
  ok = ok && extensions(fib, {1}).bi == Pairs{{0, 0}};
  ok = ok && run_cli("decide " + fixture("fibonacci.toml")).exit_code == 0;
  ok = ok && run_cli("threshold " + fixture("fibonacci.toml")).output == "0\n";
  for (int n = 0; n <= 30; ++n) ok = ok && complexity(fib, n) == n + 1;
  CliResult iet = run_cli("iet decide " + fixture("fibonacci.toml"));
  ok = ok && iet.exit_code == 0 && iet.output != "none\n" && lines_of(iet.output).size() == 2;
  auto elapsed = std::chrono::steady_clock::now() - start;
  ok = ok && elapsed < std::chrono::seconds(5);
  report(1, ok, "Fibonacci factors, extension graphs, decisions, complexity");
}

void criterion_2() {
  MorphicSpec tm = load_spec(fixture("thue_morse.toml"));
  std::vector<std::vector<Letter>> e = {{0, 1}};
  bool ok = left_graph(tm, 0) == MultiClique::on_range(2, {{0, 1}});
  ok = ok && left_graph(tm, 1) == MultiClique::on_range(2, {{0, 1}, {0, 1}});
  ok = ok && left_graph(tm, 2) == MultiClique::on_range(2, {{0, 1}, {0, 1}});
  ok = ok && left_graph(tm, 3) == MultiClique::on_range(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  ok = ok && run_cli("decide " + fixture("thue_morse.toml")).exit_code == 3;
  ok = ok && classify(tm).verdict == Verdict::NotEventuallyDendric;
  report(2, ok, "Thue-Morse left graphs and verdict");
}

void criterion_3() {
  MorphicSpec ch = load_spec(fixture("chacon.toml"));
  bool ok = true;
  for (int n = 1; n <= 20; ++n) ok = ok && complexity(ch, n) == 2 * n + 1;
  for (int n = 1; n <= 8; ++n)
    ok = ok && left_graph(ch, n) == MultiClique::on_range(3, {{0, 2}, {0, 2}});
  ok = ok && classify(ch).verdict == Verdict::NotEventuallyDendric;
  report(3, ok, "Chacon complexity, left graphs, verdict");
}

void criterion_4() {
  MorphicSpec ims = load_spec(fixture("image_sturmian.toml"));
  CliResult check = run_cli("check-dendric " + fixture("image_sturmian.toml") + " --up-to 8");
  bool ok = check.output == "(empty)\n1\n";
  Classification c = classify(ims);
  ok = ok && c.verdict == Verdict::EventuallyDendric && c.threshold == 2;
  auto [gl, gr] = stabilized_graphs(ims);
  ok = ok && gl == MultiClique::on_range(2, {{0, 1}}) && gr == MultiClique::on_range(2, {{0, 1}});
  report(4, ok, "image-of-Sturmian witnesses, threshold 2, stable graphs");
}

void criterion_5() {
  Morphism beta = load_morphism(fixture("beta.txt"));
  auto rm = recognize_return_morphism(beta);
  bool ok = rm.has_value() && rm->word == Word{0};
  ok = ok && initial_factors(*rm) ==
                 std::set<Word>{{}, {1}, {2}, {3}, {3, 2}};
  ok = ok && is_dendric_return_morphism(*rm);
  ok = ok && tau_left(*rm) == std::set<Word>{{}, {2}};
  ok = ok && image_left(beta, MultiClique::on_range(4, {{0, 1}, {1, 2, 3}})) ==
                 MultiClique::on_range(4, {{0, 1}, {1, 2}, {0, 3}});
  report(5, ok, "beta recognition, initial factors, contexts, image");
}

void criterion_6() {
  bool ok = enumerate_trees(3).size() == 3 && enumerate_trees(4).size() == 16;
  ReturnMorphism t3 = rm_of({{0, 1}, {0, 2}, {0}});
  ReturnMorphism a4 = rm_of({{0}, {0, 1}, {0, 2}, {0, 3}});
  CharGraph g3 = build_char_graph({t3}, Side::Left, VertexUniverse::Trees);
  CharGraph g4 = build_char_graph({a4}, Side::Left, VertexUniverse::Trees);
  ok = ok && quotient_by_permutations(g3, g3).representatives.size() == 2;
  ok = ok && quotient_by_permutations(g4, g4).representatives.size() == 14;
  ok = ok && quotient_by_permutations(build_iet_graph({t3})).classes == 2;
  ok = ok && quotient_by_permutations(build_iet_graph({a4})).classes == 9;
  report(6, ok, "tree, tree-pair and order-pair class counts");
}

void criterion_7() {
  ReturnMorphism beta = rm_of({{0}, {0, 1}, {0, 2}, {0, 3, 2}});
  MultiClique g = MultiClique::on_range(4, {{0, 1}, {1, 2, 3}});
  MultiClique img = image(beta, Side::Left, g);
  bool ok = valid_triplet(Side::Left, img, beta, g).valid;
  MultiClique star0 = MultiClique::on_range(4, {{0, 1}, {0, 2}, {0, 3}});
  MultiClique path = MultiClique::on_range(4, {{0, 1}, {0, 2}, {2, 3}});
  ok = ok && valid_triplet(Side::Left, star0, beta, path).valid;
  for (const MultiClique& target : {star0, path, img}) {
    TripletVerdict v = valid_triplet(Side::Left, target, beta, star0);
    ok = ok && !v.valid && v.failed == TripletVerdict::Failure::SubgraphDisconnected &&
         v.context == Word{2};
  }
  report(7, ok, "valid-triplet spot checks for beta");
}

void criterion_8() {
  MorphicSpec fib = load_spec(fixture("fibonacci.toml"));
  ReturnRepresentation rep = return_representation(fib);
  Alphabet c2 = Alphabet::canonical(2);
  bool ok = rep.lambda.morphism == Morphism(c2, fib.alphabet(), {{0, 1}, {0}});
  ok = ok && rep.theta.morphism == Morphism(c2, c2, {{0, 1}, {0}});
  Word w = {0};  // the letter written "1" of the derived alphabet
  for (int k = 0; k < 8; ++k) w = rep.theta.morphism.apply(w);
  Word image = rep.lambda.morphism.apply(w);
  Word pre = fib.prefix(static_cast<long long>(image.size()));
  pre.resize(image.size());
  ok = ok && image.size() > 50 && image == pre;
  report(8, ok, "Fibonacci return representation and prefix replay");
}

void criterion_9() {
  bool ok = true;
  // Complexity first-difference identity on random primitive substitutions.
  std::mt19937 rng(20240822);
  int tested = 0;
  while (tested < 20) {
    int d = 2 + static_cast<int>(rng() % 3);
    Alphabet a = Alphabet::digits(d);
    std::vector<Word> images(d);
    for (Word& u : images) {
      u.resize(1 + rng() % 3);
      for (Letter& x : u) x = static_cast<Letter>(rng() % d);
    }
    Morphism m(a, a, images);
    if (m.codomain_shrunk() || !is_primitive(m)) continue;
    Prolongation p = prolongable_power(m);
    if (p.power <= 0) continue;
    MorphicSpec spec = MorphicSpec::pure(power(m, p.power), p.letter);
    for (int n = 0; n <= 8; ++n) {
      long long diff = complexity(spec, n + 1) - complexity(spec, n);
      long long right = 0, left = 0;
      for (const Word& w : spec.factor_set(n)) {
        ExtensionData e = extensions(spec, w);
        right += static_cast<long long>(e.right.size()) - 1;
        left += static_cast<long long>(e.left.size()) - 1;
      }
      ok = ok && diff == right && diff == left;
    }
    ++tested;
  }
  // Acyclicity and connectedness transfer between word graphs and
  // length-graded multigraphs.
  for (const char* name : {"fibonacci.toml", "tribonacci.toml", "thue_morse.toml",
                           "chacon.toml", "ar4.toml", "image_sturmian.toml"}) {
    MorphicSpec spec = load_spec(fixture(name));
    for (int cap = 1; cap <= 8; ++cap) {
      bool words_acyclic = true, graded_acyclic = true;
      for (int n = 0; n < cap; ++n)
        for (const Word& w : spec.factor_set(n))
          words_acyclic = words_acyclic && is_acyclic(extension_graph(spec, w));
      for (int n = 1; n <= cap; ++n)
        graded_acyclic = graded_acyclic && is_acyclic_for_coloring(side_graph(spec, Side::Left, n)) &&
                         is_acyclic_for_coloring(side_graph(spec, Side::Right, n));
      ok = ok && words_acyclic == graded_acyclic;
      if (words_acyclic) {
        bool words_connected = true, graded_connected = true;
        for (int n = 0; n < cap; ++n)
          for (const Word& w : spec.factor_set(n))
            words_connected = words_connected && is_connected(extension_graph(spec, w));
        for (int n = 1; n <= cap; ++n)
          graded_connected = graded_connected && is_connected(side_graph(spec, Side::Left, n)) &&
                             is_connected(side_graph(spec, Side::Right, n));
        ok = ok && words_connected == graded_connected;
      }
    }
  }
  // Antecedent uniqueness and extension image round trip over the
  // Arnoux-Rauzy fixture.
  MorphicSpec ar4 = load_spec(fixture("ar4.toml"));
  for (const NamedMorphism& nm : load_morphism_set(fixture("one_right_special.txt"))) {
    ReturnMorphism rm = require_return_morphism(nm.morphism);
    MorphicSpec y(ar4.inner(), nm.morphism, ar4.seed());
    for (int n = 1; n <= 8; ++n)
      for (const Word& u : y.factor_set(n)) {
        Antecedent ant = antecedent(rm, ar4, u);
        if (ant.initial) continue;
        // Rebuild u from the decomposition.
        Word rebuilt = ant.s;
        Word mid = rm.morphism.apply(ant.v);
        rebuilt.insert(rebuilt.end(), mid.begin(), mid.end());
        rebuilt.insert(rebuilt.end(), ant.p.begin(), ant.p.end());
        ok = ok && rebuilt == u;
        // Extension pairs of u are the context images of the restricted
        // pairs of v.
        PartialLetterMap pl = phi_left(rm, ant.s);
        PartialLetterMap pr = phi_right(rm, ant.p);
        Pairs expect;
        for (const auto& [x, ypair] : extensions(ar4, ant.v).bi)
          if (pl.contains(x) && pr.contains(ypair)) expect.emplace(pl.at(x), pr.at(ypair));
        ok = ok && extensions(y, u).bi == expect;
      }
  }
  // Order transfer uniqueness by exhaustion.
  for (int d = 2; d <= 4; ++d) {
    std::vector<ReturnMorphism> fam;
    if (d == 2) fam = {rm_of({{0, 1}, {0}})};
    if (d == 3) fam = {rm_of({{0, 1}, {0, 2}, {0}})};
    if (d == 4) fam = {rm_of({{0}, {0, 1}, {0, 2}, {0, 3, 2}}), rm_of({{0}, {0, 1}, {0, 2, 1}, {0, 3, 1}})};
    std::vector<Letter> seq(d);
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<TotalOrder> orders;
    do {
      orders.push_back(TotalOrder::from_sequence(seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
    for (const ReturnMorphism& rm : fam)
      for (Side side : {Side::Left, Side::Right})
        for (const TotalOrder& target : orders) {
          TotalOrder got = transfer_order(side, rm, target);
          int matching = 0;
          auto taus = side == Side::Left ? tau_left(rm) : tau_right(rm);
          for (const TotalOrder& cand : orders) {
            bool preserving = true;
            for (const Word& t : taus) {
              PartialLetterMap phi = side == Side::Left ? phi_left(rm, t) : phi_right(rm, t);
              for (Letter x : phi.domain())
                for (Letter yy : phi.domain())
                  if (cand.less(x, yy) && target.less(phi.at(yy), phi.at(x)))
                    preserving = false;
            }
            if (preserving) {
              ++matching;
              ok = ok && cand == got;
            }
          }
          ok = ok && matching == 1;
        }
  }
  // Coloring acyclicity against brute-force cycle enumeration.
  for (int d = 2; d <= 5; ++d) {
    std::vector<std::vector<Letter>> subsets;
    for (int mask = 0; mask < (1 << d); ++mask) {
      std::vector<Letter> sub;
      for (int v = 0; v < d; ++v)
        if (mask & (1 << v)) sub.push_back(v);
      if (sub.size() >= 2) subsets.push_back(std::move(sub));
    }
    int max_gens = d <= 4 ? 4 : 3;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
      std::vector<std::vector<Letter>> gens;
      for (int k : pick) gens.push_back(subsets[k]);
      MultiClique g = MultiClique::on_range(d, gens);
      ok = ok && is_acyclic_for_coloring(g) == is_acyclic_for_coloring_bruteforce(g);
      if (static_cast<int>(pick.size()) == max_gens) return;
      for (int k = from; k < static_cast<int>(subsets.size()); ++k) {
        pick.push_back(k);
        self(self, k);  // multisets: repetition allowed
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
  report(9, ok, "property suites (complexity, transfer, antecedents, acyclicity)");
}

void criterion_10() {
  auto start = std::chrono::steady_clock::now();
  MorphicSpec fib = load_spec(fixture("fibonacci.toml"));
  auto got = decide_iet(fib);
  bool ok = got.has_value() &&
            *got == OrderPair{TotalOrder::from_sequence({0, 1}),
                              TotalOrder::from_sequence({1, 0})};
  MorphicSpec trib = load_spec(fixture("tribonacci.toml"));
  ok = ok && !decide_iet(trib).has_value();
  auto elapsed = std::chrono::steady_clock::now() - start;
  ok = ok && elapsed < std::chrono::seconds(10);
  report(10, ok, "interval exchange decisions for Fibonacci and Tribonacci");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  return failures == 0 ? 0 : 1;
}
