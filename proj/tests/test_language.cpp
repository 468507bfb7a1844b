#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dendric/language.hpp"

using namespace dendric;

namespace {

Morphism endo(int d, std::vector<std::string> images) {
  Alphabet a = Alphabet::digits(d);
  std::vector<Word> ws;
  for (const auto& s : images) ws.push_back(parse_word(s, a));
  return Morphism(a, a, std::move(ws));
}

MorphicSpec fib() { return MorphicSpec::pure(endo(2, {"01", "0"}), 0); }
MorphicSpec tribonacci() { return MorphicSpec::pure(endo(3, {"01", "02", "0"}), 0); }
MorphicSpec thue_morse() { return MorphicSpec::pure(endo(2, {"01", "10"}), 0); }
MorphicSpec chacon() { return MorphicSpec::pure(endo(3, {"0012", "12", "012"}), 0); }

MorphicSpec image_sturmian() {
  Alphabet two = Alphabet::digits(2);
  Morphism outer(two, two, {parse_word("0110", two), parse_word("011", two)});
  return MorphicSpec(endo(2, {"01", "0"}), outer, 0);
}

std::set<Word> parse_set(const std::vector<std::string>& words, const Alphabet& a) {
  std::set<Word> out;
  for (const auto& s : words) out.insert(parse_word(s, a));
  return out;
}

// Independent oracle: factors collected from outer(inner^k(c)) for every
// letter c, iterated well past stabilization.
std::set<Word> slow_factors(const MorphicSpec& spec, int n, int depth) {
  std::set<Word> out;
  for (Letter c = 0; c < spec.inner().domain().size(); ++c) {
    Word w = {c};
    for (int i = 0; i < depth; ++i) w = spec.inner().apply(w);
    auto f = factors_of(spec.outer().apply(w), n);
    out.insert(f.begin(), f.end());
  }
  return out;
}

}  // namespace

TEST_CASE("spec construction validates") {
  CHECK_THROWS_AS(MorphicSpec::pure(endo(2, {"00", "11"}), 0), Error);      // not primitive
  CHECK_THROWS_AS(MorphicSpec::pure(endo(2, {"01", "0"}), 5), Error);       // bad seed
  CHECK(MorphicSpec::pure(endo(2, {"1", "01"}), 1).power() == 2);
  CHECK(fib().power() == 1);
  CHECK(fib().is_pure());
  CHECK(!image_sturmian().is_pure());
}

TEST_CASE("fibonacci factors") {
  MorphicSpec s = fib();
  Alphabet a = s.alphabet();
  CHECK(factors(s, 0) == std::set<Word>{Word{}});
  CHECK(factors(s, 1) == parse_set({"0", "1"}, a));
  CHECK(factors(s, 2) == parse_set({"00", "01", "10"}, a));
  CHECK(factors(s, 3) == parse_set({"001", "010", "100", "101"}, a));
  CHECK(factors(s, 4) == parse_set({"0010", "0100", "1001", "0101", "1010"}, a));
  for (int n = 1; n <= 12; ++n) CHECK(complexity(s, n) == n + 1);
}

TEST_CASE("factor oracle matches the all-letters oracle") {
  for (const MorphicSpec& s : {fib(), tribonacci(), thue_morse(), chacon(), image_sturmian()}) {
    for (int n : {1, 2, 3, 5, 8}) {
      CHECK(factors(s, n) == slow_factors(s, n, 14));
    }
  }
}

TEST_CASE("complexity identity holds for random primitive substitutions") {
  // p(n+1) - p(n) == sum over length-n factors of (|E^R(w)| - 1),
  // and symmetrically on the left.
  std::mt19937 rng(20240817);
  int tested = 0;
  while (tested < 20) {
    int d = 2 + static_cast<int>(rng() % 3);
    Alphabet a = Alphabet::digits(d);
    std::vector<Word> images;
    for (int i = 0; i < d; ++i) {
      int len = 1 + static_cast<int>(rng() % 3);
      Word w;
      for (int j = 0; j < len; ++j) w.push_back(static_cast<Letter>(rng() % d));
      images.push_back(w);
    }
    Morphism m(a, a, images);
    if (m.codomain_shrunk() || !is_primitive(m)) continue;
    MorphicSpec s = [&]() -> MorphicSpec {
      try {
        return MorphicSpec::pure(m, prolongable_power(m).letter);
      } catch (const Error&) {
        return fib();
      }
    }();
    ++tested;
    for (int n = 0; n <= 4; ++n) {
      long long lhs = complexity(s, n + 1) - complexity(s, n);
      long long right_sum = 0, left_sum = 0;
      for (const Word& w : factors(s, n)) {
        ExtensionData e = extensions(s, w);
        right_sum += static_cast<long long>(e.right.size()) - 1;
        left_sum += static_cast<long long>(e.left.size()) - 1;
      }
      CHECK(lhs == right_sum);
      CHECK(lhs == left_sum);
    }
  }
}

TEST_CASE("extensions of fibonacci 0") {
  MorphicSpec s = fib();
  Word w = parse_word("0", s.alphabet());
  ExtensionData e = extensions(s, w);
  CHECK(e.left == std::set<Letter>{0, 1});
  CHECK(e.right == std::set<Letter>{0, 1});
  // Length-3 factors with middle letter 0: 001, 100, 101.
  CHECK(e.bi == std::set<std::pair<Letter, Letter>>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(is_tree(extension_graph(s, w)));
  CHECK_THROWS_AS(extensions(s, parse_word("11", s.alphabet())), Error);
}

TEST_CASE("biextensions project onto one-sided extensions") {
  for (const MorphicSpec& s : {tribonacci(), chacon(), image_sturmian()}) {
    for (int n = 0; n <= 4; ++n) {
      for (const Word& w : factors(s, n)) {
        ExtensionData e = extensions(s, w);
        std::set<Letter> left, right;
        for (auto [x, y] : e.bi) {
          left.insert(x);
          right.insert(y);
        }
        CHECK(left == e.left);
        CHECK(right == e.right);
      }
    }
  }
}

TEST_CASE("thue-morse 11 extension graph is a disjoint union of edges") {
  MorphicSpec s = thue_morse();
  ExtensionGraph g = extension_graph(s, parse_word("11", s.alphabet()));
  // 0110 and 0111/1110 do not occur; realized biextensions of 11: (0,0).
  CHECK(!g.edges.empty());
  CHECK(is_acyclic(g));
}

TEST_CASE("ordinary words") {
  // In a Sturmian shift every factor is ordinary.
  MorphicSpec s = fib();
  for (int n = 0; n <= 5; ++n)
    for (const Word& w : factors(s, n)) CHECK(is_ordinary(s, w));
  // Arnoux-Rauzy words are ordinary everywhere too.
  MorphicSpec t = tribonacci();
  for (int n = 0; n <= 4; ++n)
    for (const Word& w : factors(t, n)) CHECK(is_ordinary(t, w));
  // Thue-Morse's empty word has all four biextensions: no row/column pair
  // covers them.
  CHECK(!is_ordinary(thue_morse(), Word{}));
}

TEST_CASE("dendric_up_to") {
  CHECK(dendric_up_to(fib(), 8).empty());
  CHECK(dendric_up_to(tribonacci(), 6).empty());
  // Thue-Morse: the empty word is already non-dendric (its extension graph
  // has a cycle).
  auto bad = dendric_up_to(thue_morse(), 3);
  CHECK(!bad.empty());
  CHECK(bad.front() == Word{});
}

TEST_CASE("image of sturmian: non-dendric words are exactly eps and 1") {
  MorphicSpec s = image_sturmian();
  auto bad = dendric_up_to(s, 8);
  REQUIRE(bad.size() == 2);
  CHECK(bad[0] == Word{});
  CHECK(bad[1] == parse_word("1", s.alphabet()));
}

TEST_CASE("chacon complexity is 2n+1") {
  MorphicSpec s = chacon();
  for (int n = 1; n <= 10; ++n) CHECK(complexity(s, n) == 2 * n + 1);
  auto bad = dendric_up_to(s, 4);
  CHECK(!bad.empty());
}

TEST_CASE("periodicity probe") {
  Alphabet one = Alphabet::digits(1);
  Alphabet two = Alphabet::digits(2);
  Morphism inner(one, one, {parse_word("00", one)});
  Morphism outer(one, two, {parse_word("01", two)});
  MorphicSpec periodic(inner, outer, 0);
  PeriodicityResult r = periodicity_probe(periodic, 10);
  CHECK(r.periodic);
  CHECK(r.period == 2);
  r = periodicity_probe(fib(), 10);
  CHECK(!r.periodic);
  CHECK(r.cap == 10);
}

TEST_CASE("extensions in a finite language") {
  Alphabet a = Alphabet::digits(2);
  std::vector<Word> gens = {parse_word("010", a), parse_word("00", a)};
  ExtensionData e = extensions_in(gens, parse_word("1", a));
  CHECK(e.left == std::set<Letter>{0});
  CHECK(e.right == std::set<Letter>{0});
  CHECK(e.bi == std::set<std::pair<Letter, Letter>>{{0, 0}});
  CHECK(is_tree_in(gens, parse_word("1", a)));
}

TEST_CASE("certified prefix covers all factors") {
  for (const MorphicSpec& s : {fib(), chacon(), image_sturmian()}) {
    Word p = s.certified_prefix(6);
    auto have = factors_of(p, 6);
    for (const Word& w : factors(s, 6)) CHECK(have.count(w) == 1);
  }
}
