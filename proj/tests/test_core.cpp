#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dendric/core.hpp"

using namespace dendric;

namespace {

Morphism make(const Alphabet& dom, const Alphabet& cod, std::vector<std::string> images) {
  std::vector<Word> ws;
  for (const auto& s : images) ws.push_back(parse_word(s, cod));
  return Morphism(dom, cod, std::move(ws));
}

Morphism endo(int d, std::vector<std::string> images) {
  Alphabet a = Alphabet::digits(d);
  return make(a, a, std::move(images));
}

const Morphism kFib = endo(2, {"01", "0"});
const Morphism kChacon = endo(3, {"0012", "12", "012"});

}  // namespace

TEST_CASE("alphabet basics") {
  Alphabet a = Alphabet::digits(3);
  CHECK(a.size() == 3);
  CHECK(a.symbol(2) == "2");
  CHECK(a.index("1") == 1);
  CHECK(!a.index("7").has_value());
  Alphabet c = Alphabet::canonical(2);
  CHECK(c.symbol(0) == "1");
  CHECK(format(parse_word("21", c), c) == "21");
  CHECK_THROWS_AS(parse_word("3", c), Error);
}

TEST_CASE("apply and iterate") {
  Word w = parse_word("0", kFib.domain());
  w = kFib.apply(w);
  CHECK(format(w, kFib.codomain()) == "01");
  w = kFib.apply(w);
  CHECK(format(w, kFib.codomain()) == "010");
  w = kFib.apply(w);
  CHECK(format(w, kFib.codomain()) == "01001");
}

TEST_CASE("apply rejects foreign letters") {
  CHECK_THROWS_AS(kFib.apply(Word{2}), Error);
}

TEST_CASE("compose fibonacci with itself") {
  Morphism sq = compose(kFib, kFib);
  CHECK(format(sq.image(0), sq.codomain()) == "010");
  CHECK(format(sq.image(1), sq.codomain()) == "01");
  CHECK(!sq.codomain_shrunk());
  CHECK(sq == power(kFib, 2));
}

TEST_CASE("compose shrinks unused codomain letters") {
  // g maps {0,1} into {0,1,2} without ever producing 2.
  Alphabet two = Alphabet::digits(2);
  Alphabet three = Alphabet::digits(3);
  Morphism g = make(two, three, {"01", "1"});
  CHECK(g.codomain_shrunk());
  CHECK(g.codomain().size() == 2);
  CHECK(g.codomain().symbol(1) == "1");
}

TEST_CASE("elementary morphisms and the section-8 identities") {
  Alphabet a3 = Alphabet::digits(3);
  Morphism l10 = elementary(ElementaryKind::Left, a3, 1, 0);   // 1 -> 01
  Morphism l21 = elementary(ElementaryKind::Left, a3, 2, 1);   // 2 -> 12
  Morphism r12 = elementary(ElementaryKind::Right, a3, 1, 2);  // 1 -> 12
  CHECK(format(l10.image(1), a3) == "01");
  CHECK(format(r12.image(1), a3) == "12");
  CHECK_THROWS_AS(elementary(ElementaryKind::Left, a3, 1, 1), Error);

  // delta_n = L10 R12^n L21 = (0 -> 0, 1 -> 01^.., 2 -> ...).
  Morphism delta0 = compose(l10, l21);
  CHECK(format(delta0.image(0), a3) == "0");
  CHECK(format(delta0.image(1), a3) == "01");
  CHECK(format(delta0.image(2), a3) == "012");
  Morphism delta1 = compose(l10, compose(r12, l21));
  CHECK(format(delta1.image(0), a3) == "0");
  CHECK(format(delta1.image(1), a3) == "012");
  CHECK(format(delta1.image(2), a3) == "0122");
}

TEST_CASE("incidence matrix counts occurrences") {
  IncidenceMatrix m = incidence(kChacon);
  // counts[a][b] = occurrences of a in image(b)
  CHECK(m.counts[0][0] == 2);
  CHECK(m.counts[1][0] == 1);
  CHECK(m.counts[2][0] == 1);
  CHECK(m.counts[0][1] == 0);
  CHECK(m.counts[1][1] == 1);
  CHECK(m.counts[2][2] == 1);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(kFib));
  CHECK(is_primitive(kChacon));
  CHECK(is_primitive(endo(2, {"01", "10"})));
  CHECK(!is_primitive(Morphism::identity(Alphabet::digits(2))));
  CHECK(!is_primitive(endo(2, {"00", "11"})));
  // 1-letter alphabets are primitive as soon as the image is non-trivial.
  CHECK(is_primitive(endo(1, {"00"})));
  CHECK_THROWS_AS(is_primitive(make(Alphabet::digits(2), Alphabet::digits(3), {"01", "2"})),
                  Error);
}

TEST_CASE("growing letters") {
  // 0 -> 10, 1 -> 1: only 0 grows... 0's image contains 0 and 1; 1 is a
  // deterministic loop of length 1, so 1 stays bounded.
  Morphism m = endo(2, {"10", "1"});
  auto g = growing_letters(m);
  CHECK(g[0]);
  CHECK(!g[1]);
  auto gf = growing_letters(kFib);
  CHECK(gf[0]);
  CHECK(gf[1]);
}

TEST_CASE("prolongable power") {
  Prolongation p = prolongable_power(kFib);
  CHECK(p.power == 1);
  CHECK(p.letter == 0);
  p = prolongable_power(kChacon);
  CHECK(p.power == 1);
  CHECK(p.letter == 0);
  // sigma(1) = 10 already starts with 1.
  p = prolongable_power(endo(2, {"1", "10"}));
  CHECK(p.power == 1);
  CHECK(p.letter == 1);
  // 0 -> 1, 1 -> 01: no image starts with its own letter; the square does
  // (sigma^2(0) = 01, sigma^2(1) = 101).
  p = prolongable_power(endo(2, {"1", "01"}));
  CHECK(p.power == 2);
  // Verified postcondition: sigma^k(b) starts with b and b grows.
  Morphism sq = power(endo(2, {"1", "01"}), p.power);
  CHECK(sq.image(p.letter).front() == p.letter);
  CHECK(growing_letters(endo(2, {"1", "01"}))[p.letter]);
}

TEST_CASE("occurrences") {
  Word w = parse_word("0100101", Alphabet::digits(2));
  Word u = parse_word("01", Alphabet::digits(2));
  CHECK(occurrences(u, w) == std::vector<int>{0, 3, 5});
  CHECK(occurrences(Word{}, u) == std::vector<int>{0, 1, 2});
  CHECK(occurrences(parse_word("11", Alphabet::digits(2)), w).empty());
}

TEST_CASE("prefix suffix factor helpers") {
  Alphabet a = Alphabet::digits(2);
  Word w = parse_word("0110", a);
  CHECK(is_prefix(parse_word("01", a), w));
  CHECK(!is_prefix(parse_word("10", a), w));
  CHECK(is_suffix(parse_word("10", a), w));
  CHECK(factors_of(w, 2) ==
        std::set<Word>{parse_word("01", a), parse_word("11", a), parse_word("10", a)});
  CHECK(factors_of(w, 0) == std::set<Word>{Word{}});
}
