#include "dendric/core.hpp"

#include <algorithm>

namespace dendric {

void fail(Errc code, const std::string& what) { throw Error(code, what); }

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (int i = 0; i < size(); ++i) {
    if (symbols_[i].empty()) fail(Errc::FormatError, "empty alphabet symbol");
    if (!index_.emplace(symbols_[i], i).second)
      fail(Errc::FormatError, "duplicate alphabet symbol '" + symbols_[i] + "'");
  }
}

Alphabet Alphabet::digits(int d) {
  std::vector<std::string> s;
  for (int i = 0; i < d; ++i) s.push_back(std::to_string(i));
  return Alphabet(std::move(s));
}

Alphabet Alphabet::canonical(int k) {
  std::vector<std::string> s;
  for (int i = 1; i <= k; ++i) s.push_back(std::to_string(i));
  return Alphabet(std::move(s));
}

const std::string& Alphabet::symbol(Letter a) const {
  if (!contains(a)) fail(Errc::LetterNotInDomain, "letter index out of range");
  return symbols_[a];
}

std::optional<Letter> Alphabet::index(std::string_view symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string format(const Word& w, const Alphabet& a) {
  std::string out;
  for (Letter x : w) out += a.symbol(x);
  return out;
}

Word parse_word(std::string_view text, const Alphabet& a) {
  Word w;
  for (char c : text) {
    auto i = a.index(std::string_view(&c, 1));
    if (!i) fail(Errc::FormatError, std::string("unknown letter '") + c + "'");
    w.push_back(*i);
  }
  return w;
}

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_.size())
    fail(Errc::FormatError, "morphism needs one image per domain letter");
  std::vector<bool> used(codomain_.size(), false);
  for (const Word& w : images_) {
    if (w.empty()) fail(Errc::FormatError, "erasing morphisms are not supported");
    for (Letter a : w) {
      if (!codomain_.contains(a)) fail(Errc::LetterNotInDomain, "image letter not in codomain");
      used[a] = true;
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    // Keep the codomain minimal: drop unused letters and remap.
    std::vector<std::string> kept;
    std::vector<Letter> remap(codomain_.size(), -1);
    for (Letter a = 0; a < codomain_.size(); ++a) {
      if (used[a]) {
        remap[a] = static_cast<Letter>(kept.size());
        kept.push_back(codomain_.symbol(a));
      }
    }
    for (Word& w : images_)
      for (Letter& a : w) a = remap[a];
    codomain_ = Alphabet(std::move(kept));
    codomain_shrunk_ = true;
  }
}

Morphism Morphism::identity(const Alphabet& a) {
  std::vector<Word> images;
  for (Letter x = 0; x < a.size(); ++x) images.push_back({x});
  return Morphism(a, a, std::move(images));
}

const Word& Morphism::image(Letter a) const {
  if (!domain_.contains(a)) fail(Errc::LetterNotInDomain, "letter not in morphism domain");
  return images_[a];
}

bool Morphism::is_identity() const {
  if (domain_ != codomain_) return false;
  for (Letter a = 0; a < domain_.size(); ++a)
    if (images_[a] != Word{a}) return false;
  return true;
}

bool Morphism::is_injective_on_letters() const {
  std::set<Word> seen(images_.begin(), images_.end());
  return static_cast<int>(seen.size()) == domain_.size();
}

int Morphism::max_image_length() const {
  int m = 0;
  for (const Word& w : images_) m = std::max<int>(m, static_cast<int>(w.size()));
  return m;
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (Letter a : w) {
    const Word& im = image(a);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (g.codomain() != f.domain())
    fail(Errc::AlphabetMismatch, "compose: codomain of inner != domain of outer");
  std::vector<Word> images;
  for (Letter a = 0; a < g.domain().size(); ++a) images.push_back(f.apply(g.image(a)));
  return Morphism(g.domain(), f.codomain(), std::move(images));
}

Morphism power(const Morphism& m, int k) {
  if (!m.is_endomorphism()) fail(Errc::NotEndomorphism, "power needs an endomorphism");
  if (k < 1) fail(Errc::FormatError, "power exponent must be >= 1");
  Morphism r = m;
  for (int i = 1; i < k; ++i) r = compose(m, r);
  return r;
}

Morphism elementary(ElementaryKind kind, const Alphabet& alphabet, Letter a, Letter b) {
  if (!alphabet.contains(a) || !alphabet.contains(b))
    fail(Errc::LetterNotInDomain, "elementary: letter not in alphabet");
  if (a == b) fail(Errc::SameLetter, "elementary: the two letters must differ");
  std::vector<Word> images;
  for (Letter x = 0; x < alphabet.size(); ++x) {
    if (x == a)
      images.push_back(kind == ElementaryKind::Right ? Word{a, b} : Word{b, a});
    else
      images.push_back({x});
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

IncidenceMatrix incidence(const Morphism& m) {
  IncidenceMatrix mat;
  mat.counts.assign(m.codomain().size(), std::vector<long long>(m.domain().size(), 0));
  for (Letter b = 0; b < m.domain().size(); ++b)
    for (Letter a : m.image(b)) ++mat.counts[a][b];
  return mat;
}

bool is_primitive(const Morphism& m) {
  if (!m.is_endomorphism()) fail(Errc::NotEndomorphism, "is_primitive needs an endomorphism");
  const int d = m.domain().size();
  // Boolean reachability: step[a][b] = a occurs in image(b).
  std::vector<std::vector<bool>> step(d, std::vector<bool>(d, false));
  for (Letter b = 0; b < d; ++b)
    for (Letter a : m.image(b)) step[a][b] = true;
  std::vector<std::vector<bool>> acc = step;
  for (int k = 1; k <= d * d; ++k) {
    bool all = true;
    for (int i = 0; i < d && all; ++i)
      for (int j = 0; j < d && all; ++j)
        if (!acc[i][j]) all = false;
    if (all) return true;
    std::vector<std::vector<bool>> next(d, std::vector<bool>(d, false));
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l)
        if (step[i][l])
          for (int j = 0; j < d; ++j)
            if (acc[l][j]) next[i][j] = true;
    acc = std::move(next);
  }
  return false;
}

std::vector<bool> growing_letters(const Morphism& m) {
  if (!m.is_endomorphism()) fail(Errc::NotEndomorphism, "growing_letters needs an endomorphism");
  const int d = m.domain().size();
  // reach[a][b] = b occurs in sigma^n(a) for some n >= 1.
  std::vector<std::vector<bool>> reach(d, std::vector<bool>(d, false));
  for (Letter a = 0; a < d; ++a)
    for (Letter b : m.image(a)) reach[a][b] = true;
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  // A letter grows iff it reaches (reflexively) a letter g that lies on a
  // cycle and has |sigma(g)| >= 2: going around the cycle reproduces g with
  // strictly more material each time.  Otherwise every reachable cycle is a
  // deterministic length-1 loop and the image lengths stay bounded.
  std::vector<bool> growing(d, false);
  for (Letter a = 0; a < d; ++a)
    for (Letter g = 0; g < d; ++g) {
      bool reachable = (a == g) || reach[a][g];
      if (reachable && reach[g][g] && m.image(g).size() >= 2) growing[a] = true;
    }
  return growing;
}

Prolongation prolongable_power(const Morphism& m) {
  std::vector<bool> growing = growing_letters(m);
  const int d = m.domain().size();
  if (std::find(growing.begin(), growing.end(), true) == growing.end())
    fail(Errc::NoGrowingLetter, "morphism has no growing letter");
  // sigma^k(b) starts with b iff the first-letter map iterated k times fixes
  // b; scan k = 1..d (first-letter orbits cycle within d steps).
  std::vector<Letter> first(d);
  for (Letter a = 0; a < d; ++a) first[a] = m.image(a).front();
  std::vector<Letter> iter(first);
  for (int k = 1; k <= d; ++k) {
    for (Letter b = 0; b < d; ++b)
      if (growing[b] && iter[b] == b) return {k, b};
    for (Letter b = 0; b < d; ++b) iter[b] = first[iter[b]];
  }
  fail(Errc::NoGrowingLetter, "no growing letter lies on a first-letter cycle");
}

std::vector<int> occurrences(const Word& u, const Word& w) {
  std::vector<int> out;
  if (u.empty()) {
    for (int i = 0; i <= static_cast<int>(w.size()); ++i) out.push_back(i);
    return out;
  }
  if (u.size() > w.size()) return out;
  for (int i = 0; i + u.size() <= w.size(); ++i)
    if (std::equal(u.begin(), u.end(), w.begin() + i)) out.push_back(i);
  return out;
}

bool is_prefix(const Word& u, const Word& w) {
  return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin());
}

bool is_suffix(const Word& u, const Word& w) {
  return u.size() <= w.size() && std::equal(u.rbegin(), u.rend(), w.rbegin());
}

std::set<Word> factors_of(const Word& w, int n) {
  std::set<Word> out;
  if (n == 0) {
    out.insert(Word{});
    return out;
  }
  for (int i = 0; i + n <= static_cast<int>(w.size()); ++i)
    out.insert(Word(w.begin() + i, w.begin() + i + n));
  return out;
}

}  // namespace dendric
