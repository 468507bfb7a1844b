#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dendric {

using Letter = int;
using Word = std::vector<Letter>;

enum class Errc {
  LetterNotInDomain,
  AlphabetMismatch,
  SameLetter,
  NotEndomorphism,
  NoGrowingLetter,
  NotPrimitive,
  NotProlongable,
  NotAFactor,
  NotAPrefix,
  NotInjective,
  NotReturnMorphism,
  DerivationInconclusive,
  ChainBudgetExceeded,
  InternalMonotonicityBreach,
  ForeignVertex,
  InvalidInputTriplet,
  NotEventuallyDendricInput,
  NotDendricInput,
  FormatError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

// Finite ordered alphabet; letters are indices 0..size()-1 into the symbol
// table.  Two alphabets are equal iff their symbol lists are equal.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  // "0", "1", ..., "d-1"
  static Alphabet digits(int d);
  // "1", "2", ..., "k"  (used for derived levels)
  static Alphabet canonical(int k);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(Letter a) const;
  std::optional<Letter> index(std::string_view symbol) const;
  bool contains(Letter a) const { return a >= 0 && a < size(); }

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, Letter, std::less<>> index_;
};

std::string format(const Word& w, const Alphabet& a);
// Parses a word written as concatenated single-character symbols.
Word parse_word(std::string_view text, const Alphabet& a);

// Non-erasing morphism between free monoids.  The codomain is kept minimal:
// letters of the declared codomain that occur in no image are dropped (and
// the instance is flagged), so that incidence matrices and primitivity are
// meaningful.
class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);
  static Morphism identity(const Alphabet& a);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  const Word& image(Letter a) const;
  bool codomain_shrunk() const { return codomain_shrunk_; }
  bool is_endomorphism() const { return domain_ == codomain_; }
  bool is_identity() const;
  bool is_injective_on_letters() const;
  Word apply(const Word& w) const;
  Word apply(Letter a) const { return image(a); }
  int max_image_length() const;

  bool operator==(const Morphism& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && images_ == other.images_;
  }
  bool operator!=(const Morphism& other) const { return !(*this == other); }

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
  bool codomain_shrunk_ = false;
};

// compose(f, g) = f after g.
Morphism compose(const Morphism& f, const Morphism& g);
// k-th compositional power of an endomorphism, k >= 1.
Morphism power(const Morphism& m, int k);

enum class ElementaryKind { Left, Right };
// Right: a -> ab, Left: a -> ba; all other letters fixed.  a != b.
Morphism elementary(ElementaryKind kind, const Alphabet& alphabet, Letter a, Letter b);

// counts[a][b] = number of occurrences of letter a in image(b).
struct IncidenceMatrix {
  std::vector<std::vector<long long>> counts;
};
IncidenceMatrix incidence(const Morphism& m);

// M^k > 0 for some k <= d*d (d = alphabet size).
bool is_primitive(const Morphism& m);

struct Prolongation {
  int power = 0;
  Letter letter = -1;
};
// Minimal k >= 1 such that sigma^k(b) starts with b for some growing letter
// b (smallest such b); |sigma^(nk)(b)| is then unbounded.
Prolongation prolongable_power(const Morphism& m);

// Letters b with |sigma^n(b)| unbounded.
std::vector<bool> growing_letters(const Morphism& m);

// Starting positions of u in w; empty u yields 0..|w|.
std::vector<int> occurrences(const Word& u, const Word& w);

bool is_prefix(const Word& u, const Word& w);
bool is_suffix(const Word& u, const Word& w);
std::set<Word> factors_of(const Word& w, int n);

}  // namespace dendric
