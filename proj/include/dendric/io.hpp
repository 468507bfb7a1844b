#pragma once

#include "dendric/language.hpp"

namespace dendric {

// Rule lines "a -> word" with single-character symbols; '#' starts a
// comment, blank lines are skipped.  The domain lists the left-hand symbols
// in file order; the codomain is the domain when every image symbol occurs
// there, otherwise the sorted image symbols.
Morphism parse_morphism(const std::string& text);
Morphism load_morphism(const std::string& path);

// Named blocks "[name]" of rule lines; a file without headers is a single
// anonymous morphism.
struct NamedMorphism {
  std::string name;
  Morphism morphism;
};
std::vector<NamedMorphism> parse_morphism_set(const std::string& text);
std::vector<NamedMorphism> load_morphism_set(const std::string& path);

// Blocks [inner] and optional [outer] plus "seed = <letter>"; a missing
// outer block means the identity.
MorphicSpec parse_spec(const std::string& text);
MorphicSpec load_spec(const std::string& path);

}  // namespace dendric
