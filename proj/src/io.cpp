#include "dendric/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace dendric {
namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Rule {
  std::string lhs, image;
};

Rule parse_rule(const std::string& line) {
  size_t arrow = line.find("->");
  if (arrow == std::string::npos) fail(Errc::FormatError, "expected 'a -> word': " + line);
  Rule r;
  r.lhs = strip(line.substr(0, arrow));
  r.image = strip(line.substr(arrow + 2));
  if (r.lhs.size() != 1 || r.image.empty())
    fail(Errc::FormatError, "rule needs one source symbol and a nonempty image: " + line);
  return r;
}

Morphism build(const std::vector<Rule>& rules) {
  if (rules.empty()) fail(Errc::FormatError, "morphism has no rules");
  std::vector<std::string> domain;
  for (const Rule& r : rules) {
    if (std::find(domain.begin(), domain.end(), r.lhs) != domain.end())
      fail(Errc::FormatError, "duplicate rule for symbol " + r.lhs);
    domain.push_back(r.lhs);
  }
  std::set<std::string> dom(domain.begin(), domain.end());
  std::set<std::string> img;
  for (const Rule& r : rules)
    for (char c : r.image) img.insert(std::string(1, c));
  Alphabet a(domain);
  bool endo = std::includes(dom.begin(), dom.end(), img.begin(), img.end());
  Alphabet b = endo ? a : Alphabet(std::vector<std::string>(img.begin(), img.end()));
  std::vector<Word> images;
  for (const Rule& r : rules) images.push_back(parse_word(r.image, b));
  return Morphism(a, b, std::move(images));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::FormatError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Sections: header -> body lines.  Lines before any header go to "".
std::vector<std::pair<std::string, std::vector<std::string>>> sections(const std::string& text) {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  out.emplace_back("", std::vector<std::string>{});
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::string s = strip(line);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(Errc::FormatError, "unterminated section header: " + s);
      out.emplace_back(s.substr(1, s.size() - 2), std::vector<std::string>{});
    } else {
      out.back().second.push_back(s);
    }
  }
  return out;
}

Morphism build_section(const std::vector<std::string>& lines) {
  std::vector<Rule> rules;
  for (const std::string& line : lines) rules.push_back(parse_rule(line));
  return build(rules);
}

}  // namespace

Morphism parse_morphism(const std::string& text) {
  auto secs = sections(text);
  if (secs.size() != 1) fail(Errc::FormatError, "expected a single unnamed morphism");
  return build_section(secs[0].second);
}

Morphism load_morphism(const std::string& path) { return parse_morphism(read_file(path)); }

std::vector<NamedMorphism> parse_morphism_set(const std::string& text) {
  auto secs = sections(text);
  std::vector<NamedMorphism> out;
  for (const auto& [name, lines] : secs) {
    if (lines.empty()) continue;
    out.push_back({name, build_section(lines)});
  }
  if (out.empty()) fail(Errc::FormatError, "no morphisms in set");
  return out;
}

std::vector<NamedMorphism> load_morphism_set(const std::string& path) {
  return parse_morphism_set(read_file(path));
}

MorphicSpec parse_spec(const std::string& text) {
  auto secs = sections(text);
  std::optional<Morphism> inner, outer;
  std::optional<std::string> seed_symbol;
  for (const auto& [name, lines] : secs) {
    if (name.empty() || name == "spec") {
      for (const std::string& line : lines) {
        size_t eq = line.find('=');
        if (eq == std::string::npos) fail(Errc::FormatError, "expected 'seed = letter': " + line);
        std::string key = strip(line.substr(0, eq));
        if (key != "seed") fail(Errc::FormatError, "unknown key " + key);
        seed_symbol = strip(line.substr(eq + 1));
      }
    } else if (name == "inner") {
      inner = build_section(lines);
    } else if (name == "outer") {
      outer = build_section(lines);
    } else {
      fail(Errc::FormatError, "unknown section " + name);
    }
  }
  if (!inner) fail(Errc::FormatError, "missing [inner] section");
  if (!seed_symbol) fail(Errc::FormatError, "missing seed");
  auto seed = inner->domain().index(*seed_symbol);
  if (!seed) fail(Errc::FormatError, "seed letter not in the inner alphabet");
  if (!outer) return MorphicSpec::pure(*inner, *seed);
  return MorphicSpec(*inner, *outer, *seed);
}

MorphicSpec load_spec(const std::string& path) { return parse_spec(read_file(path)); }

}  // namespace dendric
