#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dendric/iet.hpp"
#include "dendric/io.hpp"

using namespace dendric;

namespace {

std::string show(const Word& w, const Alphabet& a) {
  return w.empty() ? std::string("(empty)") : format(w, a);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::FormatError, "cannot write " + path);
  out << text;
}

std::string morphism_rules(const Morphism& m) {
  std::string out;
  for (Letter a = 0; a < m.domain().size(); ++a)
    out += m.domain().symbol(a) + " -> " + format(m.image(a), m.codomain()) + "\n";
  return out;
}

int run_factors(const std::string& path, int n) {
  MorphicSpec spec = load_spec(path);
  for (const Word& w : spec.factor_set(n)) std::cout << show(w, spec.alphabet()) << "\n";
  return 0;
}

int run_extensions(const std::string& path, const std::string& word) {
  MorphicSpec spec = load_spec(path);
  Word w = parse_word(word, spec.alphabet());
  ExtensionData e = extensions(spec, w);
  std::cout << "word " << show(w, spec.alphabet()) << "\n";
  std::cout << "left";
  for (Letter a : e.left) std::cout << " " << spec.alphabet().symbol(a);
  std::cout << "\nright";
  for (Letter a : e.right) std::cout << " " << spec.alphabet().symbol(a);
  std::cout << "\npairs";
  for (const auto& [a, b] : e.bi)
    std::cout << " " << spec.alphabet().symbol(a) << spec.alphabet().symbol(b);
  std::cout << "\n";
  return 0;
}

int run_check_dendric(const std::string& path, int up_to) {
  MorphicSpec spec = load_spec(path);
  std::vector<Word> bad = dendric_up_to(spec, up_to);
  for (const Word& w : bad) std::cout << show(w, spec.alphabet()) << "\n";
  return bad.empty() ? 0 : 2;
}

int run_decide(const std::string& path, bool json) {
  MorphicSpec spec = load_spec(path);
  Classification c = classify(spec);
  if (json) {
    std::cout << classification_json(spec, c) << "\n";
  } else {
    std::cout << verdict_name(c.verdict);
    if (c.verdict == Verdict::Periodic) std::cout << " period=" << c.period;
    if (c.verdict == Verdict::Dendric || c.verdict == Verdict::EventuallyDendric)
      std::cout << " threshold=" << c.threshold;
    std::cout << "\n";
    if (!c.detail.empty()) std::cout << c.detail << "\n";
    for (const Word& w : c.witnesses)
      std::cout << "witness " << show(w, spec.alphabet()) << "\n";
  }
  return exit_code(c.verdict);
}

int run_threshold(const std::string& path) {
  MorphicSpec spec = load_spec(path);
  Classification c = classify(spec);
  if (c.verdict != Verdict::Dendric && c.verdict != Verdict::EventuallyDendric) {
    std::cerr << "no threshold: " << verdict_name(c.verdict) << "\n";
    return exit_code(c.verdict);
  }
  std::cout << c.threshold << "\n";
  return 0;
}

int run_graphs(const std::string& path, const std::string& side_name, int n, bool stable,
               bool dot) {
  MorphicSpec spec = load_spec(path);
  Side side = side_name == "R" ? Side::Right : Side::Left;
  MultiClique g;
  if (stable) {
    auto [gl, gr] = stabilized_graphs(spec);
    g = side == Side::Left ? gl : gr;
  } else {
    g = side_graph(spec, side, n);
  }
  std::cout << (dot ? to_dot(g, spec.alphabet()) : to_json(g, spec.alphabet())) << "\n";
  return 0;
}

int run_return_rep(const std::string& path) {
  MorphicSpec spec = load_spec(path);
  ReturnRepresentation rep = return_representation(spec);
  std::cout << "lambda (word " << show(rep.lambda.word, rep.lambda.morphism.codomain())
            << ")\n"
            << morphism_rules(rep.lambda.morphism);
  std::cout << "theta (word " << show(rep.theta.word, rep.theta.morphism.codomain()) << ")\n"
            << morphism_rules(rep.theta.morphism);
  std::cout << "cycle start " << rep.cycle_start << " length " << rep.cycle_length << "\n";
  return 0;
}

int run_sadic_graph(const std::string& set_path, const std::string& side_name,
                    const std::string& universe_name, bool quotient, const std::string& dot_path) {
  std::vector<NamedMorphism> named = load_morphism_set(set_path);
  std::vector<ReturnMorphism> s;
  std::vector<std::string> labels;
  for (size_t k = 0; k < named.size(); ++k) {
    s.push_back(require_return_morphism(named[k].morphism));
    labels.push_back(named[k].name.empty() ? "m" + std::to_string(k) : named[k].name);
  }
  Side side = side_name == "R" ? Side::Right : Side::Left;
  VertexUniverse universe = universe_name == "multicliques" ? VertexUniverse::MultiCliques
                                                            : VertexUniverse::Trees;
  CharGraph g = build_char_graph(s, side, universe);
  if (!dot_path.empty()) write_output(to_dot(g, labels), dot_path);
  if (quotient) {
    CharGraph other = build_char_graph(s, side == Side::Left ? Side::Right : Side::Left,
                                       universe);
    const CharGraph& left = side == Side::Left ? g : other;
    const CharGraph& right = side == Side::Left ? other : g;
    std::cout << to_json(quotient_by_permutations(left, right), labels) << "\n";
  } else if (dot_path.empty()) {
    std::cout << to_json(g, labels) << "\n";
  }
  return 0;
}

int run_iet_decide(const std::string& path) {
  MorphicSpec spec = load_spec(path);
  auto pair = decide_iet(spec);
  if (!pair) {
    std::cout << "none\n";
    return 0;
  }
  // Two-row interval order notation: top the right order, bottom the left.
  std::cout << order_text(pair->right, spec.alphabet()) << "\n"
            << order_text(pair->left, spec.alphabet()) << "\n";
  return 0;
}

int run_iet_graph(const std::string& set_path, const std::string& dot_path, bool quotient) {
  std::vector<NamedMorphism> named = load_morphism_set(set_path);
  std::vector<ReturnMorphism> s;
  std::vector<std::string> labels;
  for (size_t k = 0; k < named.size(); ++k) {
    s.push_back(require_return_morphism(named[k].morphism));
    labels.push_back(named[k].name.empty() ? "m" + std::to_string(k) : named[k].name);
  }
  IetGraph g = build_iet_graph(s);
  const Alphabet& a = s.front().morphism.domain();
  if (quotient)
    std::cout << "classes " << quotient_by_permutations(g).classes << "\n";
  else
    write_output(to_dot(g, a, labels), dot_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dendricity and interval exchange decisions for substitutive shifts"};
  app.require_subcommand(1);

  std::string spec_path, word, side = "L", universe = "trees", set_path, dot_path;
  int n = 0, up_to = 8;
  bool stable = false, dot = false, json = false, quotient = false;

  auto* factors = app.add_subcommand("factors", "list the factors of one length");
  factors->add_option("spec", spec_path)->required();
  factors->add_option("-n,--n", n)->required();

  auto* ext = app.add_subcommand("extensions", "extension sets of a factor");
  ext->add_option("spec", spec_path)->required();
  ext->add_option("-w,--word", word)->required();

  auto* check = app.add_subcommand("check-dendric", "list non-dendric factors below a length");
  check->add_option("spec", spec_path)->required();
  check->add_option("--up-to", up_to)->required();

  auto* decide = app.add_subcommand("decide", "classify the shift");
  decide->add_option("spec", spec_path)->required();
  decide->add_flag("--json", json);

  auto* thr = app.add_subcommand("threshold", "print the dendricity threshold");
  thr->add_option("spec", spec_path)->required();

  auto* graphs = app.add_subcommand("graphs", "extension multigraphs of one side");
  graphs->add_option("spec", spec_path)->required();
  graphs->add_option("--side", side)->check(CLI::IsMember({"L", "R"}));
  graphs->add_option("--n", n);
  graphs->add_flag("--stable", stable);
  graphs->add_flag("--dot", dot);

  auto* rep = app.add_subcommand("return-rep", "return-morphism representation");
  rep->add_option("spec", spec_path)->required();

  auto* sadic = app.add_subcommand("sadic-graph", "characterization graph of a morphism set");
  sadic->add_option("--set", set_path)->required();
  sadic->add_option("--side", side)->check(CLI::IsMember({"L", "R"}));
  sadic->add_option("--universe", universe)->check(CLI::IsMember({"trees", "multicliques"}));
  sadic->add_flag("--quotient", quotient);
  sadic->add_option("--dot", dot_path);

  auto* iet = app.add_subcommand("iet", "interval exchange coding");
  iet->require_subcommand(1);
  auto* iet_decide = iet->add_subcommand("decide", "search for an accepting order pair");
  iet_decide->add_option("spec", spec_path)->required();
  auto* iet_graph = iet->add_subcommand("graph", "order-pair graph of a morphism set");
  iet_graph->add_option("--set", set_path)->required();
  iet_graph->add_option("--dot", dot_path);
  iet_graph->add_flag("--quotient", quotient);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*factors) return run_factors(spec_path, n);
    if (*ext) return run_extensions(spec_path, word);
    if (*check) return run_check_dendric(spec_path, up_to);
    if (*decide) return run_decide(spec_path, json);
    if (*thr) return run_threshold(spec_path);
    if (*graphs) return run_graphs(spec_path, side, n, stable, dot);
    if (*rep) return run_return_rep(spec_path);
    if (*sadic) return run_sadic_graph(set_path, side, universe, quotient, dot_path);
    if (*iet_decide) return run_iet_decide(spec_path);
    if (*iet_graph) return run_iet_graph(set_path, dot_path, quotient);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  }
  return 64;
}
