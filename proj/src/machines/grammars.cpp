#include "fim/machines/grammars.hpp"

#include <algorithm>
#include <set>

namespace fim::machines {

namespace {

using engines::Production;
using engines::Symbol;
using Body = std::vector<Symbol>;

void add(GrammarSpec& g, const Symbol& head, std::initializer_list<Body> bodies) {
  for (const Body& b : bodies) g.productions.push_back({head, b});
}

GrammarSpec one_nonterminal(Body middle) {
  GrammarSpec g{{"S"}, {"x", "X"}, "S", {}};
  add(g, "S", {{"S", "S"}, std::move(middle), {}});
  return g;
}

}  // namespace

GrammarSpec build_gamma_plus() { return one_nonterminal({"x", "S", "X"}); }

GrammarSpec build_gamma_minus() { return one_nonterminal({"X", "S", "x"}); }

GrammarSpec build_gamma_nu() {
  // Z' is declared alongside S, T, Z but has no productions.
  GrammarSpec g{{"S", "T", "Z", "Z'"}, {"x", "X", "#"}, "S", {}};
  add(g, "S", {{"Z", "S", "Z"}, {"x", "S", "X"}, {"T"}});
  add(g, "T", {{"Z", "T", "Z"}, {"X", "T", "x"}, {"#"}});
  add(g, "Z", {{"Z", "Z"}, {"X", "Z", "x"}, {}});
  return g;
}

GrammarSpec reversed(const GrammarSpec& g) {
  GrammarSpec out = g;
  for (Production& p : out.productions) std::reverse(p.body.begin(), p.body.end());
  return out;
}

GrammarSpec build_gamma_lambda() { return reversed(build_gamma_nu()); }

GrammarSpec with_marker_variants(const GrammarSpec& g, const std::vector<Symbol>& roots,
                                 const Symbol& marker) {
  const std::set<Symbol> marked(roots.begin(), roots.end());
  auto name = [](const Symbol& s) { return s + "#"; };

  GrammarSpec out = g;
  for (const Symbol& r : roots) out.nonterminals.push_back(name(r));
  if (std::find(out.terminals.begin(), out.terminals.end(), marker) == out.terminals.end()) {
    out.terminals.push_back(marker);
  }

  // The marker sits either in a gap of the top production or inside the
  // yield of exactly one child.
  for (const Production& p : g.productions) {
    if (!marked.contains(p.head)) continue;
    std::set<Body> bodies;
    for (std::size_t gap = 0; gap <= p.body.size(); ++gap) {
      Body b = p.body;
      b.insert(b.begin() + static_cast<std::ptrdiff_t>(gap), marker);
      bodies.insert(std::move(b));
    }
    for (std::size_t i = 0; i < p.body.size(); ++i) {
      if (!marked.contains(p.body[i])) continue;
      Body b = p.body;
      b[i] = name(b[i]);
      bodies.insert(std::move(b));
    }
    for (const Body& b : bodies) out.productions.push_back({name(p.head), b});
  }
  return out;
}

CowpGrammars build_cowp_grammars() {
  GrammarSpec v{{"S", "M", "A", "B", "E", "Z", "Z'", "U", "D"}, {"x", "X", "#"}, "S", {}};
  add(v, "S", {{"M"}, {"U"}, {"D"}});
  add(v, "M", {{"E", "x", "A"}, {"E", "X", "B"}});
  add(v, "A", {{"x", "A"}, {"E", "A", "E"}, {}});
  add(v, "B", {{"X", "B"}, {"E", "B", "E"}, {}});
  add(v, "E", {{"Z", "E"}, {"Z'", "E"}, {}});
  add(v, "Z", {{"Z", "Z"}, {"X", "Z", "x"}, {}});
  add(v, "Z'", {{"Z'", "Z'"}, {"x", "Z'", "X"}, {}});
  add(v, "U", {{"Z", "x", "U", "X", "Z"}, {"x", "E", "X", "Z", "#"}, {"#", "Z", "x", "E", "X", "Z"}});
  add(v, "D", {{"Z'", "X", "D", "x", "Z'"}, {"X", "E", "x", "Z'", "#"}, {"#", "Z'", "X", "E", "x", "Z'"}});

  // Corrected grammar. The μ-mismatch branch keeps the printed M, A, B, E
  // productions but routes through their one-'#' variants. The ν branch is
  // a closed path whose maximum M is reached on one side of '#' only:
  //   (Z x)^M Z (X Z)^M with '#' inside one descending Z (max before '#')
  //   or inside one ascending Z (max after '#'); D mirrors it with Z', x̄.
  GrammarSpec f{{"S", "M", "A", "B", "E", "Z", "Z'", "U", "D", "P", "Uu", "Uv", "Q", "Du", "Dv"},
                {"x", "X", "#"}, "S", {}};
  add(f, "M", {{"E", "x", "A"}, {"E", "X", "B"}});
  add(f, "A", {{"x", "A"}, {"E", "A", "E"}, {}});
  add(f, "B", {{"X", "B"}, {"E", "B", "E"}, {}});
  add(f, "E", {{"Z", "E"}, {"Z'", "E"}, {}});
  add(f, "Z", {{"Z", "Z"}, {"X", "Z", "x"}, {}});
  add(f, "Z'", {{"Z'", "Z'"}, {"x", "Z'", "X"}, {}});
  f = with_marker_variants(f, {"M", "A", "B", "E", "Z", "Z'"}, "#");
  add(f, "S", {{"M#"}, {"U"}, {"D"}});
  add(f, "P", {{"Z", "x", "P", "X", "Z"}, {"Z"}});
  add(f, "Uu", {{"Z", "x", "Uu", "X", "Z"}, {"Z", "x", "P", "X", "Z#"}});
  add(f, "Uv", {{"Z", "x", "Uv", "X", "Z"}, {"Z#", "x", "P", "X", "Z"}});
  add(f, "U", {{"Uu"}, {"Uv"}});
  add(f, "Q", {{"Z'", "X", "Q", "x", "Z'"}, {"Z'"}});
  add(f, "Du", {{"Z'", "X", "Du", "x", "Z'"}, {"Z'", "X", "Q", "x", "Z'#"}});
  add(f, "Dv", {{"Z'", "X", "Dv", "x", "Z'"}, {"Z'#", "X", "Q", "x", "Z'"}});
  add(f, "D", {{"Du"}, {"Dv"}});
  return {std::move(v), std::move(f)};
}

}  // namespace fim::machines
