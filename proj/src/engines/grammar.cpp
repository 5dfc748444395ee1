#include "fim/engines/grammar.hpp"

#include <set>
#include <sstream>

#include "fim/errors.hpp"

namespace fim::engines {

void GrammarSpec::validate() const {
  const std::set<Symbol> nts(nonterminals.begin(), nonterminals.end());
  const std::set<Symbol> ts(terminals.begin(), terminals.end());
  if (nts.size() != nonterminals.size()) throw ConfigError("duplicate nonterminal");
  if (ts.size() != terminals.size()) throw ConfigError("duplicate terminal");
  for (const Symbol& t : ts) {
    if (nts.contains(t)) throw ConfigError("symbol '" + t + "' is both terminal and nonterminal");
  }
  if (!nts.contains(start)) throw ConfigError("start symbol '" + start + "' is not a nonterminal");
  for (const Production& p : productions) {
    if (!nts.contains(p.head)) throw ConfigError("production head '" + p.head + "' is not a nonterminal");
    for (const Symbol& s : p.body) {
      if (!nts.contains(s) && !ts.contains(s)) {
        throw ConfigError("undeclared symbol '" + s + "' in production for " + p.head);
      }
    }
  }
}

std::string GrammarSpec::to_table() const {
  std::ostringstream out;
  for (const Production& p : productions) {
    out << p.head << " ->";
    if (p.body.empty()) out << " ε";
    for (const Symbol& s : p.body) out << ' ' << s;
    out << '\n';
  }
  return out.str();
}

std::vector<Symbol> tokenize(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.emplace_back(1, c);
  return out;
}

std::string join(std::span<const Symbol> tokens) {
  std::string out;
  for (const Symbol& s : tokens) out += s;
  return out;
}

bool cfg_member(const GrammarSpec& g, std::span<const Symbol> input) {
  return CfgRecognizer(g).accepts(input);
}

bool cfg_member(const GrammarSpec& g, std::string_view text) {
  return CfgRecognizer(g).accepts(text);
}

}  // namespace fim::engines
