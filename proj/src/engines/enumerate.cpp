#include <algorithm>
#include <map>
#include <set>

#include "fim/engines/grammar.hpp"

namespace fim::engines {

namespace {

using Code = std::vector<int>;
using Language = std::set<Code>;

bool length_lex_less(const Code& a, const Code& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<std::vector<Symbol>> cfg_enumerate(const GrammarSpec& g,
                                               std::size_t max_len) {
  g.validate();
  const int t_count = static_cast<int>(g.terminals.size());
  std::map<Symbol, int> code;
  for (int i = 0; i < t_count; ++i) code[g.terminals[i]] = i;
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    code[g.nonterminals[i]] = t_count + static_cast<int>(i);
  }

  std::vector<Language> lang(t_count + g.nonterminals.size());
  for (int t = 0; t < t_count; ++t) {
    if (max_len >= 1) lang[t].insert(Code{t});
  }

  // Least fixpoint: every nonterminal's language truncated at max_len only
  // grows, and there are finitely many strings of bounded length.
  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& p : g.productions) {
      Language partial{Code{}};
      for (const Symbol& s : p.body) {
        const Language& next = lang[code.at(s)];
        Language joined;
        for (const Code& a : partial) {
          for (const Code& b : next) {
            if (a.size() + b.size() > max_len) continue;
            Code c = a;
            c.insert(c.end(), b.begin(), b.end());
            joined.insert(std::move(c));
          }
        }
        partial = std::move(joined);
        if (partial.empty()) break;
      }
      Language& target = lang[code.at(p.head)];
      for (const Code& c : partial) {
        if (target.insert(c).second) changed = true;
      }
    }
  }

  std::vector<Code> sorted(lang[code.at(g.start)].begin(),
                           lang[code.at(g.start)].end());
  std::sort(sorted.begin(), sorted.end(), length_lex_less);
  std::vector<std::vector<Symbol>> out;
  out.reserve(sorted.size());
  for (const Code& c : sorted) {
    std::vector<Symbol> s;
    for (int t : c) s.push_back(g.terminals[t]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace fim::engines
