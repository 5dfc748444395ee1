#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>

#include "fim/engines/grammar.hpp"
#include "fim/errors.hpp"

namespace fim::engines {

CfgRecognizer::CfgRecognizer(const GrammarSpec& g) {
  g.validate();
  terminals_ = g.terminals;
  terminal_count_ = static_cast<int>(g.terminals.size());
  symbol_count_ = terminal_count_ + static_cast<int>(g.nonterminals.size());

  std::map<Symbol, int> code;
  for (int i = 0; i < terminal_count_; ++i) code[g.terminals[i]] = i;
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    code[g.nonterminals[i]] = terminal_count_ + static_cast<int>(i);
  }
  start_ = code.at(g.start);

  rules_by_head_.assign(symbol_count_, {});
  for (const Production& p : g.productions) {
    Rule r{code.at(p.head), {}};
    for (const Symbol& s : p.body) r.body.push_back(code.at(s));
    rules_by_head_[r.head].push_back(static_cast<int>(rules_.size()));
    rules_.push_back(std::move(r));
  }

  nullable_.assign(symbol_count_, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& r : rules_) {
      if (nullable_[r.head]) continue;
      if (std::all_of(r.body.begin(), r.body.end(),
                      [&](int s) { return nullable_[s]; })) {
        nullable_[r.head] = true;
        changed = true;
      }
    }
  }
}

int CfgRecognizer::terminal_code(const Symbol& s) const {
  for (int i = 0; i < terminal_count_; ++i) {
    if (terminals_[i] == s) return i;
  }
  throw InvalidInput("unknown terminal '" + s + "'");
}

namespace {

struct Item {
  int rule;
  int dot;
  int origin;
};

std::uint64_t key(const Item& it) {
  return (static_cast<std::uint64_t>(it.rule) << 40) |
         (static_cast<std::uint64_t>(it.dot) << 32) |
         static_cast<std::uint64_t>(it.origin);
}

}  // namespace

bool CfgRecognizer::accepts(std::span<const Symbol> input) const {
  std::vector<int> tokens;
  tokens.reserve(input.size());
  for (const Symbol& s : input) tokens.push_back(terminal_code(s));
  const std::size_t n = tokens.size();

  std::vector<std::vector<Item>> chart(n + 1);
  std::vector<std::unordered_set<std::uint64_t>> seen(n + 1);
  // waiting[i][sym]: indices into chart[i] of items whose next symbol is sym.
  std::vector<std::vector<std::vector<int>>> waiting(
      n + 1, std::vector<std::vector<int>>(symbol_count_));

  auto add = [&](std::size_t pos, Item it) {
    if (!seen[pos].insert(key(it)).second) return;
    const auto& body = rules_[it.rule].body;
    if (it.dot < static_cast<int>(body.size())) {
      waiting[pos][body[it.dot]].push_back(static_cast<int>(chart[pos].size()));
    }
    chart[pos].push_back(it);
  };

  for (int r : rules_by_head_[start_]) add(0, Item{r, 0, 0});

  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k < chart[i].size(); ++k) {
      const Item it = chart[i][k];
      const Rule& rule = rules_[it.rule];
      if (it.dot == static_cast<int>(rule.body.size())) {
        auto& parents = waiting[it.origin][rule.head];
        for (std::size_t p = 0; p < parents.size(); ++p) {
          Item parent = chart[it.origin][parents[p]];
          ++parent.dot;
          add(i, parent);
        }
        continue;
      }
      const int next = rule.body[it.dot];
      if (next >= terminal_count_) {
        for (int r : rules_by_head_[next]) add(i, Item{r, 0, static_cast<int>(i)});
        if (nullable_[next]) add(i, Item{it.rule, it.dot + 1, it.origin});
      } else if (i < n && tokens[i] == next) {
        add(i + 1, Item{it.rule, it.dot + 1, it.origin});
      }
    }
  }

  return std::any_of(chart[n].begin(), chart[n].end(), [&](const Item& it) {
    return it.origin == 0 && rules_[it.rule].head == start_ &&
           it.dot == static_cast<int>(rules_[it.rule].body.size());
  });
}

bool CfgRecognizer::accepts(std::string_view text) const {
  const auto tokens = tokenize(text);
  return accepts(std::span<const Symbol>(tokens));
}

}  // namespace fim::engines
