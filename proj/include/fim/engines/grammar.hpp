#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fim::engines {

using Symbol = std::string;

struct Production {
  Symbol head;
  std::vector<Symbol> body;  // empty body is an ε-production
};

/// A context-free grammar (V, Σ, P, S).
struct GrammarSpec {
  std::vector<Symbol> nonterminals;
  std::vector<Symbol> terminals;
  Symbol start;
  std::vector<Production> productions;

  /// Throws ConfigError if the start symbol is undeclared, terminals and
  /// nonterminals overlap, or a production mentions an undeclared symbol.
  void validate() const;

  /// One production per line: "S -> x S X", ε written as "ε".
  std::string to_table() const;
};

/// Split text into one-character terminal tokens.
std::vector<Symbol> tokenize(std::string_view text);

/// Earley recognizer with nullable-aware prediction, so ε-productions and
/// unit cycles need no normalization. Holds a compiled copy of the grammar;
/// `accepts` is const and may be called concurrently.
class CfgRecognizer {
 public:
  explicit CfgRecognizer(const GrammarSpec& g);

  /// Throws InvalidInput on a token that is not a terminal of the grammar.
  bool accepts(std::span<const Symbol> input) const;
  bool accepts(std::string_view text) const;

 private:
  struct Rule {
    int head;
    std::vector<int> body;
  };

  int terminal_code(const Symbol& s) const;

  std::vector<Symbol> terminals_;
  int terminal_count_ = 0;
  int symbol_count_ = 0;
  int start_ = 0;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> rules_by_head_;  // indexed by symbol code
  std::vector<bool> nullable_;                   // indexed by symbol code
};

bool cfg_member(const GrammarSpec& g, std::span<const Symbol> input);
bool cfg_member(const GrammarSpec& g, std::string_view text);

/// Every derivable terminal string of length <= max_len, in length-lex order
/// with terminals ranked by their declaration order. Computed as the least
/// fixpoint of the per-nonterminal languages truncated at max_len.
std::vector<std::vector<Symbol>> cfg_enumerate(const GrammarSpec& g,
                                               std::size_t max_len);

/// Concatenate tokens back into text (terminals are one character wide in
/// every grammar this project ships).
std::string join(std::span<const Symbol> tokens);

}  // namespace fim::engines
