#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fim/word.hpp"

namespace fim::engines {

enum class Acceptance {
  FinalState,
  // The stack holds nothing but the bottom symbol (or is empty). Machines
  // that never pop their bottom marker accept this way.
  EmptyStack,
};

/// What a transition consumes. `Both` reads the same letter from tape 1 and
/// tape 2 in one step.
struct InputAction {
  enum class Kind { Epsilon, Tape, Both };

  Kind kind = Kind::Epsilon;
  int tape = 1;  // Kind::Tape only
  Letter letter{};

  static InputAction epsilon() { return {}; }
  static InputAction read(int tape, Letter a) { return {Kind::Tape, tape, a}; }
  static InputAction read_both(Letter a) { return {Kind::Both, 0, a}; }
};

/// (from, action, top) -> (to, push). `push` replaces the top symbol and is
/// written top-first: {} pops, {top} keeps it, {Y, top} pushes Y.
struct PdaTransition {
  std::string from;
  InputAction action;
  std::string top;
  std::string to;
  std::vector<std::string> push;
};

struct PdaSpec {
  std::vector<std::string> states;
  std::string initial;
  std::vector<std::string> finals;
  Acceptance acceptance = Acceptance::FinalState;
  std::vector<std::string> stack_alphabet;
  std::string bottom;
  int tapes = 1;
  std::vector<PdaTransition> transitions;

  /// Throws ConfigError on undeclared states/symbols or a tape index that
  /// does not exist.
  void validate() const;

  /// One transition per line, e.g. "(q0, x̄@1, Z) -> (q0, Y1 Z)". Letters
  /// are rendered in rank-1 text (x / X).
  std::string to_table() const;
};

struct TwoTapeInput {
  Word tape1;
  Word tape2;
};

/// Search the configuration graph for an accepting run that consumes all
/// input. The stack is capped at (total input length + 2) and ε-chains at
/// |states| * |stack alphabet| * (cap + 1) steps; a run that would exceed
/// either throws ResourceError.
bool pda_accepts(const PdaSpec& p, const Word& input);
bool pda_accepts(const PdaSpec& p, const TwoTapeInput& input);

}  // namespace fim::engines
