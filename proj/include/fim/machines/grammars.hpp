#pragma once

#include "fim/engines/grammar.hpp"

// Grammars over the rank-1 alphabet. Terminals are "x", "X" (x̄) and "#".
namespace fim::machines {

using engines::GrammarSpec;

/// S -> SS | xSX | ε: words evaluating to a positive idempotent (0, n, 0).
GrammarSpec build_gamma_plus();
/// S -> SS | XSx | ε: words evaluating to a negative idempotent (-l, 0, 0).
GrammarSpec build_gamma_minus();

/// Generates u # v^inv with ν(u) = ν(v) and μ(u) = μ(v).
GrammarSpec build_gamma_nu();
/// build_gamma_nu with every production body reversed: the λ analogue.
GrammarSpec build_gamma_lambda();

/// Every production body of `g` reversed; generates the reversed language.
GrammarSpec reversed(const GrammarSpec& g);

struct CowpGrammars {
  /// The printed co-word-problem productions, transcribed as they stand.
  GrammarSpec verbatim;
  /// A corrected grammar for {u # v^inv : u != v in FIM_1}.
  GrammarSpec fixed;
};

CowpGrammars build_cowp_grammars();

/// For each listed nonterminal N, add N# generating exactly the strings of N
/// with one `marker` inserted at any position. Returns the extended grammar.
GrammarSpec with_marker_variants(const GrammarSpec& g,
                                 const std::vector<engines::Symbol>& roots,
                                 const engines::Symbol& marker);

}  // namespace fim::machines
