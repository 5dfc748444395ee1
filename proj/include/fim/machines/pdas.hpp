#pragma once

#include "fim/engines/pda.hpp"

// Two-tape pushdown automata over the rank-1 alphabet.
namespace fim::machines {

using engines::PdaSpec;

/// Empty-stack acceptor of {(u, v) : ν(u) = ν(v), μ(u) = μ(v)}. Never pops
/// its bottom marker Z, so "empty" means only Z remains.
PdaSpec build_pda_A_nu();
/// build_pda_A_nu with x and x̄ exchanged: λ in place of ν.
PdaSpec build_pda_A_lambda();

/// One-counter acceptor of μ(u) != μ(v).
PdaSpec build_pda_B_mu();

/// The printed ν-mismatch table, unchanged.
PdaSpec build_pda_B_nu_verbatim();
PdaSpec build_pda_B_lambda_verbatim();

/// Corrected acceptor of ν(u) != ν(v); extends the printed table.
PdaSpec build_pda_B_nu();
PdaSpec build_pda_B_lambda();

/// Exchange x and x̄ in every input action.
PdaSpec swap_letters(const PdaSpec& p);

}  // namespace fim::machines
