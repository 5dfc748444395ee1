#pragma once

#include "fim/word.hpp"

// Rank-1 predicates computed from (-λ, ν, μ); these are the reference
// languages the machines are checked against.
namespace fim::machines {

/// ŵ = (0, n, 0): a closed path that never goes left of 0.
bool in_positive_idempotents(const Word& w);
/// ŵ = (-l, 0, 0).
bool in_negative_idempotents(const Word& w);

/// u # v^inv (right half is v^inv) with ν(u) = ν(v) and μ(u) = μ(v).
bool in_l_nu(const MarkedWord& mw);
/// u # v^inv with λ(u) = λ(v) and μ(u) = μ(v).
bool in_l_lambda(const MarkedWord& mw);

bool nu_and_mu_agree(const Word& u, const Word& v);
bool lambda_and_mu_agree(const Word& u, const Word& v);

bool mu_differs(const Word& u, const Word& v);
bool nu_differs(const Word& u, const Word& v);
bool lambda_differs(const Word& u, const Word& v);

}  // namespace fim::machines
