#pragma once

#include <cstddef>
#include <optional>

#include "fim/word.hpp"

// Membership through the shipped machines, for rank-1 inputs.
namespace fim::machines {

/// Γ_ν and Γ_λ both accept u # v^inv.
bool wp_member_via_2cf(const MarkedWord& mw);

/// The ν- and λ-agreement automata both accept (u, v).
bool iota_member_via_2pda(const Word& u, const Word& v);

/// Union of the μ-, ν- and λ-mismatch automata.
bool cowp_iota_member(const Word& u, const Word& v);

/// Checking stack acceptance. The stack bound defaults to the number of
/// letters in the input.
bool csa_wp_accepts(const MarkedWord& mw,
                    std::optional<std::size_t> stack_bound = std::nullopt);
bool csa_iota_accepts(const Word& u, const Word& v,
                      std::optional<std::size_t> stack_bound = std::nullopt);

}  // namespace fim::machines
