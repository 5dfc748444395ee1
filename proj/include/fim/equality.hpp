#pragma once

#include "fim/word.hpp"

namespace fim {

/// u =_FIM v in FIM_rank, decided by comparing Munn trees.
bool equal_in_fim(const Word& u, const Word& v, int rank);

bool is_idempotent(const Word& w, int rank);

/// Membership of u # w in WP(FIM_rank): true iff u = w^inv in FIM_rank.
bool wp_member(const MarkedWord& mw, int rank);

/// Membership of (u, v) in the two-tape word problem ι(FIM_rank).
bool iota_member(const Word& u, const Word& v, int rank);

}  // namespace fim
