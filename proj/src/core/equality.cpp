#include "fim/equality.hpp"

#include "fim/munn_tree.hpp"

namespace fim {

bool equal_in_fim(const Word& u, const Word& v, int rank) {
  return munn_tree(u, rank) == munn_tree(v, rank);
}

bool is_idempotent(const Word& w, int rank) {
  return munn_tree(w, rank).is_idempotent();
}

bool wp_member(const MarkedWord& mw, int rank) {
  return equal_in_fim(mw.left, inverse(mw.right), rank);
}

bool iota_member(const Word& u, const Word& v, int rank) {
  return equal_in_fim(u, v, rank);
}

}  // namespace fim
