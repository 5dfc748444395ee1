#pragma once

#include <compare>
#include <cstddef>
#include <set>

#include "fim/word.hpp"

namespace fim {

/// Free-group product a·b, freely reduced. Both inputs must be reduced.
Word free_reduce_product(const Word& a, const Word& b);

/// True iff no letter is followed by its inverse.
bool is_freely_reduced(const Word& w);

/// A positively oriented edge source --x_generator--> source·x_generator.
struct MunnEdge {
  Word source;
  int generator = 1;

  friend auto operator<=>(const MunnEdge&, const MunnEdge&) = default;
};

/// The Munn tree of an element of FIM_k, embedded in the Cayley graph of the
/// free group: vertices are reduced words, α is the empty word.
class MunnTree {
 public:
  /// The trivial tree {α}, α = ω.
  explicit MunnTree(int rank);

  /// Walk the path of `w` from α, collecting every traversed edge.
  static MunnTree of_word(const Word& w, int rank);

  int rank() const noexcept { return rank_; }
  const std::set<Word>& vertices() const noexcept { return vertices_; }
  const std::set<MunnEdge>& edges() const noexcept { return edges_; }
  const Word& end_vertex() const noexcept { return end_; }

  bool is_idempotent() const noexcept { return end_.empty(); }

  /// Checks the tree invariants: α present, ω a vertex, edge endpoints
  /// present, edges + 1 == vertices, connected.
  bool is_valid() const;

  /// Attach b's α to this tree's ω and merge.
  MunnTree operator*(const MunnTree& b) const;

  friend bool operator==(const MunnTree&, const MunnTree&) = default;

 private:
  void step(Letter a);

  int rank_;
  std::set<Word> vertices_;
  std::set<MunnEdge> edges_;
  Word end_;
};

inline MunnTree munn_tree(const Word& w, int rank) {
  return MunnTree::of_word(w, rank);
}

inline MunnTree multiply(const MunnTree& a, const MunnTree& b) { return a * b; }

}  // namespace fim
