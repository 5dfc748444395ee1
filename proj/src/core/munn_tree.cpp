#include "fim/munn_tree.hpp"

#include <map>
#include <queue>

#include "fim/errors.hpp"

namespace fim {

namespace {

void append_reduced(Word& v, Letter a) {
  if (!v.empty() && v.back() == a.inverse()) {
    v.pop_back();
  } else {
    v.push_back(a);
  }
}

}  // namespace

Word free_reduce_product(const Word& a, const Word& b) {
  Word out = a;
  for (const Letter& l : b) append_reduced(out, l);
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

MunnTree::MunnTree(int rank) : rank_(rank) {
  if (rank < 1) throw InvalidInput("rank must be positive");
  vertices_.insert(Word{});
}

MunnTree MunnTree::of_word(const Word& w, int rank) {
  check_rank(w, rank);
  MunnTree t(rank);
  for (const Letter& a : w) t.step(a);
  return t;
}

void MunnTree::step(Letter a) {
  Word next = end_;
  append_reduced(next, a);
  // x̄_i from v traverses the edge v·x_i^-1 --x_i--> v.
  edges_.insert(MunnEdge{a.inverted ? next : end_, a.generator});
  vertices_.insert(next);
  end_ = std::move(next);
}

bool MunnTree::is_valid() const {
  if (!vertices_.contains(Word{}) || !vertices_.contains(end_)) return false;
  if (edges_.size() + 1 != vertices_.size()) return false;

  std::map<Word, std::vector<Word>> adjacent;
  for (const auto& e : edges_) {
    if (!is_freely_reduced(e.source)) return false;
    Word target = free_reduce_product(e.source, Word{gen(e.generator)});
    if (!vertices_.contains(e.source) || !vertices_.contains(target)) {
      return false;
    }
    adjacent[e.source].push_back(target);
    adjacent[target].push_back(e.source);
  }

  std::set<Word> seen{Word{}};
  std::queue<Word> frontier;
  frontier.push(Word{});
  while (!frontier.empty()) {
    Word v = std::move(frontier.front());
    frontier.pop();
    for (const Word& u : adjacent[v]) {
      if (seen.insert(u).second) frontier.push(u);
    }
  }
  // Connected with |E| = |V| - 1 means acyclic.
  return seen.size() == vertices_.size();
}

MunnTree MunnTree::operator*(const MunnTree& b) const {
  MunnTree out = *this;
  out.rank_ = std::max(rank_, b.rank_);
  for (const Word& v : b.vertices_) {
    out.vertices_.insert(free_reduce_product(end_, v));
  }
  for (const MunnEdge& e : b.edges_) {
    out.edges_.insert(MunnEdge{free_reduce_product(end_, e.source), e.generator});
  }
  out.end_ = free_reduce_product(end_, b.end_);
  return out;
}

}  // namespace fim
