#include "fim/rank1.hpp"

#include <algorithm>

#include "fim/errors.hpp"

namespace fim {

Rank1Elem evaluate_rank1(const Word& w) {
  std::int64_t pos = 0, lo = 0, hi = 0;
  for (const Letter& a : w) {
    if (a.generator != 1) {
      throw InvalidInput("rank-1 evaluation got generator " +
                         std::to_string(a.generator));
    }
    pos += a.inverted ? -1 : 1;
    lo = std::min(lo, pos);
    hi = std::max(hi, pos);
  }
  return {-lo, hi, pos};
}

Rank1Elem multiply(const Rank1Elem& a, const Rank1Elem& b) noexcept {
  return {std::max(a.neg_extent, b.neg_extent - a.mark),
          std::max(a.pos_extent, a.mark + b.pos_extent), a.mark + b.mark};
}

Word to_canonical_word(const Rank1Elem& e) {
  Word w = power(kX, static_cast<std::size_t>(e.pos_extent));
  w.insert(w.end(), static_cast<std::size_t>(e.pos_extent + e.neg_extent), kXbar);
  w.insert(w.end(), static_cast<std::size_t>(e.neg_extent + e.mark), kX);
  return w;
}

std::string to_string(const Rank1Elem& e) {
  return "(-" + std::to_string(e.neg_extent) + ", " +
         std::to_string(e.pos_extent) + ", " + std::to_string(e.mark) + ")";
}

}  // namespace fim
