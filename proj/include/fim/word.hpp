#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fim {

/// A generator x_i or its formal inverse.
struct Letter {
  int generator = 1;
  bool inverted = false;

  constexpr Letter inverse() const noexcept { return {generator, !inverted}; }

  // Generator first, then x_i < x̄_i.
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// u # w, kept as its two halves. For a word-problem instance u # v^inv the
/// right half holds v^inv as written.
struct MarkedWord {
  Word left;
  Word right;

  friend bool operator==(const MarkedWord&, const MarkedWord&) = default;
};

inline constexpr Letter kX{1, false};
inline constexpr Letter kXbar{1, true};

constexpr Letter gen(int i) noexcept { return {i, false}; }
constexpr Letter inv(int i) noexcept { return {i, true}; }

/// w^inv: reverse the word and invert every letter.
Word inverse(const Word& w);

Word concat(const Word& a, const Word& b);

/// `letter` repeated `count` times.
Word power(Letter letter, std::size_t count);

/// Throws InvalidInput unless every letter has generator index in [1, rank].
void check_rank(const Word& w, int rank);

/// Parse the text format: 'a'..'z' are generators 1..26 and the uppercase
/// letter is the inverse. In rank 1, 'x'/'X' name the single generator as
/// well. A trailing '$' is ignored. '#' is rejected here; see parse_marked.
Word parse_word(std::string_view text, int rank);

/// Parse "u#w" with exactly one '#'. A trailing '$' is ignored.
MarkedWord parse_marked(std::string_view text, int rank);

/// Inverse of parse_word. Rank 1 prints x / X, higher ranks use a..z.
std::string to_text(const Word& w, int rank);
std::string to_text(const MarkedWord& mw, int rank);

}  // namespace fim
