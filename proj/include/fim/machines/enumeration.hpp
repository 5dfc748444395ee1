#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fim/word.hpp"

// Exhaustive input families in length-lexicographic order, letters ordered
// x_1 < x̄_1 < x_2 < ... and '#' last.
namespace fim::machines {

std::vector<Word> words_up_to(std::size_t max_len, int rank = 1);

/// Rank-1 strings with exactly one '#' and at most max_letters letters.
std::vector<MarkedWord> marked_words_up_to(std::size_t max_letters);

/// Rank-1 pairs with |u| + |v| <= max_total, ordered by total length, then
/// |u|, then u, then v.
std::vector<std::pair<Word, Word>> word_pairs_up_to(std::size_t max_total);

}  // namespace fim::machines
