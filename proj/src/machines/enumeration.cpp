#include "fim/machines/enumeration.hpp"

#include <algorithm>
#include <tuple>

namespace fim::machines {

std::vector<Word> words_up_to(std::size_t max_len, int rank) {
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.push_back(gen(g));
    alphabet.push_back(inv(g));
  }
  std::vector<Word> out{Word{}};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (const Letter& a : alphabet) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

std::vector<MarkedWord> marked_words_up_to(std::size_t max_letters) {
  // Within one length, '#' sorts after both letters, so an earlier '#'
  // position sorts later when the prefixes agree.
  std::vector<MarkedWord> out;
  const auto words = words_up_to(max_letters);
  std::size_t begin = 0;
  for (std::size_t len = 0; len <= max_letters; ++len) {
    std::size_t end = begin;
    while (end < words.size() && words[end].size() == len) ++end;
    std::vector<std::pair<std::vector<int>, MarkedWord>> keyed;
    for (std::size_t w = begin; w < end; ++w) {
      for (std::size_t cut = 0; cut <= len; ++cut) {
        std::vector<int> key;
        for (std::size_t p = 0; p < len; ++p) {
          if (p == cut) key.push_back(2);
          key.push_back(words[w][p].inverted ? 1 : 0);
        }
        if (cut == len) key.push_back(2);
        MarkedWord mw{Word(words[w].begin(), words[w].begin() + cut),
                      Word(words[w].begin() + cut, words[w].end())};
        keyed.emplace_back(std::move(key), std::move(mw));
      }
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, mw] : keyed) out.push_back(std::move(mw));
    begin = end;
  }
  return out;
}

std::vector<std::pair<Word, Word>> word_pairs_up_to(std::size_t max_total) {
  const auto words = words_up_to(max_total);
  // words is length-lex, so slicing by length keeps each slice sorted.
  std::vector<std::size_t> start(max_total + 2, words.size());
  for (std::size_t i = words.size(); i-- > 0;) start[words[i].size()] = i;
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t total = 0; total <= max_total; ++total) {
    for (std::size_t lu = 0; lu <= total; ++lu) {
      const std::size_t lv = total - lu;
      for (std::size_t a = start[lu]; a < start[lu + 1]; ++a) {
        for (std::size_t b = start[lv]; b < start[lv + 1]; ++b) {
          out.emplace_back(words[a], words[b]);
        }
      }
    }
  }
  return out;
}

}  // namespace fim::machines
