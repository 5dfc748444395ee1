#include "fim/word.hpp"

#include <algorithm>

#include "fim/errors.hpp"

namespace fim {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(Letter letter, std::size_t count) { return Word(count, letter); }

void check_rank(const Word& w, int rank) {
  for (const Letter& a : w) {
    if (a.generator < 1 || a.generator > rank) {
      throw InvalidInput("generator index " + std::to_string(a.generator) +
                         " outside rank " + std::to_string(rank));
    }
  }
}

namespace {

Letter parse_letter(char c, std::size_t pos, int rank) {
  if (rank == 1 && (c == 'x' || c == 'X')) return {1, c == 'X'};
  if (c >= 'a' && c <= 'z') {
    const int g = c - 'a' + 1;
    if (g > rank) throw ParseError(std::string("generator '") + c + "' exceeds rank " + std::to_string(rank), pos);
    return {g, false};
  }
  if (c >= 'A' && c <= 'Z') {
    const int g = c - 'A' + 1;
    if (g > rank) throw ParseError(std::string("generator '") + c + "' exceeds rank " + std::to_string(rank), pos);
    return {g, true};
  }
  throw ParseError(std::string("unexpected character '") + c + "'", pos);
}

void check_rank_arg(int rank) {
  if (rank < 1 || rank > 26) throw InvalidInput("rank must be in [1, 26]");
}

std::string_view strip_end_marker(std::string_view text) {
  if (!text.empty() && text.back() == '$') text.remove_suffix(1);
  return text;
}

Word parse_span(std::string_view text, std::size_t offset, int rank) {
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    w.push_back(parse_letter(text[i], offset + i, rank));
  }
  return w;
}

}  // namespace

Word parse_word(std::string_view text, int rank) {
  check_rank_arg(rank);
  return parse_span(strip_end_marker(text), 0, rank);
}

MarkedWord parse_marked(std::string_view text, int rank) {
  check_rank_arg(rank);
  text = strip_end_marker(text);
  const auto hash = text.find('#');
  if (hash == std::string_view::npos) {
    throw ParseError("expected a '#' separator", text.size());
  }
  const auto second = text.find('#', hash + 1);
  if (second != std::string_view::npos) {
    throw ParseError("more than one '#' separator", second);
  }
  return {parse_span(text.substr(0, hash), 0, rank),
          parse_span(text.substr(hash + 1), hash + 1, rank)};
}

std::string to_text(const Word& w, int rank) {
  std::string out;
  out.reserve(w.size());
  for (const Letter& a : w) {
    char c = rank == 1 ? 'x' : static_cast<char>('a' + a.generator - 1);
    if (a.inverted) c = static_cast<char>(c - 'a' + 'A');
    out.push_back(c);
  }
  return out;
}

std::string to_text(const MarkedWord& mw, int rank) {
  return to_text(mw.left, rank) + "#" + to_text(mw.right, rank);
}

}  // namespace fim
