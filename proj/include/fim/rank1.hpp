#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fim/word.hpp"

namespace fim {

/// An element of FIM_1 as a marked interval: the interval [-neg_extent,
/// pos_extent] containing zero, with the marked point `mark` inside it.
/// Written (-l, n, m).
struct Rank1Elem {
  std::int64_t neg_extent = 0;  // l
  std::int64_t pos_extent = 0;  // n
  std::int64_t mark = 0;        // m

  bool valid() const noexcept {
    return neg_extent >= 0 && pos_extent >= 0 && -neg_extent <= mark &&
           mark <= pos_extent;
  }

  bool is_idempotent() const noexcept { return mark == 0; }

  friend constexpr auto operator<=>(const Rank1Elem&,
                                    const Rank1Elem&) = default;
};

/// Evaluate a rank-1 word as the path it traces from 0: (-lambda, nu, mu).
/// Throws InvalidInput on any letter other than x / x̄.
Rank1Elem evaluate_rank1(const Word& w);

/// (-l, n, m)(-l', n', m') = (min(-l, m - l'), max(n, m + n'), m + m').
Rank1Elem multiply(const Rank1Elem& a, const Rank1Elem& b) noexcept;

inline Rank1Elem operator*(const Rank1Elem& a, const Rank1Elem& b) noexcept {
  return multiply(a, b);
}

/// The representative x^n x̄^(n+l) x^(l+m).
Word to_canonical_word(const Rank1Elem& e);

/// "(-l, n, m)", printing l unsigned so (0,1,0) reads "(-0, 1, 0)".
std::string to_string(const Rank1Elem& e);

}  // namespace fim
