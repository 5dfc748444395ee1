#pragma once

#include <cstdint>
#include <vector>

#include "fim/word.hpp"

namespace fim::machines {

/// x^n x̄^n x^n # x̄^n, in WP(FIM_1) for every n.
MarkedWord witness_wn(std::int64_t n);

/// The three pumped shapes of witness_wn:
///   1: x^(n+im) x̄^(n+jm) x^n     # x̄^n
///   2: x^n     x̄^(n+im) x^(n+jm) # x̄^n
///   3: x^n     x̄^n     x^(n+im) # x̄^(n+jm)
enum class PumpForm { First = 1, Second = 2, Third = 3 };

struct PumpingCase {
  PumpForm form = PumpForm::First;
  std::int64_t n = 1;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t m = 0;

  /// n >= 1, i, j >= 0 and not both zero, m >= -1, every exponent >= 0.
  bool valid() const noexcept;
};

/// Throws InvalidInput when the case is not valid().
MarkedWord pumping_word(const PumpingCase& c);

/// wp_member of the instantiated word.
bool pumping_case_member(const PumpingCase& c);

/// Whether the non-membership table claims this case lies outside WP:
///   forms 1, 2: (i != 0 and m >= 1) or (i = 0 and j != 0 and m >= 1)
///   form 3:     (j != 0 and m = -1) or (j = 0 and i != 0 and m >= 1)
bool predicted_nonmember(const PumpingCase& c);

/// x_1^m1 x̄_1^m1 ... x_k^mk x̄_k^mk # x_1^n1 x̄_1^n1 ... x_k^nk x̄_k^nk over
/// rank k. Requires k >= 2, both exponent lists of length k, all >= 0.
MarkedWord witness_Lk(int k, const std::vector<std::int64_t>& m,
                      const std::vector<std::int64_t>& n);

}  // namespace fim::machines
