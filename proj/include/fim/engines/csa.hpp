#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fim::engines {

enum class PointerMove { Up, Down, Stay };

/// Setup-phase step: from `from`, optionally write `write` on top of the
/// stack, then continue in `to`. When `to` is a check state the setup ends
/// and the pointer starts on the top cell.
struct CsaSetupRule {
  std::string from;
  std::string to;
  std::optional<std::string> write;
};

/// Checking-phase step. `input` is the consumed token on tape `tape`
/// (std::nullopt consumes nothing). Checking transitions never write.
struct CsaTransition {
  std::string from;
  int tape = 1;
  std::optional<char> input;
  std::string stack_symbol;
  std::string to;
  PointerMove move = PointerMove::Stay;
};

/// A checking stack automaton: a nondeterministic write-only setup phase
/// followed by a read-only pass over the input with a movable pointer.
/// Inputs are token strings ending in the end marker '$'.
struct CsaSpec {
  std::vector<std::string> setup_states;
  std::vector<std::string> check_states;
  std::string initial;  // a setup state
  std::vector<std::string> finals;
  std::vector<std::string> stack_alphabet;
  int tapes = 1;
  std::vector<CsaSetupRule> setup_rules;
  std::vector<CsaTransition> transitions;

  void validate() const;
  std::string to_table() const;
};

/// Stack storage with the checking-stack contract made observable: writes
/// are counted, and once sealed every further write is refused and counted
/// separately. Cells hold stack-symbol codes.
class CheckingStack {
 public:
  CheckingStack() = default;

  void write(int symbol);
  void seal() noexcept { sealed_ = true; }

  bool sealed() const noexcept { return sealed_; }
  std::size_t size() const noexcept { return cells_.size(); }
  int operator[](std::size_t i) const noexcept { return cells_[i]; }

  std::size_t writes() const noexcept { return writes_; }
  std::size_t refused_writes() const noexcept { return refused_writes_; }

 private:
  std::vector<int> cells_;
  bool sealed_ = false;
  std::size_t writes_ = 0;
  std::size_t refused_writes_ = 0;
};

struct CsaRunStats {
  std::size_t setups_tried = 0;
  std::size_t setup_writes = 0;
  std::size_t writes_after_reading = 0;
};

struct CsaResult {
  bool accepted = false;
  CsaRunStats stats;
};

/// Try every setup whose stack has at most stack_bound + 1 cells, then search
/// the checking phase. A '$' is appended to each tape that lacks one.
/// Search stops at the first accepting setup.
CsaResult csa_run(const CsaSpec& c, const std::vector<std::string>& tapes,
                  std::size_t stack_bound);

bool csa_accepts(const CsaSpec& c, std::string_view input,
                 std::size_t stack_bound);
bool csa_accepts(const CsaSpec& c, std::string_view tape1,
                 std::string_view tape2, std::size_t stack_bound);

}  // namespace fim::engines
