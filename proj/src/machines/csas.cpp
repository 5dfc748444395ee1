#include "fim/machines/csas.hpp"

#include <optional>

namespace fim::machines {

namespace {

using engines::CsaSetupRule;
using engines::CsaTransition;
using engines::PointerMove;

struct Cell {
  char base;  // 'L', 'O' or 'R'
  bool bottom;
  bool top;
  bool mu = false;

  std::string name() const {
    std::string s(1, base);
    if (top) s += '+';
    if (bottom) s += '-';
    if (mu) s += '@';
    return s;
  }
};

// L, L+, L-, O, O+, O-, O+-, R, R+, R-, optionally doubled with the μ mark.
std::vector<Cell> cells(bool with_mu) {
  std::vector<Cell> out;
  for (bool mu : {false, true}) {
    if (mu && !with_mu) break;
    for (char base : {'L', 'O', 'R'}) {
      out.push_back({base, false, false, mu});
      out.push_back({base, false, true, mu});
      out.push_back({base, true, false, mu});
      if (base == 'O') out.push_back({base, true, true, mu});
    }
  }
  return out;
}

std::string phase_state(int phase, bool seen_bottom, bool seen_top) {
  std::string s = "q" + std::to_string(phase);
  if (seen_bottom && seen_top) return s + "*";
  if (seen_top) return s + "+";
  if (seen_bottom) return s + "-";
  return s;
}

std::vector<std::string> phase_states(int phase) {
  return {phase_state(phase, false, false), phase_state(phase, false, true),
          phase_state(phase, true, false), phase_state(phase, true, true)};
}

std::vector<std::string> names(const std::vector<Cell>& cs) {
  std::vector<std::string> out;
  for (const Cell& c : cs) out.push_back(c.name());
  return out;
}

// Writes [L^l O R^n] bottom to top with its endpoint marks; with `with_mu`,
// exactly one cell also carries '@'. Ends in `handoff` with the pointer on
// the top cell.
void add_setup(CsaSpec& c, bool with_mu, const std::string& handoff) {
  const std::vector<bool> mu_flags = with_mu ? std::vector<bool>{false, true} : std::vector<bool>{true};
  auto state = [&](const char* stage, bool marked) {
    return with_mu ? std::string(stage) + (marked ? "m" : "u") : std::string(stage);
  };
  for (bool marked : mu_flags) {
    for (const char* st : {"s0", "sL", "sO"}) c.setup_states.push_back(state(st, marked));
  }
  c.initial = state("s0", !with_mu);

  for (bool marked : mu_flags) {
    // Each write may place the μ mark if it is still free.
    auto emit = [&](const char* from, const char* to, Cell cell) {
      for (bool put : {false, true}) {
        if (put && (!with_mu || marked)) continue;
        cell.mu = put;
        const bool now = marked || put;
        const bool to_check = std::string(to) == "check";
        if (to_check && !now) continue;
        c.setup_rules.push_back(
            CsaSetupRule{state(from, marked), to_check ? handoff : state(to, now), cell.name()});
      }
    };
    emit("s0", "sL", {'L', true, false});
    emit("s0", "sO", {'O', true, false});
    emit("s0", "check", {'O', true, true});
    emit("sL", "sL", {'L', false, false});
    emit("sL", "sO", {'O', false, false});
    emit("sL", "check", {'O', false, true});
    emit("sO", "sO", {'R', false, false});
    emit("sO", "check", {'R', false, true});
  }
}

// Pointer starts on the top cell; walk down to the O cell.
void add_seek(CsaSpec& c, const std::vector<Cell>& cs) {
  c.check_states.push_back("seek");
  for (const Cell& cell : cs) {
    if (cell.base == 'R') c.transitions.push_back({"seek", 1, std::nullopt, cell.name(), "seek", PointerMove::Down});
    if (cell.base == 'O') c.transitions.push_back({"seek", 1, std::nullopt, cell.name(), "q1", PointerMove::Stay});
  }
}

// Letter moves for one phase reading `tape`. Moving off a cell records
// whether it was an endpoint.
void add_letter_moves(CsaSpec& c, const std::vector<Cell>& cs, int phase, int tape) {
  for (const Cell& cell : cs) {
    for (bool sb : {false, true}) {
      for (bool st : {false, true}) {
        const std::string from = phase_state(phase, sb, st);
        const std::string to = phase_state(phase, sb || cell.bottom, st || cell.top);
        if (!cell.top) c.transitions.push_back({from, tape, 'x', cell.name(), to, PointerMove::Up});
        if (!cell.bottom) c.transitions.push_back({from, tape, 'X', cell.name(), to, PointerMove::Down});
      }
    }
  }
}

// `symbol` read on a cell completing both endpoint visits moves to `to`.
template <class Pred>
void add_phase_exit(CsaSpec& c, const std::vector<Cell>& cs, int phase, int tape, char symbol,
                    const std::string& to, Pred cell_ok) {
  for (const Cell& cell : cs) {
    if (!cell_ok(cell)) continue;
    for (bool sb : {false, true}) {
      for (bool st : {false, true}) {
        if ((sb || cell.bottom) && (st || cell.top)) {
          c.transitions.push_back({phase_state(phase, sb, st), tape, symbol, cell.name(), to, PointerMove::Stay});
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> bottom_endpoint_cells() { return {"L-", "O-", "O+-"}; }
std::vector<std::string> top_endpoint_cells() { return {"R+", "O+", "O+-"}; }

CsaSpec build_csa_wp() {
  const auto cs = cells(false);
  CsaSpec c;
  c.stack_alphabet = names(cs);
  add_setup(c, false, "seek");
  add_seek(c, cs);
  for (int phase : {1, 2}) {
    for (const auto& s : phase_states(phase)) c.check_states.push_back(s);
  }
  c.check_states.push_back("f");
  c.finals = {"f"};

  add_letter_moves(c, cs, 1, 1);
  add_letter_moves(c, cs, 2, 1);
  c.transitions.push_back({"q1", 1, '#', "O+-", "q2*", PointerMove::Stay});
  add_phase_exit(c, cs, 1, 1, '#', "q2", [](const Cell&) { return true; });
  add_phase_exit(c, cs, 2, 1, '$', "f", [](const Cell& cell) { return cell.base == 'O'; });
  return c;
}

CsaSpec build_csa_wp_verbatim() {
  const auto cs = cells(false);
  CsaSpec c;
  c.stack_alphabet = names(cs);
  add_setup(c, false, "seek");
  add_seek(c, cs);
  for (int phase : {1, 2}) {
    for (const auto& s : phase_states(phase)) c.check_states.push_back(s);
  }
  c.check_states.push_back("f");
  c.finals = {"f"};

  const std::vector<std::string> plain{"L", "O", "R"};
  const std::vector<std::string> delta_minus{"O-", "R-"};
  const std::vector<std::string> delta_plus{"O+", "L+"};
  auto rule = [&](const std::string& from, char in, const std::string& sym, const std::string& to,
                  PointerMove m) { c.transitions.push_back({from, 1, in, sym, to, m}); };
  auto all_except = [&](std::initializer_list<const char*> excluded) {
    std::vector<std::string> out;
    for (const auto& n : c.stack_alphabet) {
      bool skip = false;
      for (const char* e : excluded) skip = skip || n == e;
      if (!skip) out.push_back(n);
    }
    return out;
  };

  rule("q1", '#', "O+-", "q2*", PointerMove::Stay);
  for (const std::string i : {"1", "2"}) {
    const std::string q = "q" + i;
    for (const auto& s : plain) rule(q, 'x', s, q, PointerMove::Up);
    for (const auto& s : plain) rule(q, 'X', s, q, PointerMove::Down);
    for (const auto& s : delta_minus) rule(q, 'x', s, q + "-", PointerMove::Up);
    for (const auto& s : delta_plus) rule(q, 'X', s, q + "+", PointerMove::Down);
    for (const auto& s : delta_minus) rule(q + "+", 'x', s, q + "*", PointerMove::Up);
    for (const auto& s : delta_plus) rule(q + "-", 'X', s, q + "*", PointerMove::Down);
    for (const auto& s : all_except({"R+", "O+", "O+-"})) rule(q + "*", 'x', s, q + "*", PointerMove::Up);
    for (const auto& s : all_except({"L-", "O-", "O+-"})) rule(q + "*", 'X', s, q + "*", PointerMove::Down);
  }
  for (const auto& s : c.stack_alphabet) rule("q1*", '#', s, "q2", PointerMove::Stay);
  for (const char* s : {"O", "O-", "O+", "O+-"}) rule("q2*", '$', s, "f", PointerMove::Stay);
  return c;
}

CsaSpec build_csa_iota() {
  const auto cs = cells(true);
  CsaSpec c;
  c.tapes = 2;
  c.stack_alphabet = names(cs);
  add_setup(c, true, "seek");
  add_seek(c, cs);
  for (const auto& s : phase_states(1)) c.check_states.push_back(s);
  c.check_states.push_back("r");
  for (const auto& s : phase_states(2)) c.check_states.push_back(s);
  c.check_states.push_back("f");
  c.finals = {"f"};

  add_letter_moves(c, cs, 1, 1);
  add_letter_moves(c, cs, 2, 2);
  auto at_mu = [](const Cell& cell) { return cell.mu; };
  add_phase_exit(c, cs, 1, 1, '$', "r", at_mu);
  // Return to O between the tapes.
  for (const Cell& cell : cs) {
    const PointerMove m = cell.base == 'R' ? PointerMove::Down : cell.base == 'L' ? PointerMove::Up : PointerMove::Stay;
    c.transitions.push_back({"r", 1, std::nullopt, cell.name(), cell.base == 'O' ? "q2" : "r", m});
  }
  add_phase_exit(c, cs, 2, 2, '$', "f", at_mu);
  return c;
}

}  // namespace fim::machines
