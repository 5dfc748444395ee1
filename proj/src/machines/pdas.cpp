#include "fim/machines/pdas.hpp"

namespace fim::machines {

namespace {

using engines::Acceptance;
using engines::InputAction;
using engines::PdaTransition;

InputAction read(int tape, Letter a) { return InputAction::read(tape, a); }
InputAction eps() { return InputAction::epsilon(); }

}  // namespace

PdaSpec swap_letters(const PdaSpec& p) {
  PdaSpec out = p;
  for (PdaTransition& t : out.transitions) {
    if (t.action.kind != InputAction::Kind::Epsilon) t.action.letter = t.action.letter.inverse();
  }
  return out;
}

PdaSpec build_pda_A_nu() {
  PdaSpec p;
  p.states = {"q0", "q1"};
  p.initial = "q0";
  p.acceptance = Acceptance::EmptyStack;
  p.stack_alphabet = {"Z", "Y1", "Y2"};
  p.bottom = "Z";
  p.tapes = 2;
  auto& t = p.transitions;
  t.push_back({"q0", InputAction::read_both(kX), "Z", "q0", {"Z"}});
  t.push_back({"q1", InputAction::read_both(kXbar), "Z", "q1", {"Z"}});
  for (const char* q : {"q0", "q1"}) {
    for (int i : {1, 2}) {
      const std::string y = "Y" + std::to_string(i);
      t.push_back({q, read(i, kXbar), "Z", q, {y, "Z"}});
      t.push_back({q, read(i, kXbar), y, q, {y, y}});
      t.push_back({q, read(i, kX), y, q, {}});
    }
  }
  t.push_back({"q0", eps(), "Z", "q1", {"Z"}});
  return p;
}

PdaSpec build_pda_A_lambda() { return swap_letters(build_pda_A_nu()); }

PdaSpec build_pda_B_mu() {
  // The counter holds μ(u) - μ(v) as C^|d| over Z; the sign lives in the
  // state (p = non-negative, n = negative). Tape 1 is read in phase 1,
  // tape 2 in phase 2 with its letters counting the other way.
  PdaSpec p;
  p.states = {"p1", "n1", "p2", "n2", "f"};
  p.initial = "p1";
  p.finals = {"f"};
  p.acceptance = Acceptance::FinalState;
  p.stack_alphabet = {"Z", "C"};
  p.bottom = "Z";
  p.tapes = 2;
  auto& t = p.transitions;
  for (int phase : {1, 2}) {
    const std::string pos = "p" + std::to_string(phase);
    const std::string neg = "n" + std::to_string(phase);
    const Letter up = phase == 1 ? kX : kXbar;
    const Letter down = up.inverse();
    // +1
    t.push_back({pos, read(phase, up), "Z", pos, {"C", "Z"}});
    t.push_back({pos, read(phase, up), "C", pos, {"C", "C"}});
    t.push_back({neg, read(phase, up), "C", neg, {}});
    t.push_back({neg, read(phase, up), "Z", pos, {"C", "Z"}});
    // -1
    t.push_back({neg, read(phase, down), "Z", neg, {"C", "Z"}});
    t.push_back({neg, read(phase, down), "C", neg, {"C", "C"}});
    t.push_back({pos, read(phase, down), "C", pos, {}});
    t.push_back({pos, read(phase, down), "Z", neg, {"C", "Z"}});
  }
  for (const char* s : {"Z", "C"}) {
    t.push_back({"p1", eps(), s, "p2", {s}});
    t.push_back({"n1", eps(), s, "n2", {s}});
  }
  t.push_back({"p2", eps(), "C", "f", {"C"}});
  t.push_back({"n2", eps(), "C", "f", {"C"}});
  return p;
}

PdaSpec build_pda_B_nu_verbatim() {
  PdaSpec p;
  p.states = {"q0", "q1", "q2", "f"};
  p.initial = "q0";
  p.finals = {"f"};
  p.acceptance = Acceptance::FinalState;
  p.stack_alphabet = {"X", "Y", "Z"};
  p.bottom = "Z";
  p.tapes = 2;
  auto& t = p.transitions;
  // q0 leaves X^ν(u) Y^(ν(u)-μ(u)) on the stack.
  t.push_back({"q0", read(1, kX), "Z", "q0", {"X", "Z"}});
  t.push_back({"q0", read(1, kX), "X", "q0", {"X", "X"}});
  t.push_back({"q0", read(1, kX), "Y", "q0", {}});
  for (const char* s : {"X", "Y", "Z"}) t.push_back({"q0", read(1, kXbar), s, "q0", {"Y", s}});
  for (const char* s : {"X", "Y", "Z"}) t.push_back({"q0", eps(), s, "q1", {s}});
  // q1 drops the Y's.
  t.push_back({"q1", eps(), "Y", "q1", {}});
  t.push_back({"q1", read(2, kX), "X", "q2", {}});
  t.push_back({"q1", read(2, kXbar), "X", "q2", {"Y", "X"}});
  // q2 compares ν(v) against the remaining X's.
  t.push_back({"q2", read(2, kX), "Z", "f", {"Z"}});
  t.push_back({"q2", read(2, kX), "X", "q2", {}});
  t.push_back({"q2", read(2, kX), "Y", "q2", {}});
  for (const char* s : {"X", "Y", "Z"}) t.push_back({"q2", read(2, kXbar), s, "q2", {"Y", s}});
  t.push_back({"q2", eps(), "X", "f", {"X"}});
  return p;
}

PdaSpec build_pda_B_lambda_verbatim() { return swap_letters(build_pda_B_nu_verbatim()); }

PdaSpec build_pda_B_nu() {
  PdaSpec p = build_pda_B_nu_verbatim();
  p.states.insert(p.states.end(), {"q3", "g"});
  p.finals.push_back("g");
  auto& t = p.transitions;
  // Start comparing once the Y's are gone, even when ν(u) = 0 or v = ε.
  t.push_back({"q1", eps(), "X", "q2", {"X"}});
  t.push_back({"q1", eps(), "Z", "q2", {"Z"}});
  // ν(v) < ν(u) with v ending below its running maximum: discard the Y's
  // after the input is exhausted and look for a surviving X.
  t.push_back({"q2", eps(), "Y", "q3", {}});
  t.push_back({"q3", eps(), "Y", "q3", {}});
  t.push_back({"q3", eps(), "X", "f", {"X"}});
  // ν(v) > ν(u) detected mid-word: consume the rest of tape 2.
  t.push_back({"q2", read(2, kX), "Z", "g", {"Z"}});
  for (const char* s : {"X", "Y", "Z"}) {
    t.push_back({"g", read(2, kX), s, "g", {s}});
    t.push_back({"g", read(2, kXbar), s, "g", {s}});
  }
  return p;
}

PdaSpec build_pda_B_lambda() { return swap_letters(build_pda_B_nu()); }

}  // namespace fim::machines
