#include "fim/engines/pda.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "fim/errors.hpp"

namespace fim::engines {

namespace {

std::string letter_text(Letter a) { return to_text(Word{a}, 1); }

template <class Range>
std::set<std::string> as_set(const Range& r) {
  return {r.begin(), r.end()};
}

}  // namespace

void PdaSpec::validate() const {
  const auto st = as_set(states);
  const auto sa = as_set(stack_alphabet);
  if (tapes != 1 && tapes != 2) throw ConfigError("tapes must be 1 or 2");
  if (!st.contains(initial)) throw ConfigError("undeclared initial state '" + initial + "'");
  for (const auto& f : finals) {
    if (!st.contains(f)) throw ConfigError("undeclared final state '" + f + "'");
  }
  if (!sa.contains(bottom)) throw ConfigError("undeclared bottom symbol '" + bottom + "'");
  for (const auto& t : transitions) {
    if (!st.contains(t.from) || !st.contains(t.to)) {
      throw ConfigError("transition uses undeclared state " + t.from + " / " + t.to);
    }
    if (!sa.contains(t.top)) throw ConfigError("undeclared stack symbol '" + t.top + "'");
    for (const auto& s : t.push) {
      if (!sa.contains(s)) throw ConfigError("undeclared stack symbol '" + s + "'");
    }
    const auto& a = t.action;
    if (a.kind == InputAction::Kind::Tape && (a.tape < 1 || a.tape > tapes)) {
      throw ConfigError("transition reads tape " + std::to_string(a.tape));
    }
    if (a.kind == InputAction::Kind::Both && tapes != 2) {
      throw ConfigError("joint read on a one-tape machine");
    }
  }
}

std::string PdaSpec::to_table() const {
  std::ostringstream out;
  for (const auto& t : transitions) {
    out << '(' << t.from << ", ";
    switch (t.action.kind) {
      case InputAction::Kind::Epsilon: out << "ε"; break;
      case InputAction::Kind::Tape:
        out << letter_text(t.action.letter);
        if (tapes == 2) out << '@' << t.action.tape;
        break;
      case InputAction::Kind::Both:
        out << '(' << letter_text(t.action.letter) << ','
            << letter_text(t.action.letter) << ')';
        break;
    }
    out << ", " << t.top << ") -> (" << t.to << ", ";
    if (t.push.empty()) out << "ε";
    for (std::size_t i = 0; i < t.push.size(); ++i) out << (i ? " " : "") << t.push[i];
    out << ")\n";
  }
  return out.str();
}

namespace {

struct Rule {
  int to;
  InputAction::Kind kind;
  int tape;
  Letter letter;
  std::vector<int> push;  // top-first
};

struct Config {
  int state;
  std::size_t pos1;
  std::size_t pos2;
  std::vector<int> stack;  // bottom-first

  bool operator==(const Config&) const = default;
};

struct ConfigHash {
  std::size_t operator()(const Config& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.state) * 1000003u;
    h ^= c.pos1 * 7919u + c.pos2 * 104729u;
    for (int s : c.stack) h = h * 31u + static_cast<std::size_t>(s);
    return h;
  }
};

bool run(const PdaSpec& p, const Word& t1, const Word& t2) {
  p.validate();
  std::map<std::string, int> state_code, symbol_code;
  for (std::size_t i = 0; i < p.states.size(); ++i) state_code[p.states[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < p.stack_alphabet.size(); ++i) symbol_code[p.stack_alphabet[i]] = static_cast<int>(i);

  // rules[state][top]
  std::vector<std::vector<std::vector<Rule>>> rules(
      p.states.size(), std::vector<std::vector<Rule>>(p.stack_alphabet.size()));
  for (const auto& t : p.transitions) {
    Rule r{state_code.at(t.to), t.action.kind, t.action.tape, t.action.letter, {}};
    for (const auto& s : t.push) r.push.push_back(symbol_code.at(s));
    rules[state_code.at(t.from)][symbol_code.at(t.top)].push_back(std::move(r));
  }
  std::vector<bool> is_final(p.states.size(), false);
  for (const auto& f : p.finals) is_final[state_code.at(f)] = true;
  const int bottom = symbol_code.at(p.bottom);

  const std::size_t height_cap = t1.size() + t2.size() + 2;
  const std::size_t eps_cap =
      p.states.size() * p.stack_alphabet.size() * (height_cap + 1);

  auto accepting = [&](const Config& c) {
    if (c.pos1 != t1.size() || c.pos2 != t2.size()) return false;
    if (p.acceptance == Acceptance::FinalState) return static_cast<bool>(is_final[c.state]);
    return c.stack.empty() || (c.stack.size() == 1 && c.stack[0] == bottom);
  };

  struct Entry {
    Config config;
    std::size_t eps_run;
  };
  std::unordered_set<Config, ConfigHash> visited;
  std::deque<Entry> frontier;
  Config start{state_code.at(p.initial), 0, 0, {bottom}};
  visited.insert(start);
  frontier.push_back({start, 0});

  while (!frontier.empty()) {
    Entry e = std::move(frontier.front());
    frontier.pop_front();
    const Config& c = e.config;
    if (accepting(c)) return true;
    if (c.stack.empty()) continue;

    for (const Rule& r : rules[c.state][c.stack.back()]) {
      Config next{r.to, c.pos1, c.pos2, c.stack};
      switch (r.kind) {
        case InputAction::Kind::Epsilon:
          break;
        case InputAction::Kind::Tape: {
          const Word& tape = r.tape == 1 ? t1 : t2;
          std::size_t& pos = r.tape == 1 ? next.pos1 : next.pos2;
          if (pos >= tape.size() || tape[pos] != r.letter) continue;
          ++pos;
          break;
        }
        case InputAction::Kind::Both:
          if (next.pos1 >= t1.size() || t1[next.pos1] != r.letter) continue;
          if (next.pos2 >= t2.size() || t2[next.pos2] != r.letter) continue;
          ++next.pos1;
          ++next.pos2;
          break;
      }
      next.stack.pop_back();
      for (auto it = r.push.rbegin(); it != r.push.rend(); ++it) next.stack.push_back(*it);
      if (next.stack.size() > height_cap) {
        throw ResourceError("stack height exceeded " + std::to_string(height_cap));
      }
      const std::size_t eps_run =
          r.kind == InputAction::Kind::Epsilon ? e.eps_run + 1 : 0;
      if (eps_run > eps_cap) {
        throw ResourceError("ε-chain exceeded " + std::to_string(eps_cap) + " steps");
      }
      if (visited.insert(next).second) frontier.push_back({std::move(next), eps_run});
    }
  }
  return false;
}

}  // namespace

bool pda_accepts(const PdaSpec& p, const Word& input) {
  if (p.tapes != 1) throw InvalidInput("machine has two tapes; pass a TwoTapeInput");
  return run(p, input, Word{});
}

bool pda_accepts(const PdaSpec& p, const TwoTapeInput& input) {
  if (p.tapes != 2) throw InvalidInput("machine has one tape; pass a Word");
  return run(p, input.tape1, input.tape2);
}

}  // namespace fim::engines
