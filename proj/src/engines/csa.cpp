#include "fim/engines/csa.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "fim/errors.hpp"

namespace fim::engines {

void CheckingStack::write(int symbol) {
  if (sealed_) {
    ++refused_writes_;
    throw std::logic_error("write to a checking stack after reading began");
  }
  ++writes_;
  cells_.push_back(symbol);
}

void CsaSpec::validate() const {
  const std::set<std::string> setup(setup_states.begin(), setup_states.end());
  const std::set<std::string> check(check_states.begin(), check_states.end());
  const std::set<std::string> alphabet(stack_alphabet.begin(), stack_alphabet.end());
  if (tapes != 1 && tapes != 2) throw ConfigError("tapes must be 1 or 2");
  for (const auto& s : setup) {
    if (check.contains(s)) throw ConfigError("state '" + s + "' is both setup and check");
  }
  if (!setup.contains(initial)) throw ConfigError("initial state must be a setup state");
  for (const auto& f : finals) {
    if (!check.contains(f)) throw ConfigError("final state '" + f + "' is not a check state");
  }
  for (const auto& r : setup_rules) {
    if (!setup.contains(r.from)) throw ConfigError("setup rule from non-setup state '" + r.from + "'");
    if (!setup.contains(r.to) && !check.contains(r.to)) throw ConfigError("undeclared state '" + r.to + "'");
    if (r.write && !alphabet.contains(*r.write)) throw ConfigError("undeclared stack symbol '" + *r.write + "'");
  }
  for (const auto& t : transitions) {
    if (!check.contains(t.from) || !check.contains(t.to)) {
      throw ConfigError("checking transition " + t.from + " -> " + t.to + " leaves the check states");
    }
    if (!alphabet.contains(t.stack_symbol)) throw ConfigError("undeclared stack symbol '" + t.stack_symbol + "'");
    if (t.tape < 1 || t.tape > tapes) throw ConfigError("transition reads tape " + std::to_string(t.tape));
  }
}

std::string CsaSpec::to_table() const {
  std::ostringstream out;
  for (const auto& r : setup_rules) {
    out << "setup " << r.from << " -> " << r.to;
    if (r.write) out << " write " << *r.write;
    out << '\n';
  }
  for (const auto& t : transitions) {
    out << '(' << t.from << ", ";
    if (t.input) out << *t.input; else out << "ε";
    if (tapes == 2) out << '@' << t.tape;
    out << ", " << t.stack_symbol << ") -> (" << t.to << ", "
        << (t.move == PointerMove::Up ? "up" : t.move == PointerMove::Down ? "down" : "-")
        << ")\n";
  }
  return out.str();
}

namespace {

struct Compiled {
  std::map<std::string, int> state;
  std::map<std::string, int> symbol;
  std::vector<bool> is_check;
  std::vector<bool> is_final;

  struct Step {
    int tape;
    int input;  // -1 for ε
    int to;
    PointerMove move;
  };
  std::vector<std::vector<std::vector<Step>>> steps;  // [state][symbol]

  struct SetupStep {
    int to;
    int write;  // -1 for none
  };
  std::vector<std::vector<SetupStep>> setup;  // [state]
  int initial = 0;
};

Compiled compile(const CsaSpec& c) {
  c.validate();
  Compiled k;
  for (const auto& s : c.setup_states) k.state.emplace(s, static_cast<int>(k.state.size()));
  for (const auto& s : c.check_states) k.state.emplace(s, static_cast<int>(k.state.size()));
  for (const auto& s : c.stack_alphabet) k.symbol.emplace(s, static_cast<int>(k.symbol.size()));
  const std::size_t n = k.state.size();
  k.is_check.assign(n, false);
  k.is_final.assign(n, false);
  for (const auto& s : c.check_states) k.is_check[k.state.at(s)] = true;
  for (const auto& s : c.finals) k.is_final[k.state.at(s)] = true;
  k.steps.assign(n, std::vector<std::vector<Compiled::Step>>(k.symbol.size()));
  for (const auto& t : c.transitions) {
    k.steps[k.state.at(t.from)][k.symbol.at(t.stack_symbol)].push_back(
        {t.tape, t.input ? static_cast<unsigned char>(*t.input) : -1,
         k.state.at(t.to), t.move});
  }
  k.setup.assign(n, {});
  for (const auto& r : c.setup_rules) {
    k.setup[k.state.at(r.from)].push_back(
        {k.state.at(r.to), r.write ? k.symbol.at(*r.write) : -1});
  }
  k.initial = k.state.at(c.initial);
  return k;
}

struct CheckConfig {
  int state;
  std::size_t pos1;
  std::size_t pos2;
  std::size_t pointer;

  bool operator==(const CheckConfig&) const = default;
};

struct CheckConfigHash {
  std::size_t operator()(const CheckConfig& c) const noexcept {
    return ((static_cast<std::size_t>(c.state) * 131u + c.pos1) * 131u + c.pos2) * 131u + c.pointer;
  }
};

bool check_phase(const Compiled& k, int start_state, const CheckingStack& stack,
                 const std::vector<std::string>& tapes) {
  const std::string& t1 = tapes[0];
  static const std::string kEmpty;
  const std::string& t2 = tapes.size() > 1 ? tapes[1] : kEmpty;

  std::unordered_set<CheckConfig, CheckConfigHash> visited;
  std::deque<CheckConfig> frontier;
  const CheckConfig start{start_state, 0, 0, stack.size() - 1};
  visited.insert(start);
  frontier.push_back(start);

  while (!frontier.empty()) {
    const CheckConfig c = frontier.front();
    frontier.pop_front();
    if (k.is_final[c.state] && c.pos1 == t1.size() && c.pos2 == t2.size()) return true;

    for (const auto& s : k.steps[c.state][stack[c.pointer]]) {
      CheckConfig next = c;
      next.state = s.to;
      if (s.input >= 0) {
        const std::string& tape = s.tape == 1 ? t1 : t2;
        std::size_t& pos = s.tape == 1 ? next.pos1 : next.pos2;
        if (pos >= tape.size() || static_cast<unsigned char>(tape[pos]) != s.input) continue;
        ++pos;
      }
      if (s.move == PointerMove::Up) {
        if (next.pointer + 1 >= stack.size()) continue;
        ++next.pointer;
      } else if (s.move == PointerMove::Down) {
        if (next.pointer == 0) continue;
        --next.pointer;
      }
      if (visited.insert(next).second) frontier.push_back(next);
    }
  }
  return false;
}

std::string with_end_marker(std::string_view s) {
  std::string out(s);
  if (out.empty() || out.back() != '$') out.push_back('$');
  return out;
}

}  // namespace

CsaResult csa_run(const CsaSpec& c, const std::vector<std::string>& raw_tapes,
                  std::size_t stack_bound) {
  if (static_cast<int>(raw_tapes.size()) != c.tapes) {
    throw InvalidInput("machine expects " + std::to_string(c.tapes) + " tape(s)");
  }
  const Compiled k = compile(c);
  std::vector<std::string> tapes;
  for (const auto& t : raw_tapes) tapes.push_back(with_end_marker(t));

  CsaResult result;
  std::set<std::pair<int, std::vector<int>>> explored;
  std::vector<int> written;
  const std::size_t max_cells = stack_bound + 1;

  // Depth-first over setup choices; each handoff builds the stack for one run.
  auto explore = [&](auto&& self, int state) -> bool {
    if (!explored.emplace(state, written).second) return false;
    for (const auto& r : k.setup[state]) {
      if (r.write >= 0) {
        if (written.size() >= max_cells) continue;
        written.push_back(r.write);
      }
      bool accepted = false;
      if (k.is_check[r.to]) {
        if (!written.empty()) {
          CheckingStack stack;
          for (int s : written) stack.write(s);
          stack.seal();
          ++result.stats.setups_tried;
          result.stats.setup_writes += stack.writes();
          accepted = check_phase(k, r.to, stack, tapes);
          result.stats.writes_after_reading += stack.refused_writes();
        }
      } else {
        accepted = self(self, r.to);
      }
      if (r.write >= 0) written.pop_back();
      if (accepted) return true;
    }
    return false;
  };
  result.accepted = explore(explore, k.initial);
  return result;
}

bool csa_accepts(const CsaSpec& c, std::string_view input, std::size_t stack_bound) {
  return csa_run(c, {std::string(input)}, stack_bound).accepted;
}

bool csa_accepts(const CsaSpec& c, std::string_view tape1, std::string_view tape2,
                 std::size_t stack_bound) {
  return csa_run(c, {std::string(tape1), std::string(tape2)}, stack_bound).accepted;
}

}  // namespace fim::engines
