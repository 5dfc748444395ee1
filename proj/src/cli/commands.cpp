#include "fim/cli/commands.hpp"

#include <charconv>
#include <fstream>

#include "fim/dot.hpp"
#include "fim/engines/csa.hpp"
#include "fim/equality.hpp"
#include "fim/errors.hpp"
#include "fim/machines/catalog.hpp"
#include "fim/machines/crosscheck.hpp"
#include "fim/machines/witnesses.hpp"
#include "fim/munn_tree.hpp"
#include "fim/rank1.hpp"

namespace fim::cli {

namespace {

using machines::Sample;

std::string shown(const std::string& s) { return s.empty() ? "ε" : s; }

std::string text_or_one(const Word& w, int rank) {
  return w.empty() ? "1" : to_text(w, rank);
}

void summarize(const MunnTree& t, std::ostream& out) {
  out << "vertices " << t.vertices().size() << ", edges " << t.edges().size() << ", omega "
      << text_or_one(t.end_vertex(), t.rank()) << '\n';
}

// Parse errors and bad arguments map to exit code 2.
template <class F>
int guarded(Streams io, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    io.err << "parse error: " << e.what() << '\n';
  } catch (const InvalidInput& e) {
    io.err << "error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    io.err << "resource limit: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

const char* verdict(bool b) { return b ? "accept" : "reject"; }

bool csa_with_bound(const machines::CatalogEntry& e, const Sample& s, std::size_t bound) {
  const auto& spec = std::get<engines::CsaSpec>(e.machine);
  if (const auto* mw = std::get_if<MarkedWord>(&s)) {
    return engines::csa_accepts(spec, to_text(*mw, 1), bound);
  }
  const auto& in = std::get<engines::TwoTapeInput>(s);
  return engines::csa_accepts(spec, to_text(in.tape1, 1), to_text(in.tape2, 1), bound);
}

}  // namespace

int cmd_eval(const std::string& word, int rank, Streams io) {
  return guarded(io, [&] {
    const Word w = parse_word(word, rank);
    if (rank == 1) {
      io.out << to_string(evaluate_rank1(w)) << '\n';
    } else {
      summarize(munn_tree(w, rank), io.out);
    }
    return kOk;
  });
}

int cmd_eq(const std::string& u, const std::string& v, int rank, Streams io) {
  return guarded(io, [&] {
    const bool eq = equal_in_fim(parse_word(u, rank), parse_word(v, rank), rank);
    io.out << (eq ? "equal" : "not equal") << '\n';
    return eq ? kOk : kFail;
  });
}

int cmd_mul(const std::vector<std::string>& words, int rank, Streams io) {
  return guarded(io, [&] {
    if (words.empty()) throw InvalidInput("mul needs at least one word");
    if (rank == 1) {
      Rank1Elem acc;
      for (const auto& w : words) acc = acc * evaluate_rank1(parse_word(w, 1));
      io.out << to_string(acc) << ' ' << shown(to_text(to_canonical_word(acc), 1)) << '\n';
    } else {
      MunnTree acc(rank);
      for (const auto& w : words) acc = acc * munn_tree(parse_word(w, rank), rank);
      summarize(acc, io.out);
    }
    return kOk;
  });
}

int cmd_munn_dot(const std::string& word, int rank, const std::optional<std::string>& out_path,
                 Streams io) {
  return guarded(io, [&] {
    const std::string dot = to_dot(munn_tree(parse_word(word, rank), rank));
    if (!out_path) {
      io.out << dot;
      return kOk;
    }
    std::ofstream f(*out_path);
    if (!(f << dot) || !f.flush()) {
      io.err << "cannot write " << *out_path << '\n';
      return kFail;
    }
    return kOk;
  });
}

int cmd_member(const std::string& machine, const std::string& input, bool with_oracle,
               std::optional<std::size_t> bound, Streams io) {
  return guarded(io, [&] {
    const auto& e = machines::find_entry(machine);
    const Sample s = machines::parse_sample(e.domain, input);
    const bool m = bound && std::holds_alternative<engines::CsaSpec>(e.machine)
                       ? csa_with_bound(e, s, *bound)
                       : e.accepts(s);
    io.out << verdict(m) << '\n';
    if (!with_oracle) return m ? kOk : kFail;
    const bool o = e.oracle(s);
    io.out << "oracle (" << e.oracle_name << "): " << verdict(o) << '\n';
    if (m != o) {
      io.out << "disagreement\n";
      return kFail;
    }
    return m ? kOk : kFail;
  });
}

int cmd_crosscheck(const std::string& machine, std::size_t bound,
                   const std::optional<std::string>& out_path, unsigned workers, Streams io) {
  return guarded(io, [&] {
    const auto& e = machines::find_entry(machine);
    const auto report = machines::crosscheck(e, bound, workers);
    io.out << machines::to_text(report);
    if (e.status == machines::Status::Reference && !report.passed()) {
      io.out << "(" << e.name << " is a reference transcription: " << e.annotation << ")\n";
    }
    if (out_path) {
      std::ofstream f(*out_path);
      if (!(f << machines::to_tsv(report)) || !f.flush()) {
        io.err << "cannot write " << *out_path << '\n';
        return kFail;
      }
    }
    return report.passed() ? kOk : kFail;
  });
}

Range parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
      throw InvalidInput("bad range '" + text + "'");
    }
    return v;
  };
  const std::string_view sv = text;
  const auto dots = sv.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = number(sv);
  } else {
    r.lo = number(sv.substr(0, dots));
    r.hi = number(sv.substr(dots + 2));
  }
  if (r.lo > r.hi) throw InvalidInput("empty range '" + text + "'");
  return r;
}

int cmd_pump(const PumpRequest& req, Streams io) {
  return guarded(io, [&] {
    if (req.forms.lo < 1 || req.forms.hi > 3) throw InvalidInput("form must be 1, 2 or 3");
    std::size_t checked = 0, confirmed = 0, contradictions = 0, invalid = 0;
    for (auto f = req.forms.lo; f <= req.forms.hi; ++f) {
      for (auto n = req.n.lo; n <= req.n.hi; ++n) {
        for (auto i = req.i.lo; i <= req.i.hi; ++i) {
          for (auto j = req.j.lo; j <= req.j.hi; ++j) {
            for (auto m = req.m.lo; m <= req.m.hi; ++m) {
              const machines::PumpingCase c{static_cast<machines::PumpForm>(f), n, i, j, m};
              if (!c.valid()) {
                ++invalid;
                continue;
              }
              ++checked;
              const bool member = machines::pumping_case_member(c);
              const bool predicted = machines::predicted_nonmember(c);
              io.out << "form " << f << " n=" << n << " i=" << i << " j=" << j << " m=" << m
                     << ": " << (member ? "in L" : "not in L");
              if (predicted) {
                const bool ok = !member;
                (ok ? confirmed : contradictions) += 1;
                io.out << (ok ? ", matches row " : ", CONTRADICTS row ") << f;
              }
              io.out << '\n';
            }
          }
        }
      }
    }
    if (checked == 0) {
      throw InvalidInput("no valid case requested (need i, j not both zero and m >= -1)");
    }
    io.out << checked << " cases, " << confirmed << " table rows confirmed, " << contradictions
           << " contradicted";
    if (invalid) io.out << ", " << invalid << " invalid combinations skipped";
    io.out << '\n';
    return contradictions == 0 ? kOk : kFail;
  });
}

int cmd_sample(const std::string& grammar, std::size_t bound, std::optional<std::size_t> limit,
               Streams io) {
  return guarded(io, [&] {
    const auto& e = machines::find_entry(grammar);
    const auto* g = std::get_if<engines::GrammarSpec>(&e.machine);
    if (!g) throw InvalidInput("'" + grammar + "' is not a grammar");
    std::size_t printed = 0;
    for (const auto& w : engines::cfg_enumerate(*g, bound)) {
      if (limit && printed == *limit) break;
      io.out << shown(engines::join(w)) << '\n';
      ++printed;
    }
    return kOk;
  });
}

int cmd_list(Streams io) {
  for (const auto& e : machines::catalog()) {
    io.out << e.name << '\t' << machines::to_string(e.status) << '\t' << e.description << '\n';
  }
  return kOk;
}

}  // namespace fim::cli
