#include <iostream>

#include <CLI11.hpp>

#include "fim/cli/commands.hpp"

namespace cli = fim::cli;

int main(int argc, char** argv) {
  CLI::App app{"Free inverse monoid toolkit"};
  app.require_subcommand(1);
  const cli::Streams io{std::cout, std::cerr};
  int code = cli::kOk;

  int rank = 1;
  std::string word, other, machine, input, grammar;
  std::vector<std::string> words;
  std::optional<std::string> out;
  std::optional<std::size_t> bound_opt, limit;
  std::size_t bound = 0;
  bool with_oracle = false;
  unsigned workers = 0;
  std::string forms = "1..3", n = "5..8", i = "0..2", j = "0..2", m = "-1..3";

  auto* eval = app.add_subcommand("eval", "evaluate a word: (-l, n, m) in rank 1, tree summary otherwise");
  eval->add_option("word", word, "word text")->required();
  eval->add_option("--rank", rank)->check(CLI::Range(1, 26));
  eval->callback([&] { code = cli::cmd_eval(word, rank, io); });

  auto* eq = app.add_subcommand("eq", "decide u = v");
  eq->add_option("u", word)->required();
  eq->add_option("v", other)->required();
  eq->add_option("--rank", rank)->check(CLI::Range(1, 26));
  eq->callback([&] { code = cli::cmd_eq(word, other, rank, io); });

  auto* mul = app.add_subcommand("mul", "multiply words");
  mul->add_option("words", words)->required();
  mul->add_option("--rank", rank)->check(CLI::Range(1, 26));
  mul->callback([&] { code = cli::cmd_mul(words, rank, io); });

  auto* dot = app.add_subcommand("munn-dot", "render the Munn tree as Graphviz");
  dot->add_option("word", word)->required();
  dot->add_option("--rank", rank)->check(CLI::Range(1, 26));
  dot->add_option("--out", out, "output file (default stdout)");
  dot->callback([&] { code = cli::cmd_munn_dot(word, rank, out, io); });

  auto* member = app.add_subcommand("member", "query a catalog machine (pairs as \"u,v\")");
  member->add_option("machine", machine)->required();
  member->add_option("input", input)->required();
  member->add_flag("--oracle", with_oracle, "also print the oracle verdict");
  member->add_option("--bound", bound_opt, "stack bound for checking stack machines");
  member->callback([&] { code = cli::cmd_member(machine, input, with_oracle, bound_opt, io); });

  auto* cross = app.add_subcommand("crosscheck", "exhaustive comparison with the oracle");
  cross->add_option("machine", machine)->required();
  cross->add_option("bound,--bound", bound, "maximum number of letters")->required();
  cross->add_option("--out", out, "write the TSV report here");
  cross->add_option("--workers", workers, "threads (0 = all cores)");
  cross->callback([&] { code = cli::cmd_crosscheck(machine, bound, out, workers, io); });

  auto* pump = app.add_subcommand("pump", "reproduce the pumping table");
  pump->add_option("--form", forms, "forms, e.g. 3 or 1..3");
  pump->add_option("--n", n);
  pump->add_option("--i", i);
  pump->add_option("--j", j);
  pump->add_option("--m", m);
  pump->callback([&] {
    try {
      cli::PumpRequest req{cli::parse_range(forms), cli::parse_range(n), cli::parse_range(i),
                           cli::parse_range(j), cli::parse_range(m)};
      code = cli::cmd_pump(req, io);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      code = cli::kUsage;
    }
  });

  auto* sample = app.add_subcommand("sample", "list words generated by a catalog grammar");
  sample->add_option("grammar", grammar)->required();
  sample->add_option("--bound", bound, "maximum length")->default_val(6);
  sample->add_option("--limit", limit, "print at most this many");
  sample->callback([&] { code = cli::cmd_sample(grammar, bound, limit, io); });

  auto* list = app.add_subcommand("list", "list catalog machines");
  list->callback([&] { code = cli::cmd_list(io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }
  return code;
}
