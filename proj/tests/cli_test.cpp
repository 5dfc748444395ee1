#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fim/cli/commands.hpp"

using namespace fim::cli;

namespace {

struct Run {
  std::ostringstream out, err;
  Streams io() { return {out, err}; }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("eval") {
  Run a;
  CHECK(cmd_eval("xX", 1, a.io()) == kOk);
  CHECK(a.out.str() == "(-0, 1, 0)\n");
  Run b;
  CHECK(cmd_eval("", 1, b.io()) == kOk);
  CHECK(b.out.str() == "(-0, 0, 0)\n");
  Run c;
  CHECK(cmd_eval("aB", 2, c.io()) == kOk);
  CHECK(c.out.str() == "vertices 3, edges 2, omega aB\n");
  Run d;
  CHECK(cmd_eval("x?", 1, d.io()) == kUsage);
  CHECK(d.err.str().find("position 1") != std::string::npos);
}

TEST_CASE("eq and mul") {
  Run a;
  CHECK(cmd_eq("xXx", "x", 1, a.io()) == kOk);
  Run b;
  CHECK(cmd_eq("xX", "Xx", 1, b.io()) == kFail);
  CHECK(b.out.str() == "not equal\n");
  Run c;
  CHECK(cmd_mul({"XxxX", "XXxxx"}, 1, c.io()) == kOk);
  CHECK(c.out.str() == "(-2, 1, 1) xXXXxxx\n");
  Run d;
  CHECK(cmd_mul({"aB", "bA"}, 2, d.io()) == kOk);
  CHECK(d.out.str() == "vertices 3, edges 2, omega 1\n");
}

TEST_CASE("member") {
  Run a;
  CHECK(cmd_member("csa_wp", "x#X", false, std::nullopt, a.io()) == kOk);
  CHECK(a.out.str() == "accept\n");
  Run b;
  CHECK(cmd_member("gamma_nu", "#", false, std::nullopt, b.io()) == kOk);
  Run c;
  CHECK(cmd_member("gamma_plus", "Xx", false, std::nullopt, c.io()) == kFail);
  CHECK(c.out.str() == "reject\n");
  Run d;
  CHECK(cmd_member("nope", "x", false, std::nullopt, d.io()) == kUsage);
  Run e;
  CHECK(cmd_member("cowp_grammar_verbatim", "x#", true, std::nullopt, e.io()) == kFail);
  CHECK(e.out.str().find("disagreement") != std::string::npos);
  Run f;
  CHECK(cmd_member("iota_2pda", "xXx,x", true, std::nullopt, f.io()) == kOk);
  Run g;
  CHECK(cmd_member("csa_wp", "xx#XX", false, 1, g.io()) == kFail);
  Run h;
  CHECK(cmd_member("csa_wp", "xx#XX", false, 2, h.io()) == kOk);
}

TEST_CASE("crosscheck command") {
  const auto dir = std::filesystem::temp_directory_path() / "fimlab_cli_test";
  std::filesystem::create_directories(dir);
  Run a;
  CHECK(cmd_crosscheck("gamma_plus", 8, (dir / "plus.tsv").string(), 0, a.io()) == kOk);
  CHECK(a.out.str().find("511 strings tested") != std::string::npos);
  CHECK(slurp(dir / "plus.tsv") == "report\tgamma_plus\tE+\t8\t511\t0\tpass\n");
  Run b;
  CHECK(cmd_crosscheck("cowp_grammar_verbatim", 6, (dir / "v.tsv").string(), 2, b.io()) == kFail);
  CHECK(slurp(dir / "v.tsv").find("\tfail\n") != std::string::npos);
  Run c;
  CHECK(cmd_crosscheck("csa_wp", 7, std::nullopt, 0, c.io()) == kOk);
  Run d;
  CHECK(cmd_crosscheck("gamma_plus", 2, "/nonexistent/dir/x.tsv", 0, d.io()) == kFail);
  std::filesystem::remove_all(dir);
}

TEST_CASE("pump") {
  Run a;
  CHECK(cmd_pump({}, a.io()) == kOk);
  CHECK(a.out.str().find("CONTRADICTS") == std::string::npos);
  Run b;
  CHECK(cmd_pump({{3, 3}, {5, 5}, {0, 0}, {1, 1}, {-1, -1}}, b.io()) == kOk);
  CHECK(b.out.str().find("not in L, matches row 3") != std::string::npos);
  Run c;
  CHECK(cmd_pump({{1, 3}, {5, 8}, {0, 0}, {0, 0}, {-1, 3}}, c.io()) == kUsage);
  CHECK(c.err.str().find("not both zero") != std::string::npos);
  CHECK(parse_range("-1..3").lo == -1);
  CHECK(parse_range("4").hi == 4);
  CHECK_THROWS(parse_range("3..1"));
}

TEST_CASE("munn-dot and sample") {
  Run a;
  CHECK(cmd_munn_dot("xX", 1, std::nullopt, a.io()) == kOk);
  CHECK(a.out.str().find("\"1\" -> \"x\"") != std::string::npos);
  Run b;
  CHECK(cmd_munn_dot("", 1, std::nullopt, b.io()) == kOk);
  CHECK(b.out.str().find("->") == std::string::npos);
  Run c;
  CHECK(cmd_munn_dot("x", 1, "/nonexistent/dir/t.dot", c.io()) == kFail);
  Run d;
  CHECK(cmd_sample("gamma_plus", 4, std::nullopt, d.io()) == kOk);
  CHECK(d.out.str() == "ε\nxX\nxxXX\nxXxX\n");
  Run e;
  CHECK(cmd_sample("pda_A_nu", 4, std::nullopt, e.io()) == kUsage);
}
