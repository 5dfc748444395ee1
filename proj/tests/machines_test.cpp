#include <doctest.h>

#include <algorithm>

#include "fim/engines/csa.hpp"
#include "fim/engines/grammar.hpp"
#include "fim/engines/pda.hpp"
#include "fim/equality.hpp"
#include "fim/errors.hpp"
#include "fim/machines/catalog.hpp"
#include "fim/machines/crosscheck.hpp"
#include "fim/machines/csas.hpp"
#include "fim/machines/deciders.hpp"
#include "fim/machines/enumeration.hpp"
#include "fim/machines/grammars.hpp"
#include "fim/machines/oracles.hpp"
#include "fim/machines/pdas.hpp"
#include "fim/machines/witnesses.hpp"
#include "support/independent.hpp"

using namespace fim;
using namespace fim::machines;
using engines::TwoTapeInput;

namespace {

Word w(std::string_view s) { return parse_word(s, 1); }
MarkedWord mw(std::string_view s) { return parse_marked(s, 1); }

bool accepts(const engines::GrammarSpec& g, std::string_view s) { return engines::cfg_member(g, s); }
bool accepts(const engines::PdaSpec& p, std::string_view u, std::string_view v) {
  return engines::pda_accepts(p, TwoTapeInput{w(u), w(v)});
}

}  // namespace

TEST_CASE("enumeration order and counts") {
  const auto words = words_up_to(3);
  CHECK(words.size() == 15);
  CHECK(words[0].empty());
  CHECK(words[1] == w("x"));
  CHECK(words[2] == w("X"));
  CHECK(words[3] == w("xx"));
  CHECK(words_up_to(2, 2).size() == 1 + 4 + 16);
  const auto marked = marked_words_up_to(1);
  REQUIRE(marked.size() == 5);
  CHECK(to_text(marked[0], 1) == "#");
  CHECK(to_text(marked[1], 1) == "x#");
  CHECK(to_text(marked[2], 1) == "X#");
  CHECK(to_text(marked[3], 1) == "#x");
  CHECK(to_text(marked[4], 1) == "#X");
  const auto pairs = word_pairs_up_to(2);
  CHECK(pairs.size() == 1 + 4 + 12);
  CHECK(pairs[1] == std::pair{Word{}, w("x")});
}

TEST_CASE("idempotent grammars") {
  const auto plus = build_gamma_plus(), minus = build_gamma_minus();
  CHECK(accepts(plus, ""));
  CHECK(accepts(plus, "xXxX"));
  CHECK_FALSE(accepts(plus, "Xx"));
  CHECK(accepts(minus, "Xx"));
  for (const auto& word : words_up_to(10)) {
    const auto t = oracle::walk(word);
    const auto s = to_text(word, 1);
    REQUIRE(accepts(plus, s) == (t.mu == 0 && t.lambda == 0));
    REQUIRE(accepts(minus, s) == (t.mu == 0 && t.nu == 0));
  }
}

TEST_CASE("gamma_nu and gamma_lambda") {
  const auto nu = build_gamma_nu(), lambda = build_gamma_lambda();
  CHECK(accepts(nu, "#"));
  CHECK(accepts(nu, "x#X"));
  CHECK_FALSE(accepts(nu, "x#x"));
  CHECK(accepts(lambda, "#"));
  CHECK(accepts(lambda, "X#x"));
  CHECK_FALSE(accepts(lambda, "X#X"));
  for (const auto& m : marked_words_up_to(8)) {
    const auto tu = oracle::walk(m.left), tv = oracle::walk(oracle::invert(m.right));
    const auto s = to_text(m, 1);
    REQUIRE(accepts(nu, s) == (tu.nu == tv.nu && tu.mu == tv.mu));
    REQUIRE(accepts(lambda, s) == (tu.lambda == tv.lambda && tu.mu == tv.mu));
  }
  CHECK(wp_member_via_2cf(mw("x#X")));
  CHECK_FALSE(wp_member_via_2cf(mw("xX#")));
}

TEST_CASE("reversed grammar") {
  const auto g = reversed(build_gamma_plus());
  CHECK(accepts(g, "Xx"));
  CHECK_FALSE(accepts(g, "xX"));
  const auto r = reversed(engines::GrammarSpec{{"S"}, {"a", "b"}, "S", {{"S", {"a", "b"}}}});
  CHECK(engines::cfg_member(r, "ba"));
  CHECK_FALSE(engines::cfg_member(r, "ab"));
}

TEST_CASE("co-word problem grammars") {
  const auto g = build_cowp_grammars();
  CHECK(accepts(g.fixed, "x#x"));
  CHECK_FALSE(accepts(g.fixed, "x#X"));
  CHECK(accepts(g.fixed, "xX#"));
  CHECK(accepts(g.fixed, "xxxXX#xXX"));
  CHECK_FALSE(accepts(g.verbatim, "x#x"));
  CHECK_FALSE(accepts(g.verbatim, "xxxXX#xXX"));
  for (const auto& m : marked_words_up_to(8)) {
    REQUIRE(accepts(g.fixed, to_text(m, 1)) == !oracle::wp(m));
  }
  // The printed grammar also derives strings with no '#'; the ones with a
  // single '#' are genuine co-word-problem members.
  std::size_t unmarked = 0;
  for (const auto& s : engines::cfg_enumerate(g.verbatim, 8)) {
    const auto marks = std::count(s.begin(), s.end(), std::string("#"));
    if (marks == 1) {
      REQUIRE_FALSE(wp_member(mw(engines::join(s)), 1));
    } else {
      REQUIRE(marks == 0);
      ++unmarked;
    }
  }
  CHECK(unmarked > 0);
  CHECK(accepts(g.verbatim, "x"));
}

TEST_CASE("marker variants place exactly one marker") {
  const engines::GrammarSpec g{{"A"}, {"a"}, "A", {{"A", {"a", "A"}}, {"A", {}}}};
  auto marked = with_marker_variants(g, {"A"}, "#");
  marked.start = "A#";
  const auto listed = engines::cfg_enumerate(marked, 3);
  CHECK(listed.size() == 1 + 2 + 3);
  for (const auto& s : listed) {
    CHECK(std::count(s.begin(), s.end(), std::string("#")) == 1);
  }
}

TEST_CASE("A_nu and A_lambda") {
  const auto a = build_pda_A_nu(), b = build_pda_A_lambda();
  CHECK(accepts(a, "", ""));
  CHECK(accepts(a, "Xxx", "x"));
  CHECK_FALSE(accepts(a, "x", ""));
  for (const auto& [u, v] : word_pairs_up_to(8)) {
    const auto tu = oracle::walk(u), tv = oracle::walk(v);
    REQUIRE(engines::pda_accepts(a, TwoTapeInput{u, v}) == (tu.nu == tv.nu && tu.mu == tv.mu));
    REQUIRE(engines::pda_accepts(b, TwoTapeInput{u, v}) ==
            (tu.lambda == tv.lambda && tu.mu == tv.mu));
  }
}

TEST_CASE("B machines") {
  const auto mu = build_pda_B_mu(), nu = build_pda_B_nu(), lambda = build_pda_B_lambda();
  CHECK(accepts(mu, "x", ""));
  CHECK_FALSE(accepts(nu, "x", "Xxx"));
  CHECK(accepts(nu, "", "x"));
  CHECK(accepts(nu, "xX", ""));
  CHECK_FALSE(cowp_iota_member(w("x"), w("x")));
  CHECK(cowp_iota_member(w("xX"), w("Xx")));
  CHECK(accepts(lambda, "xX", "Xx"));
  for (const auto& [u, v] : word_pairs_up_to(8)) {
    const auto tu = oracle::walk(u), tv = oracle::walk(v);
    const TwoTapeInput in{u, v};
    REQUIRE(engines::pda_accepts(mu, in) == (tu.mu != tv.mu));
    REQUIRE(engines::pda_accepts(nu, in) == (tu.nu != tv.nu));
    REQUIRE(engines::pda_accepts(lambda, in) == (tu.lambda != tv.lambda));
  }
}

TEST_CASE("printed B_nu misses pairs the repaired machine accepts") {
  const auto verbatim = build_pda_B_nu_verbatim();
  const auto fixed = build_pda_B_nu();
  CHECK_FALSE(accepts(verbatim, "xX", ""));
  CHECK(accepts(fixed, "xX", ""));
  for (const auto& [u, v] : word_pairs_up_to(6)) {
    const TwoTapeInput in{u, v};
    if (engines::pda_accepts(verbatim, in)) REQUIRE(engines::pda_accepts(fixed, in));
  }
}

TEST_CASE("checking stack machines") {
  CHECK(csa_wp_accepts(mw("#")));
  CHECK(csa_wp_accepts(mw("x#X")));
  CHECK(csa_wp_accepts(mw("xXx#X")));
  CHECK_FALSE(csa_wp_accepts(mw("xX#")));
  CHECK(csa_iota_accepts({}, {}));
  CHECK(csa_iota_accepts(w("xXx"), w("x")));
  CHECK_FALSE(csa_iota_accepts(w("x"), w("X")));
  CHECK(bottom_endpoint_cells() == std::vector<std::string>{"L-", "O-", "O+-"});
  CHECK(top_endpoint_cells() == std::vector<std::string>{"R+", "O+", "O+-"});

  const auto verbatim = build_csa_wp_verbatim();
  CHECK_FALSE(engines::csa_accepts(verbatim, "x#X", 2));
  CHECK(engines::csa_accepts(verbatim, "#", 0));
}

TEST_CASE("witness families") {
  CHECK(to_text(witness_wn(0), 1) == "#");
  CHECK(to_text(witness_wn(1), 1) == "xXx#X");
  for (int n = 0; n <= 30; ++n) CHECK(oracle::wp(witness_wn(n)));

  const PumpingCase row1{PumpForm::First, 5, 1, 0, 1};
  CHECK(predicted_nonmember(row1));
  CHECK_FALSE(pumping_case_member(row1));
  const PumpingCase row3{PumpForm::Third, 5, 0, 1, -1};
  CHECK(predicted_nonmember(row3));
  CHECK_FALSE(pumping_case_member(row3));
  const PumpingCase same{PumpForm::First, 5, 1, 1, 0};
  CHECK(pumping_case_member(same));
  CHECK(pumping_word(same) == witness_wn(5));
  CHECK_FALSE(PumpingCase{PumpForm::First, 5, 0, 0, 1}.valid());
  CHECK_THROWS_AS(pumping_word(PumpingCase{PumpForm::First, 5, 0, 0, 1}), InvalidInput);

  CHECK(to_text(witness_Lk(2, {0, 0}, {0, 0}), 2) == "#");
  CHECK(wp_member(witness_Lk(2, {1, 2}, {1, 2}), 2));
  CHECK_FALSE(wp_member(witness_Lk(2, {1, 2}, {2, 1}), 2));
  CHECK_THROWS_AS(witness_Lk(1, {1}, {1}), InvalidInput);
}

TEST_CASE("catalog") {
  const auto& c = catalog();
  for (const char* name : {"gamma_plus", "gamma_minus", "gamma_nu", "gamma_lambda",
                           "cowp_grammar_verbatim", "cowp_grammar_fixed", "pda_A_nu",
                           "pda_A_lambda", "pda_B_mu", "pda_B_nu", "pda_B_lambda", "csa_wp",
                           "csa_iota"}) {
    CHECK(find_entry(name).name == name);
  }
  CHECK_THROWS_AS(find_entry("nope"), InvalidInput);
  for (const auto& e : c) {
    CHECK(e.accepts);
    CHECK(e.oracle);
  }
  CHECK(find_entry("csa_wp").annotation.find("{O-,R-}") != std::string::npos);
  const auto& pairs = find_entry("pda_A_nu");
  CHECK(format_sample(parse_sample(pairs.domain, "xX,x")) == "xX,x");
  CHECK_THROWS_AS(parse_sample(pairs.domain, "xX"), ParseError);
}

TEST_CASE("crosscheck reports") {
  const auto r = crosscheck(find_entry("gamma_plus"), 8);
  CHECK(r.tested == 511);
  CHECK(r.passed());
  CHECK(to_tsv(r) == "report\tgamma_plus\tE+\t8\t511\t0\tpass\n");
  CHECK(crosscheck(find_entry("csa_wp"), 7).passed());

  const auto verbatim = crosscheck(find_entry("cowp_grammar_verbatim"), 6);
  CHECK_FALSE(verbatim.passed());
  CHECK(to_tsv(verbatim).find("mismatch\tx#\treject\taccept\n") != std::string::npos);
}

TEST_CASE("crosscheck is independent of the worker count") {
  for (const char* name : {"cowp_grammar_verbatim", "pda_B_nu_verbatim", "csa_wp_verbatim"}) {
    const auto& e = find_entry(name);
    const auto one = to_tsv(crosscheck(e, 6, 1));
    CHECK(to_tsv(crosscheck(e, 6, 3)) == one);
    CHECK(to_tsv(crosscheck(e, 6, 8)) == one);
  }
}

TEST_CASE("every non-reference entry agrees with its oracle") {
  for (const auto& e : catalog()) {
    if (e.status == Status::Reference) continue;
    const std::size_t bound = e.domain == Domain::Words ? 10 : 7;
    const auto r = crosscheck(e, bound);
    CHECK_MESSAGE(r.passed(), to_text(r));
  }
}
