#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "fim/dot.hpp"
#include "fim/equality.hpp"
#include "fim/errors.hpp"
#include "fim/machines/enumeration.hpp"
#include "fim/munn_tree.hpp"
#include "fim/rank1.hpp"
#include "fim/word.hpp"
#include "support/independent.hpp"

using namespace fim;

namespace {

Word w1(std::string_view s) { return parse_word(s, 1); }
Word w2(std::string_view s) { return parse_word(s, 2); }

Rank1Elem triple(std::int64_t l, std::int64_t n, std::int64_t m) { return {l, n, m}; }

Rank1Elem by_walk(const Word& w) {
  const auto t = oracle::walk(w);
  return {t.lambda, t.nu, t.mu};
}

}  // namespace

TEST_CASE("word text round trip") {
  CHECK(parse_word("", 1).empty());
  CHECK(parse_word("xX", 1) == Word{kX, kXbar});
  CHECK(parse_word("aA", 1) == Word{kX, kXbar});
  CHECK(parse_word("xX$", 1) == Word{kX, kXbar});
  CHECK(parse_word("aBc", 3) == Word{gen(1), inv(2), gen(3)});
  CHECK(to_text(Word{kX, kXbar}, 1) == "xX");
  CHECK(to_text(Word{gen(1), inv(2)}, 2) == "aB");
  const auto mw = parse_marked("xX#X", 1);
  CHECK(mw.left == Word{kX, kXbar});
  CHECK(mw.right == Word{kXbar});
  CHECK(to_text(mw, 1) == "xX#X");
}

TEST_CASE("word parse errors carry a position") {
  try {
    parse_word("ab?", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_word("abc", 2), InvalidInput);
  CHECK_THROWS_AS(parse_word("x#", 1), ParseError);
  CHECK_THROWS_AS(parse_marked("xX", 1), ParseError);
  CHECK_THROWS_AS(parse_marked("x##", 1), ParseError);
  CHECK_THROWS_AS(parse_word("", 0), InvalidInput);
}

TEST_CASE("word inverse") {
  CHECK(inverse(Word{}).empty());
  CHECK(inverse(w1("xx")) == w1("XX"));
  CHECK(inverse(Word{gen(1), inv(2), gen(1)}) == Word{inv(1), gen(2), inv(1)});
}

TEST_CASE("evaluate_rank1 examples") {
  CHECK(evaluate_rank1(w1("")) == triple(0, 0, 0));
  CHECK(evaluate_rank1(w1("xX")) == by_walk(w1("xX")));
  CHECK(evaluate_rank1(w1("xX")) == triple(0, 1, 0));
  CHECK(evaluate_rank1(w1("xXx")) == by_walk(w1("xXx")));
  CHECK(evaluate_rank1(w1("xXx")) == triple(0, 1, 1));
  CHECK_THROWS_AS(evaluate_rank1(w2("b")), InvalidInput);
}

TEST_CASE("multiply_rank1 examples") {
  const auto id = triple(0, 0, 0);
  const auto e = triple(3, 2, -1);
  CHECK(id * e == e);
  CHECK(e * id == e);

  const auto a = triple(1, 2, 1), b = triple(2, 3, 0);
  const auto expected = by_walk(concat(to_canonical_word(a), to_canonical_word(b)));
  CHECK(a * b == expected);
  CHECK(a * b == triple(1, 4, 1));

  const auto p = triple(0, 1, 0);
  CHECK(p * p == by_walk(concat(to_canonical_word(p), to_canonical_word(p))));
  CHECK(p * p == p);
  CHECK(to_string(p) == "(-0, 1, 0)");
}

TEST_CASE("to_canonical_word") {
  CHECK(to_canonical_word(triple(0, 0, 0)).empty());
  CHECK(to_canonical_word(triple(0, 1, 0)) == w1("xX"));
  CHECK(to_canonical_word(triple(2, 1, -1)) == w1("xXXXx"));
  CHECK(evaluate_rank1(w1("xXXXx")) == triple(2, 1, -1));
}

TEST_CASE("rank-1 round trip for l, n <= 30") {
  for (std::int64_t l = 0; l <= 30; ++l) {
    for (std::int64_t n = 0; n <= 30; ++n) {
      for (std::int64_t m = -l; m <= n; ++m) {
        const Rank1Elem e{l, n, m};
        REQUIRE(e.valid());
        REQUIRE(evaluate_rank1(to_canonical_word(e)) == e);
      }
    }
  }
}

TEST_CASE("rank-1 homomorphism and associativity on random input") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10000; ++k) {
    const Word u = oracle::random_word(rng, 1, 50), v = oracle::random_word(rng, 1, 50);
    const Word t = oracle::random_word(rng, 1, 50);
    const auto a = evaluate_rank1(u), b = evaluate_rank1(v), c = evaluate_rank1(t);
    REQUIRE(evaluate_rank1(concat(u, v)) == a * b);
    REQUIRE(a * (b * c) == (a * b) * c);
  }
}

TEST_CASE("munn_tree examples") {
  const auto trivial = munn_tree({}, 1);
  CHECK(trivial.vertices().size() == 1);
  CHECK(trivial.edges().empty());
  CHECK(trivial.end_vertex().empty());

  const auto t = munn_tree(w1("xX"), 1);
  CHECK(t.vertices() == std::set<Word>{{}, {kX}});
  CHECK(t.edges() == std::set<MunnEdge>{{{}, 1}});
  CHECK(t.end_vertex().empty());

  const auto r = munn_tree(w2("aB"), 2);
  CHECK(r.vertices() == std::set<Word>{{}, {gen(1)}, {gen(1), inv(2)}});
  CHECK(r.edges() == std::set<MunnEdge>{{{}, 1}, {{gen(1), inv(2)}, 2}});
  CHECK(r.end_vertex() == Word{gen(1), inv(2)});
  CHECK(r.is_valid());

  CHECK_THROWS_AS(munn_tree(w2("b"), 1), InvalidInput);
}

TEST_CASE("munn product") {
  const auto a = munn_tree(w2("aBBa"), 2);
  CHECK(a * MunnTree(2) == a);
  CHECK(MunnTree(2) * a == a);
  CHECK(munn_tree(w1("xX"), 1) * munn_tree(w1("Xx"), 1) == munn_tree(w1("xXXx"), 1));

  std::mt19937_64 rng(11);
  for (int k = 0; k < 2000; ++k) {
    const int rank = 1 + k % 3;
    const Word u = oracle::random_word(rng, rank, 20), v = oracle::random_word(rng, rank, 20);
    const auto product = munn_tree(u, rank) * munn_tree(v, rank);
    REQUIRE(product == munn_tree(concat(u, v), rank));
    REQUIRE(product.is_valid());
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce_product(w2("aB"), w2("bA")).empty());
  CHECK(free_reduce_product(w2("ab"), w2("Ba")) == w2("aa"));
  CHECK(is_freely_reduced(w2("abA")));
  CHECK_FALSE(is_freely_reduced(w2("aAb")));
}

TEST_CASE("equal_in_fim examples") {
  CHECK(equal_in_fim(w1("x"), w1("x"), 1));
  CHECK(equal_in_fim(w1("xXx"), w1("x"), 1));
  CHECK_FALSE(equal_in_fim(w1("xX"), w1("Xx"), 1));
  CHECK(is_idempotent(w1(""), 1));
  CHECK(is_idempotent(w1("xX"), 1));
  CHECK_FALSE(is_idempotent(w1("x"), 1));
  CHECK_THROWS_AS(equal_in_fim(w2("b"), w2("b"), 1), InvalidInput);
}

TEST_CASE("wp_member and iota_member examples") {
  CHECK(wp_member(parse_marked("x#X", 1), 1));
  CHECK_FALSE(wp_member(parse_marked("xX#", 1), 1));
  CHECK(wp_member(parse_marked("xXx#X", 1), 1));
  CHECK(iota_member({}, {}, 1));
  CHECK(iota_member(w1("xXx"), w1("x"), 1));
  CHECK_FALSE(iota_member(w1("x"), w1("X"), 1));
}

TEST_CASE("rank-1 equality agrees with triples up to length 12") {
  const auto words = machines::words_up_to(12);
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Word> seen;
  for (const auto& w : words) {
    const auto e = evaluate_rank1(w);
    const auto key = std::tuple{e.neg_extent, e.pos_extent, e.mark};
    auto [it, fresh] = seen.emplace(key, w);
    if (!fresh) REQUIRE(equal_in_fim(w, it->second, 1));
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int k = 0; k < 20000; ++k) {
    const auto& u = words[pick(rng)];
    const auto& v = words[pick(rng)];
    REQUIRE(equal_in_fim(u, v, 1) == (evaluate_rank1(u) == evaluate_rank1(v)));
  }
}

TEST_CASE("inverse monoid axioms on random words") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 3000; ++k) {
    const int rank = 1 + k % 3;
    const Word w = oracle::random_word(rng, rank, 30);
    const Word g = oracle::random_word(rng, rank, 30);
    const Word wi = inverse(w);
    REQUIRE(equal_in_fim(concat(concat(w, wi), w), w, rank));
    REQUIRE(equal_in_fim(concat(concat(wi, w), wi), wi, rank));
    const Word e = concat(w, wi), f = concat(g, inverse(g));
    REQUIRE(equal_in_fim(concat(e, f), concat(f, e), rank));
    REQUIRE(is_idempotent(e, rank));
    REQUIRE(equal_in_fim(w, g, rank) == oracle::equal(w, g));
  }
}

TEST_CASE("dot output") {
  CHECK(to_dot(munn_tree(w1("xX"), 1)) ==
        "digraph munn {\n"
        "  node [shape=circle];\n"
        "  \"1\" [label=\"1\", shape=doublecircle, style=filled];\n"
        "  \"x\" [label=\"x\"];\n"
        "  \"1\" -> \"x\" [label=\"x1\"];\n"
        "}\n");

  const auto empty = to_dot(munn_tree({}, 1));
  CHECK(empty.find("->") == std::string::npos);
  CHECK(empty.find("filled") != std::string::npos);

  const auto star = munn_tree(w2("aAbB"), 2);
  CHECK(star.vertices().size() == 3);
  CHECK(star.edges().size() == 2);
  CHECK(star.is_idempotent());
}
