#include "fim/machines/catalog.hpp"

#include <memory>

#include "fim/equality.hpp"
#include "fim/errors.hpp"
#include "fim/machines/csas.hpp"
#include "fim/machines/deciders.hpp"
#include "fim/machines/grammars.hpp"
#include "fim/machines/oracles.hpp"
#include "fim/machines/pdas.hpp"

namespace fim::machines {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::VerifiedVerbatim: return "verified-verbatim";
    case Status::VerifiedAfterRepair: return "verified-after-repair";
    case Status::Constructed: return "constructed";
    case Status::Reference: return "reference";
  }
  return "?";
}

namespace {

using engines::CfgRecognizer;
using engines::TwoTapeInput;

std::string word_text(const Sample& s) {
  if (const auto* w = std::get_if<Word>(&s)) return to_text(*w, 1);
  return to_text(std::get<MarkedWord>(s), 1);
}

const TwoTapeInput& pair_of(const Sample& s) { return std::get<TwoTapeInput>(s); }

CatalogEntry grammar_entry(std::string name, std::string description, Status status,
                           Domain domain, std::string oracle_name, GrammarSpec g,
                           std::function<bool(const Sample&)> oracle, std::string annotation = {}) {
  auto recognizer = std::make_shared<const CfgRecognizer>(g);
  CatalogEntry e{std::move(name), std::move(description), status, domain, std::move(oracle_name),
                 std::move(g), std::move(annotation), nullptr, std::move(oracle)};
  e.accepts = [recognizer](const Sample& s) { return recognizer->accepts(word_text(s)); };
  return e;
}

CatalogEntry pda_entry(std::string name, std::string description, Status status,
                       std::string oracle_name, PdaSpec p,
                       std::function<bool(const Word&, const Word&)> oracle,
                       std::string annotation = {}) {
  auto spec = std::make_shared<const PdaSpec>(p);
  CatalogEntry e{std::move(name), std::move(description), status, Domain::WordPairs,
                 std::move(oracle_name), std::move(p), std::move(annotation), nullptr, nullptr};
  e.accepts = [spec](const Sample& s) { return engines::pda_accepts(*spec, pair_of(s)); };
  e.oracle = [oracle](const Sample& s) {
    const auto& in = pair_of(s);
    return oracle(in.tape1, in.tape2);
  };
  return e;
}

bool wp_oracle(const Sample& s) { return wp_member(std::get<MarkedWord>(s), 1); }
bool iota_oracle(const Sample& s) { return iota_member(pair_of(s).tape1, pair_of(s).tape2, 1); }

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  const auto cowp = build_cowp_grammars();

  c.push_back(grammar_entry("gamma_plus", "positive idempotents: S -> SS | xSX | ε",
                            Status::VerifiedVerbatim, Domain::Words, "E+", build_gamma_plus(),
                            [](const Sample& s) { return in_positive_idempotents(std::get<Word>(s)); }));
  c.push_back(grammar_entry("gamma_minus", "negative idempotents: S -> SS | XSx | ε",
                            Status::VerifiedVerbatim, Domain::Words, "E-", build_gamma_minus(),
                            [](const Sample& s) { return in_negative_idempotents(std::get<Word>(s)); }));
  c.push_back(grammar_entry("gamma_nu", "u#v^inv with nu(u)=nu(v), mu(u)=mu(v)",
                            Status::VerifiedVerbatim, Domain::MarkedWords, "L_nu", build_gamma_nu(),
                            [](const Sample& s) { return in_l_nu(std::get<MarkedWord>(s)); }));
  c.push_back(grammar_entry("gamma_lambda", "reversal of gamma_nu: lambda and mu agree",
                            Status::VerifiedVerbatim, Domain::MarkedWords, "L_lambda", build_gamma_lambda(),
                            [](const Sample& s) { return in_l_lambda(std::get<MarkedWord>(s)); }));
  c.push_back(grammar_entry(
      "cowp_grammar_verbatim", "co-word problem grammar as printed", Status::Reference,
      Domain::MarkedWords, "not WP", cowp.verbatim, [](const Sample& s) { return !wp_oracle(s); },
      "M branch emits no '#'; U/D omit paths that rise after '#' (resp. before) below the maximum"));
  c.push_back(grammar_entry(
      "cowp_grammar_fixed", "co-word problem grammar, corrected", Status::VerifiedAfterRepair,
      Domain::MarkedWords, "not WP", cowp.fixed, [](const Sample& s) { return !wp_oracle(s); },
      "M routed through one-'#' variants; U/D rebuilt as (Z x)^M Z (X Z)^M with '#' on one side"));

  c.push_back(pda_entry("pda_A_nu", "two-tape, empty stack: nu and mu agree", Status::VerifiedVerbatim,
                        "nu=nu & mu=mu", build_pda_A_nu(), nu_and_mu_agree,
                        "empty stack = only the bottom marker Z remains"));
  c.push_back(pda_entry("pda_A_lambda", "pda_A_nu with x and X exchanged", Status::VerifiedVerbatim,
                        "lambda=lambda & mu=mu", build_pda_A_lambda(), lambda_and_mu_agree,
                        "empty stack = only the bottom marker Z remains"));
  c.push_back(pda_entry("pda_B_mu", "one-counter: mu(u) != mu(v)", Status::Constructed, "mu!=mu",
                        build_pda_B_mu(), mu_differs));
  c.push_back(pda_entry("pda_B_nu", "nu(u) != nu(v), corrected", Status::VerifiedAfterRepair, "nu!=nu",
                        build_pda_B_nu(), nu_differs,
                        "adds q1 -> q2 on X/Z, a Y-draining state q3, and an absorbing final state g"));
  c.push_back(pda_entry("pda_B_lambda", "pda_B_nu with x and X exchanged", Status::VerifiedAfterRepair,
                        "lambda!=lambda", build_pda_B_lambda(), lambda_differs));
  c.push_back(pda_entry("pda_B_nu_verbatim", "nu(u) != nu(v) table as printed", Status::Reference,
                        "nu!=nu", build_pda_B_nu_verbatim(), nu_differs,
                        "stalls in q1 when nu(u)=0 or v is exhausted; no route to f below a Y"));
  c.push_back(pda_entry("pda_B_lambda_verbatim", "pda_B_nu_verbatim with x and X exchanged",
                        Status::Reference, "lambda!=lambda", build_pda_B_lambda_verbatim(), lambda_differs));

  {
    auto spec = std::make_shared<const CsaSpec>(build_csa_wp());
    CatalogEntry e{"csa_wp", "checking stack automaton for WP", Status::VerifiedAfterRepair,
                   Domain::MarkedWords, "WP", *spec,
                   "endpoint sets bottom={L-,O-,O+-} top={R+,O+,O+-} (printed: {O-,R-} / {O+,L+}); "
                   "seen-set closure for moves, '#' and '$'",
                   nullptr, wp_oracle};
    e.accepts = [](const Sample& s) { return csa_wp_accepts(std::get<MarkedWord>(s)); };
    c.push_back(std::move(e));
  }
  {
    auto spec = std::make_shared<const CsaSpec>(build_csa_wp_verbatim());
    CatalogEntry e{"csa_wp_verbatim", "checking table as printed", Status::Reference,
                   Domain::MarkedWords, "WP", *spec,
                   "printed endpoint sets {O-,R-} / {O+,L+}; no moves in q+/q- interiors", nullptr, wp_oracle};
    e.accepts = [spec](const Sample& s) {
      const auto& mw = std::get<MarkedWord>(s);
      return engines::csa_accepts(*spec, to_text(mw, 1), mw.left.size() + mw.right.size());
    };
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e{"csa_iota", "two-tape checking stack automaton for iota", Status::VerifiedAfterRepair,
                   Domain::WordPairs, "iota", build_csa_iota(),
                   "mu-marked setup; return state r walks back to O between tapes", nullptr, iota_oracle};
    e.accepts = [](const Sample& s) { return csa_iota_accepts(pair_of(s).tape1, pair_of(s).tape2); };
    c.push_back(std::move(e));
  }

  c.push_back(CatalogEntry{"wp_2cf", "gamma_nu and gamma_lambda both accept", Status::VerifiedVerbatim,
                           Domain::MarkedWords, "WP", std::monostate{}, "",
                           [](const Sample& s) { return wp_member_via_2cf(std::get<MarkedWord>(s)); },
                           wp_oracle});
  c.push_back(CatalogEntry{"iota_2pda", "pda_A_nu and pda_A_lambda both accept", Status::VerifiedVerbatim,
                           Domain::WordPairs, "iota", std::monostate{}, "",
                           [](const Sample& s) { return iota_member_via_2pda(pair_of(s).tape1, pair_of(s).tape2); },
                           iota_oracle});
  c.push_back(CatalogEntry{"coiota_3pda", "union of pda_B_mu, pda_B_nu, pda_B_lambda",
                           Status::VerifiedAfterRepair, Domain::WordPairs, "not iota", std::monostate{}, "",
                           [](const Sample& s) { return cowp_iota_member(pair_of(s).tape1, pair_of(s).tape2); },
                           [](const Sample& s) { return !iota_oracle(s); }});
  for (const auto& e : c) {
    std::visit([](const auto& m) {
      if constexpr (!std::is_same_v<std::decay_t<decltype(m)>, std::monostate>) m.validate();
    }, e.machine);
  }
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw InvalidInput("unknown machine '" + std::string(name) + "'");
}

Sample parse_sample(Domain d, std::string_view text) {
  switch (d) {
    case Domain::Words:
      return parse_word(text, 1);
    case Domain::MarkedWords:
      return parse_marked(text, 1);
    case Domain::WordPairs: {
      const auto comma = text.find(',');
      if (comma == std::string_view::npos) throw ParseError("expected \"u,v\"", text.size());
      return TwoTapeInput{parse_word(text.substr(0, comma), 1), parse_word(text.substr(comma + 1), 1)};
    }
  }
  throw InvalidInput("unknown domain");
}

std::string format_sample(const Sample& s) {
  if (const auto* p = std::get_if<TwoTapeInput>(&s)) {
    return to_text(p->tape1, 1) + "," + to_text(p->tape2, 1);
  }
  return word_text(s);
}

}  // namespace fim::machines
