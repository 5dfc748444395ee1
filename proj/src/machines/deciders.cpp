#include "fim/machines/deciders.hpp"

#include "fim/engines/csa.hpp"
#include "fim/engines/grammar.hpp"
#include "fim/engines/pda.hpp"
#include "fim/machines/csas.hpp"
#include "fim/machines/grammars.hpp"
#include "fim/machines/pdas.hpp"

namespace fim::machines {

namespace {

std::string text(const MarkedWord& mw) { return to_text(mw, 1); }

struct Machines {
  engines::CfgRecognizer gamma_nu{build_gamma_nu()};
  engines::CfgRecognizer gamma_lambda{build_gamma_lambda()};
  PdaSpec a_nu = build_pda_A_nu();
  PdaSpec a_lambda = build_pda_A_lambda();
  PdaSpec b_mu = build_pda_B_mu();
  PdaSpec b_nu = build_pda_B_nu();
  PdaSpec b_lambda = build_pda_B_lambda();
  CsaSpec csa_wp = build_csa_wp();
  CsaSpec csa_iota = build_csa_iota();
};

const Machines& machines() {
  static const Machines m;
  return m;
}

}  // namespace

bool wp_member_via_2cf(const MarkedWord& mw) {
  check_rank(mw.left, 1);
  check_rank(mw.right, 1);
  const std::string s = text(mw);
  return machines().gamma_nu.accepts(s) && machines().gamma_lambda.accepts(s);
}

bool iota_member_via_2pda(const Word& u, const Word& v) {
  const engines::TwoTapeInput in{u, v};
  return engines::pda_accepts(machines().a_nu, in) && engines::pda_accepts(machines().a_lambda, in);
}

bool cowp_iota_member(const Word& u, const Word& v) {
  const engines::TwoTapeInput in{u, v};
  const auto& m = machines();
  return engines::pda_accepts(m.b_mu, in) || engines::pda_accepts(m.b_nu, in) ||
         engines::pda_accepts(m.b_lambda, in);
}

bool csa_wp_accepts(const MarkedWord& mw, std::optional<std::size_t> stack_bound) {
  check_rank(mw.left, 1);
  check_rank(mw.right, 1);
  const std::size_t bound = stack_bound.value_or(mw.left.size() + mw.right.size());
  return engines::csa_accepts(machines().csa_wp, text(mw), bound);
}

bool csa_iota_accepts(const Word& u, const Word& v, std::optional<std::size_t> stack_bound) {
  check_rank(u, 1);
  check_rank(v, 1);
  const std::size_t bound = stack_bound.value_or(u.size() + v.size());
  return engines::csa_accepts(machines().csa_iota, to_text(u, 1), to_text(v, 1), bound);
}

}  // namespace fim::machines
