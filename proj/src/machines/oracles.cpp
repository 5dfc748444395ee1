#include "fim/machines/oracles.hpp"

#include "fim/rank1.hpp"

namespace fim::machines {

bool in_positive_idempotents(const Word& w) {
  const auto e = evaluate_rank1(w);
  return e.neg_extent == 0 && e.mark == 0;
}

bool in_negative_idempotents(const Word& w) {
  const auto e = evaluate_rank1(w);
  return e.pos_extent == 0 && e.mark == 0;
}

bool nu_and_mu_agree(const Word& u, const Word& v) {
  const auto a = evaluate_rank1(u), b = evaluate_rank1(v);
  return a.pos_extent == b.pos_extent && a.mark == b.mark;
}

bool lambda_and_mu_agree(const Word& u, const Word& v) {
  const auto a = evaluate_rank1(u), b = evaluate_rank1(v);
  return a.neg_extent == b.neg_extent && a.mark == b.mark;
}

bool in_l_nu(const MarkedWord& mw) {
  return nu_and_mu_agree(mw.left, inverse(mw.right));
}

bool in_l_lambda(const MarkedWord& mw) {
  return lambda_and_mu_agree(mw.left, inverse(mw.right));
}

bool mu_differs(const Word& u, const Word& v) {
  return evaluate_rank1(u).mark != evaluate_rank1(v).mark;
}

bool nu_differs(const Word& u, const Word& v) {
  return evaluate_rank1(u).pos_extent != evaluate_rank1(v).pos_extent;
}

bool lambda_differs(const Word& u, const Word& v) {
  return evaluate_rank1(u).neg_extent != evaluate_rank1(v).neg_extent;
}

}  // namespace fim::machines
