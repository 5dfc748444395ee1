#include "fim/machines/witnesses.hpp"

#include "fim/equality.hpp"
#include "fim/errors.hpp"

namespace fim::machines {

namespace {

void append(Word& w, Letter a, std::int64_t count) {
  w.insert(w.end(), static_cast<std::size_t>(count), a);
}

}  // namespace

MarkedWord witness_wn(std::int64_t n) {
  if (n < 0) throw InvalidInput("witness index must be non-negative");
  MarkedWord mw;
  append(mw.left, kX, n);
  append(mw.left, kXbar, n);
  append(mw.left, kX, n);
  append(mw.right, kXbar, n);
  return mw;
}

bool PumpingCase::valid() const noexcept {
  if (n < 1 || i < 0 || j < 0 || (i == 0 && j == 0) || m < -1) return false;
  return n + i * m >= 0 && n + j * m >= 0;
}

MarkedWord pumping_word(const PumpingCase& c) {
  if (!c.valid()) throw InvalidInput("invalid pumping case (i and j must not both be zero)");
  const std::int64_t a = c.n + c.i * c.m;
  const std::int64_t b = c.n + c.j * c.m;
  MarkedWord mw;
  switch (c.form) {
    case PumpForm::First:
      append(mw.left, kX, a);
      append(mw.left, kXbar, b);
      append(mw.left, kX, c.n);
      append(mw.right, kXbar, c.n);
      break;
    case PumpForm::Second:
      append(mw.left, kX, c.n);
      append(mw.left, kXbar, a);
      append(mw.left, kX, b);
      append(mw.right, kXbar, c.n);
      break;
    case PumpForm::Third:
      append(mw.left, kX, c.n);
      append(mw.left, kXbar, c.n);
      append(mw.left, kX, a);
      append(mw.right, kXbar, b);
      break;
  }
  return mw;
}

bool pumping_case_member(const PumpingCase& c) { return wp_member(pumping_word(c), 1); }

bool predicted_nonmember(const PumpingCase& c) {
  if (c.form == PumpForm::Third) {
    return (c.j != 0 && c.m == -1) || (c.j == 0 && c.i != 0 && c.m >= 1);
  }
  return (c.i != 0 && c.m >= 1) || (c.i == 0 && c.j != 0 && c.m >= 1);
}

MarkedWord witness_Lk(int k, const std::vector<std::int64_t>& m,
                      const std::vector<std::int64_t>& n) {
  if (k < 2) throw InvalidInput("witness rank must be at least 2");
  if (m.size() != static_cast<std::size_t>(k) || n.size() != static_cast<std::size_t>(k)) {
    throw InvalidInput("need exactly k exponents on each side");
  }
  MarkedWord mw;
  for (int g = 1; g <= k; ++g) {
    const auto e = m[g - 1], f = n[g - 1];
    if (e < 0 || f < 0) throw InvalidInput("exponents must be non-negative");
    append(mw.left, gen(g), e);
    append(mw.left, inv(g), e);
    append(mw.right, gen(g), f);
    append(mw.right, inv(g), f);
  }
  return mw;
}

}  // namespace fim::machines
