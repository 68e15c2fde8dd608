#include "ietsaf/sturm.hpp"

namespace ietsaf {

int sign(const Rational& q) { return sgn(q); }

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  RatPoly d = derivative(p);
  while (!d.is_zero()) {
    chain_.push_back(d);
    const auto& a = chain_[chain_.size() - 2];
    d = -divrem(a, chain_.back()).remainder;
  }
  if (chain_.back().degree() > 0) throw InvalidInput("polynomial is not squarefree");
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_half_open(const Rational& lo, const Rational& hi) const {
  return sign_changes(lo) - sign_changes(hi);
}

int SturmSequence::count_open(const Rational& lo, const Rational& hi) const {
  return count_half_open(lo, hi) - (poly().eval(hi) == 0 ? 1 : 0);
}

namespace {

void isolate_rec(const SturmSequence& s, const Rational& lo, const Rational& hi, int count,
                 std::vector<std::pair<Rational, Rational>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  const int left = s.count_half_open(lo, mid);
  isolate_rec(s, lo, mid, left, out);
  isolate_rec(s, mid, hi, count - left, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> sturm_isolate(const RatPoly& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidInput("isolation interval requires lo < hi");
  if (p.degree() < 1) return {};
  if (gcd(p, derivative(p)).degree() > 0) throw InvalidInput("polynomial is not squarefree");
  SturmSequence s(p);
  std::vector<std::pair<Rational, Rational>> out;
  isolate_rec(s, lo, hi, s.count_half_open(lo, hi), out);
  return out;
}

}  // namespace ietsaf
