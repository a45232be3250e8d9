#include <map>

#include "ecloc/infinity.hpp"

namespace ecloc {

long long dlp_addition_bound(std::uint32_t p, unsigned long long order) {
  long long digits = 0;
  for (unsigned long long t = 1; t < order; t *= p) ++digits;
  long long lg = 0;
  while ((1ULL << lg) < p) ++lg;
  return 2 * digits * lg;
}

namespace {

// Multiples of T met along the double-and-add chain for p*T.
class MultipleChain {
 public:
  MultipleChain(const InfinityPoint& T, std::uint32_t p, AddCounter* counter) : T_(T), p_(p), counter_(counter) {
    known_.emplace(1, T);
    top_ = 31;
    while (!((p >> top_) & 1)) --top_;
    bit_ = top_ - 1;
    cur_ = 1;
  }

  // Advance the chain until b*T is known (b <= p), or until p*T when b = p.
  const InfinityPoint& get(unsigned b) {
    while (!known_.count(b) && bit_ >= 0) step();
    if (auto it = known_.find(b); it != known_.end()) return it->second;
    // b misses the chain: one extra addition from two known multiples.
    for (auto& [a, Pa] : known_)
      if (auto it = known_.find(b - a); a < b && it != known_.end())
        return known_.emplace(b, inf_add(Pa, it->second, counter_)).first->second;
    InfinityPoint Pb = inf_mul(b, T_, counter_);
    return known_.emplace(b, Pb).first->second;
  }

 private:
  void step() {
    InfinityPoint& c = known_.at(cur_);
    unsigned next = 2 * cur_;
    InfinityPoint d = inf_add(c, c, counter_);
    known_.emplace(next, d);
    cur_ = next;
    if ((p_ >> bit_) & 1) {
      InfinityPoint s = inf_add(known_.at(cur_), T_, counter_);
      known_.emplace(cur_ + 1, s);
      cur_ += 1;
    }
    --bit_;
  }

  InfinityPoint T_;
  std::uint32_t p_;
  AddCounter* counter_;
  std::map<unsigned, InfinityPoint> known_;
  int top_, bit_;
  unsigned cur_;
};

}  // namespace

DlpResult dlp_solve(const InfinityPoint& P, const InfinityPoint& Q) {
  if (P.is_identity()) raise(ErrorCode::InvalidArgument, "base point is the identity");
  const std::uint32_t p = P.curve().p();
  const FqContext& field = *P.curve().ring()->field();
  DlpResult res;
  AddCounter counter;
  InfinityPoint T = P, R = Q;
  unsigned long long pw = 1;
  bool order_known = false;
  for (int i = 0;; ++i) {
    if (T.is_identity()) {
      order_known = true;
      break;
    }
    if (R.is_identity()) break;
    DlpStep step;
    step.i = i;
    step.m = T.nu();
    step.nu_r = R.nu();
    if (step.nu_r < step.m)
      raise(ErrorCode::DegreeMismatch, "digit " + std::to_string(i) + ": nu(R) = " + step.nu_r.str() + " < nu(p^i P) = " +
                                           step.m.str());
    MultipleChain chain(T, p, &counter);
    if (step.nu_r == step.m) {
      step.c_r = R.x().code(step.m.value());
      step.c_t = T.x().code(step.m.value());
      std::uint32_t quo = field.mul(step.c_r, field.inv(step.c_t));
      long long b = field.prime_subfield_value(quo);
      if (b < 0)
        raise(ErrorCode::NoSolution, "digit " + std::to_string(i) + ": leading quotient lies outside the prime subfield");
      step.b = static_cast<unsigned>(b);
      R = inf_sub(R, chain.get(step.b), &counter);
      if (pw > ~0ULL / p) raise(ErrorCode::TooLarge, "logarithm exceeds 64 bits");
      res.n += step.b * pw;
    }
    step.residual_after = R.x();
    res.steps.push_back(step);
    if (R.is_identity()) break;
    T = chain.get(p);
    if (pw > ~0ULL / p) raise(ErrorCode::TooLarge, "order exceeds 64 bits");
    pw *= p;
  }
  res.additions = counter.additions;
  if (!R.is_identity()) raise(ErrorCode::NoSolution, "residual survives every digit; Q is not in <P>");
  res.order = order_known ? pw : inf_order(P);
  if (inf_mul(res.n, P) != Q) raise(ErrorCode::NoSolution, "final check n*P = Q failed");
  return res;
}

}  // namespace ecloc
