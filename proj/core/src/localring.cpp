#include "ecloc/localring.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ecloc/error.hpp"

namespace ecloc {

RkCtx RkContext::make(FqCtx field, int k) {
  if (!field) raise(ErrorCode::InvalidArgument, "null field context");
  if (k < 1) raise(ErrorCode::InvalidArgument, "nilpotence degree must be at least 1");
  static std::mutex mu;
  static std::map<std::pair<const FqContext*, int>, RkCtx> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(field.get(), k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  RkCtx ctx(new RkContext(field, k));
  cache.emplace(key, ctx);
  return ctx;
}

std::string RkContext::describe() const {
  return field_->describe() + "[eps]/(eps^" + std::to_string(k_) + ")";
}

RkElement::RkElement(RkCtx ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) raise(ErrorCode::InvalidArgument, "null ring context");
  c_.assign(ctx_->k(), 0);
}

RkElement::RkElement(RkCtx ctx, std::vector<std::uint32_t> codes) : ctx_(std::move(ctx)), c_(std::move(codes)) {
  if (!ctx_) raise(ErrorCode::InvalidArgument, "null ring context");
  if (static_cast<int>(c_.size()) > ctx_->k()) raise(ErrorCode::InvalidArgument, "more than k coefficients");
  c_.resize(ctx_->k(), 0);
  const std::uint32_t q = ctx_->field()->q();
  for (auto v : c_)
    if (v >= q) raise(ErrorCode::InvalidArgument, "coefficient code out of range");
}

RkElement RkElement::constant(const RkCtx& ctx, std::uint32_t code) {
  RkElement r(ctx);
  r.c_[0] = code;
  return r;
}

RkElement RkElement::from_int(const RkCtx& ctx, long long n) { return constant(ctx, ctx->field()->from_int(n)); }

RkElement RkElement::eps_power(const RkCtx& ctx, int m, std::uint32_t code) {
  RkElement r(ctx);
  if (m < ctx->k()) r.c_[m] = code;
  return r;
}

RkElement RkElement::from_fq(const RkCtx& ctx, const FqElement& a) {
  if (!a.ctx()->same(*ctx->field())) raise(ErrorCode::ContextMismatch, "field element from another field");
  return constant(ctx, a.code());
}

bool RkElement::is_zero() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

Nu RkElement::nu() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return Nu(static_cast<int>(i));
  return Nu::infinity();
}

FqElement RkElement::leading() const {
  Nu v = nu();
  return FqElement(ctx_->field(), v.infinite() ? 0 : c_[v.value()]);
}

void RkElement::check(const RkElement& o) const {
  if (ctx_ != o.ctx_ && !(ctx_ && o.ctx_ && ctx_->same(*o.ctx_)))
    raise(ErrorCode::ContextMismatch, "operands from different rings");
}

RkElement RkElement::operator+(const RkElement& o) const {
  RkElement r = *this;
  r += o;
  return r;
}

RkElement RkElement::operator-(const RkElement& o) const {
  RkElement r = *this;
  r -= o;
  return r;
}

RkElement& RkElement::operator+=(const RkElement& o) {
  check(o);
  const FqContext& f = *ctx_->field();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = f.add(c_[i], o.c_[i]);
  return *this;
}

RkElement& RkElement::operator-=(const RkElement& o) {
  check(o);
  const FqContext& f = *ctx_->field();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = f.sub(c_[i], o.c_[i]);
  return *this;
}

RkElement RkElement::operator-() const {
  RkElement r = *this;
  const FqContext& f = *ctx_->field();
  for (auto& v : r.c_) v = f.neg(v);
  return r;
}

RkElement RkElement::operator*(const RkElement& o) const {
  check(o);
  const int k = ctx_->k();
  const FqContext& f = *ctx_->field();
  RkElement r(ctx_);
  int la = 0, lb = 0;
  while (la < k && c_[la] == 0) ++la;
  while (lb < k && o.c_[lb] == 0) ++lb;
  if (la + lb >= k) return r;
  if (f.e() == 1) {
    const std::uint64_t p = f.p();
    const bool small = p < (1u << 16);
    for (int n = la + lb; n < k; ++n) {
      std::uint64_t acc = 0;
      for (int i = la; i <= n - lb; ++i) {
        std::uint64_t t = static_cast<std::uint64_t>(c_[i]) * o.c_[n - i];
        acc = small ? acc + t : (acc + t) % p;
      }
      r.c_[n] = static_cast<std::uint32_t>(acc % p);
    }
  } else {
    for (int i = la; i < k; ++i) {
      if (!c_[i]) continue;
      for (int j = lb; i + j < k; ++j)
        if (o.c_[j]) r.c_[i + j] = f.add(r.c_[i + j], f.mul(c_[i], o.c_[j]));
    }
  }
  return r;
}

RkElement RkElement::scale(std::uint32_t code) const {
  RkElement r = *this;
  const FqContext& f = *ctx_->field();
  for (auto& v : r.c_) v = f.mul(v, code);
  return r;
}

RkElement RkElement::inverse() const {
  if (!is_unit()) raise(ErrorCode::NotAUnit, str() + " is not a unit");
  // r = c0 + m, inverse = c0^{-1} * sum (-c0^{-1} m)^i, evaluated by doubling.
  const std::uint32_t c0inv = ctx_->field()->inv(c_[0]);
  RkElement w = -(scale(c0inv));
  w.c_[0] = 0;
  RkElement s = one(ctx_);
  for (int span = 1; span < k(); span *= 2) {
    s = s + s * w;
    w = w * w;
  }
  return s.scale(c0inv);
}

std::optional<RkElement> RkElement::divide_exact(const RkElement& s) const {
  check(s);
  Nu vr = nu(), vs = s.nu();
  if (vr.infinite()) return zero_like();
  if (vs.infinite() || vr < vs) return std::nullopt;
  const int b = vs.value();
  // Divide both by ε^b, then invert the unit part of s modulo ε^{k-b}.
  RkElement rs(ctx_), ss(ctx_);
  for (int i = b; i < k(); ++i) {
    rs.c_[i - b] = c_[i];
    ss.c_[i - b] = s.c_[i];
  }
  RkElement t = rs * ss.inverse();
  for (int i = k() - b; i < k(); ++i) t.c_[i] = 0;
  if (t * s != *this) return std::nullopt;
  return t;
}

bool RkElement::operator==(const RkElement& o) const {
  check(o);
  return c_ == o.c_;
}

std::string RkElement::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  return os.str();
}

std::vector<RkElement> ring_elements(const RkCtx& ctx) {
  const std::uint64_t q = ctx->field()->q();
  std::uint64_t total = 1;
  for (int i = 0; i < ctx->k(); ++i) {
    total *= q;
    if (total > (1u << 24)) raise(ErrorCode::TooLarge, "ring too large to enumerate");
  }
  std::vector<RkElement> out;
  out.reserve(total);
  std::vector<std::uint32_t> digits(ctx->k(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t t = n;
    for (int i = 0; i < ctx->k(); ++i) {
      digits[i] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    out.emplace_back(ctx, digits);
  }
  return out;
}

std::vector<RkElement> maximal_ideal_elements(const RkCtx& ctx) {
  const std::uint64_t q = ctx->field()->q();
  std::uint64_t total = 1;
  for (int i = 1; i < ctx->k(); ++i) {
    total *= q;
    if (total > (1u << 24)) raise(ErrorCode::TooLarge, "maximal ideal too large to enumerate");
  }
  std::vector<RkElement> out;
  out.reserve(total);
  std::vector<std::uint32_t> digits(ctx->k(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t t = n;
    for (int i = 1; i < ctx->k(); ++i) {
      digits[i] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    out.emplace_back(ctx, digits);
  }
  return out;
}

}  // namespace ecloc
