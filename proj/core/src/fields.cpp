#include "ecloc/fields.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "ecloc/error.hpp"

namespace ecloc {

namespace {

struct ModulusEntry {
  std::uint32_t p;
  int e;
  std::vector<std::uint32_t> coeffs;
};

// First monic irreducible found by enumerating candidates in code order.
const std::vector<ModulusEntry>& default_table() {
  static const std::vector<ModulusEntry> table = {
      {2, 2, {1, 1, 1}},     {2, 3, {1, 1, 0, 1}},   {2, 4, {1, 1, 0, 0, 1}},
      {3, 2, {1, 0, 1}},     {3, 3, {1, 2, 0, 1}},   {3, 4, {2, 1, 0, 0, 1}},
      {5, 2, {2, 0, 1}},     {5, 3, {1, 1, 0, 1}},   {5, 4, {2, 0, 0, 0, 1}},
      {7, 2, {1, 0, 1}},     {7, 3, {2, 0, 0, 1}},   {7, 4, {1, 1, 0, 0, 1}},
      {11, 2, {1, 0, 1}},    {11, 3, {4, 1, 0, 1}},  {11, 4, {2, 1, 0, 0, 1}},
      {13, 2, {2, 0, 1}},    {13, 3, {2, 0, 0, 1}},  {13, 4, {2, 0, 0, 0, 1}},
  };
  return table;
}

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint64_t t = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_rem(r, m, p);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.empty() || f.back() != 1) return false;
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 1) return deg == 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    if (count > 50'000'000ULL) raise(ErrorCode::TooLarge, "irreducibility check beyond desk scale");
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      std::uint64_t t = c;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, int e) {
  if (e == 1) return {0, 1};
  for (const auto& entry : default_table())
    if (entry.p == p && entry.e == e) return entry.coeffs;
  return {};
}

FqCtx FqContext::make(std::uint32_t p, int e, const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1u << 30)) raise(ErrorCode::TooLarge, "characteristic above 2^30");
  if (e < 1) raise(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  Poly mod = modulus;
  trim(mod);
  if (e == 1) {
    if (!mod.empty() && (mod.size() != 2 || mod[1] != 1))
      raise(ErrorCode::ReducibleModulus, "degree-1 modulus must be monic of degree 1");
    mod = {0, 1};
  } else if (mod.empty()) {
    mod = default_modulus(p, e);
    if (mod.empty())
      raise(ErrorCode::NoDefaultModulus,
            "no bundled modulus for p=" + std::to_string(p) + ", e=" + std::to_string(e));
  }
  for (auto c : mod)
    if (c >= p) raise(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  if (static_cast<int>(mod.size()) != e + 1 || mod.back() != 1)
    raise(ErrorCode::ReducibleModulus, "modulus must be monic of degree e");
  const std::uint64_t q = ipow(p, e);
  if (e > 1 && q > (1u << 22)) raise(ErrorCode::TooLarge, "extension field too large for tables");

  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, int, Poly>, FqCtx> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, e, mod);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (e > 1 && !is_irreducible(p, mod)) raise(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");

  std::shared_ptr<FqContext> ctx(new FqContext());
  ctx->p_ = p;
  ctx->e_ = e;
  ctx->q_ = static_cast<std::uint32_t>(q);
  ctx->modulus_ = mod;
  if (e > 1) ctx->build_tables();
  cache.emplace(key, ctx);
  return ctx;
}

void FqContext::build_tables() {
  const std::uint32_t n = q_ - 1;
  auto to_poly = [&](std::uint32_t code) {
    Poly d = digits(code);
    trim(d);
    return d;
  };
  for (std::uint32_t g = 2; g < q_; ++g) {
    exp_.assign(n, 0);
    log_.assign(q_, 0);
    Poly cur = {1};
    Poly gp = to_poly(g);
    bool primitive = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      Poly padded = cur;
      padded.resize(e_, 0);
      std::uint32_t code = from_digits(padded);
      if (i > 0 && code == 1) {
        primitive = false;
        break;
      }
      exp_[i] = code;
      log_[code] = i;
      cur = poly_mulmod(cur, gp, modulus_, p_);
    }
    if (primitive) return;
  }
  raise(ErrorCode::InternalInvariantViolation, "no primitive element found");
}

bool FqContext::same(const FqContext& other) const {
  return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

std::string FqContext::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    os << " = F_" << p_ << "[t]/(";
    bool first = true;
    for (int i = e_; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i > 0) os << (modulus_[i] != 1 ? "*" : "") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << ")";
  }
  return os.str();
}

std::uint32_t FqContext::add(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t r = 0, scale = 1;
  while (a || b) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FqContext::neg(std::uint32_t a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t r = 0, scale = 1;
  while (a) {
    std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

std::uint32_t FqContext::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FqContext::mul(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

std::uint32_t FqContext::inv(std::uint32_t a) const {
  if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of zero in " + describe());
  if (e_ == 1) return pow(a, p_ - 2);
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FqContext::pow(std::uint32_t a, std::uint64_t n) const {
  std::uint32_t r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::uint32_t FqContext::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> FqContext::digits(std::uint32_t code) const {
  std::vector<std::uint32_t> d(e_, 0);
  for (int i = 0; i < e_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::uint32_t FqContext::from_digits(const std::vector<std::uint32_t>& d) const {
  if (static_cast<int>(d.size()) > e_) raise(ErrorCode::InvalidArgument, "too many digits");
  std::uint32_t r = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
    if (d[i] >= p_) raise(ErrorCode::InvalidArgument, "digit out of range");
    r = r * p_ + d[i];
  }
  return r;
}

FqElement::FqElement(FqCtx ctx, std::uint32_t code) : ctx_(std::move(ctx)), code_(code) {
  if (!ctx_) raise(ErrorCode::InvalidArgument, "null field context");
  if (code_ >= ctx_->q()) raise(ErrorCode::InvalidArgument, "element code out of range");
}

void FqElement::check(const FqElement& o) const {
  if (ctx_ != o.ctx_ && !(ctx_ && o.ctx_ && ctx_->same(*o.ctx_)))
    raise(ErrorCode::ContextMismatch, "operands from different fields");
}

FqElement FqElement::operator+(const FqElement& o) const {
  check(o);
  return FqElement(ctx_, ctx_->add(code_, o.code_));
}
FqElement FqElement::operator-(const FqElement& o) const {
  check(o);
  return FqElement(ctx_, ctx_->sub(code_, o.code_));
}
FqElement FqElement::operator*(const FqElement& o) const {
  check(o);
  return FqElement(ctx_, ctx_->mul(code_, o.code_));
}
FqElement FqElement::operator-() const { return FqElement(ctx_, ctx_->neg(code_)); }
FqElement FqElement::inv() const { return FqElement(ctx_, ctx_->inv(code_)); }
FqElement FqElement::pow(std::uint64_t n) const { return FqElement(ctx_, ctx_->pow(code_, n)); }
bool FqElement::operator==(const FqElement& o) const {
  check(o);
  return code_ == o.code_;
}

std::vector<FqElement> field_enumerate(const FqCtx& ctx) {
  std::vector<FqElement> out;
  out.reserve(ctx->q());
  for (std::uint32_t c = 0; c < ctx->q(); ++c) out.emplace_back(ctx, c);
  return out;
}

}  // namespace ecloc
