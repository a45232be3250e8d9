#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ecloc {

class FqContext;
using FqCtx = std::shared_ptr<const FqContext>;

// F_q = F_p[t]/(modulus). Elements are addressed by a code in [0, q) whose
// base-p digits are the power-basis coefficients, lowest degree first.
class FqContext {
 public:
  // An empty modulus selects the bundled default for (p, e).
  static FqCtx make(std::uint32_t p, int e, const std::vector<std::uint32_t>& modulus = {});

  std::uint32_t p() const { return p_; }
  int e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool same(const FqContext& other) const;
  std::string describe() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;
  std::uint32_t from_int(long long n) const;

  std::vector<std::uint32_t> digits(std::uint32_t code) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;
  // Code of the prime-subfield element if code lies in F_p, otherwise -1.
  long long prime_subfield_value(std::uint32_t code) const { return code < p_ ? static_cast<long long>(code) : -1LL; }

 private:
  FqContext() = default;
  void build_tables();

  std::uint32_t p_ = 0;
  int e_ = 1;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);
// Exhaustive check that a monic polynomial over F_p has no factor of degree <= deg/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);
// Bundled default modulus, or empty when the table has no entry.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, int e);

class FqElement {
 public:
  FqElement() = default;
  FqElement(FqCtx ctx, std::uint32_t code);

  static FqElement zero(const FqCtx& ctx) { return FqElement(ctx, 0); }
  static FqElement one(const FqCtx& ctx) { return FqElement(ctx, 1); }
  static FqElement from_int(const FqCtx& ctx, long long n) { return FqElement(ctx, ctx->from_int(n)); }

  const FqCtx& ctx() const { return ctx_; }
  std::uint32_t code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return ctx_->digits(code_); }
  bool is_zero() const { return code_ == 0; }

  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator*(const FqElement& o) const;
  FqElement operator-() const;
  FqElement inv() const;
  FqElement pow(std::uint64_t n) const;
  bool operator==(const FqElement& o) const;
  bool operator!=(const FqElement& o) const { return !(*this == o); }

 private:
  void check(const FqElement& o) const;
  FqCtx ctx_;
  std::uint32_t code_ = 0;
};

std::vector<FqElement> field_enumerate(const FqCtx& ctx);

}  // namespace ecloc
