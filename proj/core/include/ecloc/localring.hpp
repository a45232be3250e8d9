#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ecloc/fields.hpp"

namespace ecloc {

// Minimal degree of an element of R_k: the ε-adic order, with a dedicated
// infinity for zero that compares above every integer.
class Nu {
 public:
  constexpr Nu() = default;
  constexpr explicit Nu(int v) : v_(v) {}
  static constexpr Nu infinity() { return Nu(std::numeric_limits<int>::max()); }
  constexpr bool infinite() const { return v_ == std::numeric_limits<int>::max(); }
  constexpr int value() const { return v_; }
  constexpr auto operator<=>(const Nu&) const = default;
  std::string str() const { return infinite() ? "inf" : std::to_string(v_); }

 private:
  int v_ = 0;
};

class RkContext;
using RkCtx = std::shared_ptr<const RkContext>;

// R_k = F_q[ε]/(ε^k).
class RkContext {
 public:
  static RkCtx make(FqCtx field, int k);
  const FqCtx& field() const { return field_; }
  int k() const { return k_; }
  std::uint32_t p() const { return field_->p(); }
  bool same(const RkContext& other) const { return this == &other || (k_ == other.k_ && field_->same(*other.field_)); }
  std::string describe() const;

 private:
  RkContext(FqCtx f, int k) : field_(std::move(f)), k_(k) {}
  FqCtx field_;
  int k_;
};

class RkElement {
 public:
  RkElement() = default;
  explicit RkElement(RkCtx ctx);
  RkElement(RkCtx ctx, std::vector<std::uint32_t> codes);

  static RkElement zero(const RkCtx& ctx) { return RkElement(ctx); }
  static RkElement one(const RkCtx& ctx) { return constant(ctx, 1); }
  static RkElement constant(const RkCtx& ctx, std::uint32_t code);
  static RkElement from_int(const RkCtx& ctx, long long n);
  static RkElement eps_power(const RkCtx& ctx, int m, std::uint32_t code = 1);
  static RkElement from_fq(const RkCtx& ctx, const FqElement& a);

  const RkCtx& ctx() const { return ctx_; }
  int k() const { return ctx_->k(); }
  const std::vector<std::uint32_t>& codes() const { return c_; }
  std::uint32_t code(int i) const { return c_[i]; }
  FqElement coeff(int i) const { return FqElement(ctx_->field(), c_[i]); }

  // Generic ring interface shared with the symbolic coefficient rings.
  RkElement zero_like() const { return RkElement(ctx_); }
  RkElement one_like() const { return one(ctx_); }
  RkElement from_int(long long n) const { return from_int(ctx_, n); }
  bool is_zero() const;
  bool is_unit() const { return !c_.empty() && c_[0] != 0; }
  RkElement inverse() const;

  Nu nu() const;
  FqElement project() const { return coeff(0); }
  // Leading coefficient at ε^ν; zero for the zero element.
  FqElement leading() const;
  // Some t with t*s == *this, if one exists.
  std::optional<RkElement> divide_exact(const RkElement& s) const;
  RkElement scale(std::uint32_t code) const;

  RkElement operator+(const RkElement& o) const;
  RkElement operator-(const RkElement& o) const;
  RkElement operator*(const RkElement& o) const;
  RkElement operator-() const;
  RkElement& operator+=(const RkElement& o);
  RkElement& operator-=(const RkElement& o);
  RkElement& operator*=(const RkElement& o) { return *this = *this * o; }
  bool operator==(const RkElement& o) const;
  bool operator!=(const RkElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check(const RkElement& o) const;
  RkCtx ctx_;
  std::vector<std::uint32_t> c_;
};

inline Nu nu(const RkElement& r) { return r.nu(); }

// Elements of the maximal ideal, enumerated in code order (q^{k-1} of them).
std::vector<RkElement> maximal_ideal_elements(const RkCtx& ctx);
std::vector<RkElement> ring_elements(const RkCtx& ctx);

}  // namespace ecloc
