#pragma once

#include <algorithm>
#include <vector>

#include "ecloc/error.hpp"

namespace ecloc {

// C[X]/(X^K) for a coefficient ring C exposing zero_like/one_like/from_int,
// is_zero/is_unit/inverse and the arithmetic operators.
template <class C>
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(const C& proto, int K) : c_(K, proto.zero_like()) {}

  static TruncSeries constant(const C& value, int K) {
    TruncSeries s(value, K);
    if (K > 0) s.c_[0] = value;
    return s;
  }
  static TruncSeries variable(const C& proto, int K) {
    TruncSeries s(proto, K);
    if (K > 1) s.c_[1] = proto.one_like();
    return s;
  }

  int K() const { return static_cast<int>(c_.size()); }
  const C& operator[](int i) const { return c_[i]; }
  C& operator[](int i) { return c_[i]; }
  const std::vector<C>& coeffs() const { return c_; }

  TruncSeries zero_like() const { return TruncSeries(c_.at(0), K()); }
  TruncSeries one_like() const { return constant(c_.at(0).one_like(), K()); }
  TruncSeries from_int(long long n) const { return constant(c_.at(0).from_int(n), K()); }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }
  bool is_unit() const { return !c_.empty() && c_[0].is_unit(); }
  // Index of the first nonzero coefficient, or K for zero.
  int order() const {
    for (int i = 0; i < K(); ++i)
      if (!c_[i].is_zero()) return i;
    return K();
  }

  TruncSeries inverse() const {
    if (!is_unit()) raise(ErrorCode::NotAUnit, "series with non-unit constant term");
    C c0inv = c_[0].inverse();
    TruncSeries w = -(*this * c0inv);
    w.c_[0] = c_[0].zero_like();
    TruncSeries s = one_like();
    for (int span = 1; span < K(); span *= 2) {
      s = s + s * w;
      w = w * w;
    }
    return s * c0inv;
  }

  TruncSeries operator+(const TruncSeries& o) const {
    TruncSeries r = *this;
    r += o;
    return r;
  }
  TruncSeries operator-(const TruncSeries& o) const {
    TruncSeries r = *this;
    r -= o;
    return r;
  }
  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (int i = 0; i < K(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (int i = 0; i < K(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  TruncSeries operator*(const C& s) const {
    TruncSeries r = *this;
    for (auto& v : r.c_)
      if (!v.is_zero()) v = v * s;
    return r;
  }
  TruncSeries operator*(const TruncSeries& o) const {
    check(o);
    const int n = K();
    TruncSeries r = zero_like();
    std::vector<int> nz_a, nz_b;
    for (int i = 0; i < n; ++i) {
      if (!c_[i].is_zero()) nz_a.push_back(i);
      if (!o.c_[i].is_zero()) nz_b.push_back(i);
    }
    for (int i : nz_a)
      for (int j : nz_b) {
        if (i + j >= n) break;
        r.c_[i + j] += c_[i] * o.c_[j];
      }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  bool operator==(const TruncSeries& o) const {
    if (K() != o.K()) return false;
    for (int i = 0; i < K(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  // Composition g(s) for g given by coefficients; requires s to have zero constant term.
  static TruncSeries compose(const std::vector<C>& g, const TruncSeries& s) {
    TruncSeries r = s.zero_like();
    for (int j = std::min(static_cast<int>(g.size()), s.K()) - 1; j >= 0; --j) {
      r = r * s;
      if (!g[j].is_zero()) r.c_[0] += g[j];
    }
    return r;
  }

 private:
  void check(const TruncSeries& o) const {
    if (K() != o.K()) raise(ErrorCode::ContextMismatch, "series with different truncation");
  }
  std::vector<C> c_;
};

}  // namespace ecloc
