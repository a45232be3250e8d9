#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ecloc {

// Fixed, ordered variable universe.
enum class Var : std::uint8_t {
  a1, a2, a3, a4, a6, A, B, X, Z, n, X1, Y1, Z1, X2, Y2, Z2,
  beta1, beta2, beta3, beta4, beta5, beta6, beta7, beta8,
  beta9, beta10, beta11, beta12, beta13, beta14, beta15, beta16,
};
constexpr int kNumVars = 32;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);
inline Var beta(int j) { return static_cast<Var>(static_cast<int>(Var::beta1) + j - 1); }

struct Monomial {
  std::array<std::uint8_t, kNumVars> e{};

  std::uint8_t operator[](Var v) const { return e[static_cast<int>(v)]; }
  std::uint8_t& operator[](Var v) { return e[static_cast<int>(v)]; }
  int total_degree() const;
  // Weight used by truncation: deg_X + z_weight * deg_Z.
  int trunc_weight(int z_weight = 0) const { return e[int(Var::X)] + z_weight * e[int(Var::Z)]; }
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }
};

// Graded lexicographic comparison: true when a comes before b in descending order.
bool grlex_greater(const Monomial& a, const Monomial& b);

class MultiPoly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  MultiPoly() = default;
  MultiPoly(long long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly var(Var v, int exp = 1);
  static MultiPoly monomial(const Monomial& m, const mpq_class& c);
  static MultiPoly from_terms(std::vector<Term> terms, int trunc = -1, int z_weight = 0);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int truncation() const { return trunc_; }
  int z_weight() const { return zw_; }
  // Work modulo the terms with deg_X + z_weight * deg_Z >= K.
  MultiPoly with_truncation(int K, int z_weight = 0) const;
  MultiPoly without_truncation() const;

  // Generic ring interface.
  MultiPoly zero_like() const { return MultiPoly(); }
  MultiPoly one_like() const { return MultiPoly(1); }
  MultiPoly from_int(long long n) const { return MultiPoly(n); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  bool is_unit() const { return is_constant() && !is_zero(); }
  MultiPoly inverse() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const mpq_class& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  int degree(Var v) const;
  int total_degree() const;
  // Weighted degree with deg(beta_j) = j and every other variable weight 0.
  int beta_degree() const;
  int weighted_degree(const std::array<int, kNumVars>& w) const;
  bool uses(Var v) const { return degree(v) > 0; }

  // Coefficient of v^d, as a polynomial in the remaining variables.
  MultiPoly coefficient(Var v, int d) const;
  // Group terms by their exponents on the given variables.
  std::map<Monomial, MultiPoly> split(const std::set<Var>& vars) const;

  MultiPoly substitute(const std::map<Var, MultiPoly>& bindings) const;
  // Drop every term divisible by one of the generators.
  MultiPoly reduce_monomial_ideal(const std::vector<Monomial>& gens) const;
  // Rewrite v^e -> replacement until deg_v < e.
  MultiPoly reduce_power(Var v, int e, const MultiPoly& replacement) const;

  template <class R, class VarMap, class CoeffMap>
  R evaluate(const R& zero, VarMap&& value_of, CoeffMap&& coeff_of) const {
    R acc = zero;
    for (const auto& [m, c] : terms_) {
      R t = coeff_of(c);
      for (int i = 0; i < kNumVars; ++i)
        for (int j = 0; j < m.e[i]; ++j) t = t * value_of(static_cast<Var>(i));
      acc = acc + t;
    }
    return acc;
  }

  std::string str() const;
  static MultiPoly parse(const std::string& text);

 private:
  void normalize();
  void apply_truncation();
  std::vector<Term> terms_;  // sorted by Monomial::operator<, no zero coefficients
  int trunc_ = -1;
  int zw_ = 0;
};

MultiPoly operator*(long long c, const MultiPoly& p);

struct DenominatorProfile {
  mpz_class lcm;
  std::vector<unsigned long> primes;
};
DenominatorProfile denominator_profile(const MultiPoly& p);

// Fit, per monomial in the variables other than n, a polynomial in n of the given
// degree through the samples. With force_zero_at_0 and exactly `degree` samples the
// root at n = 0 is used as a node; with more samples it is checked instead.
MultiPoly interpolate_n(const std::vector<std::pair<long long, MultiPoly>>& samples, int degree,
                        bool force_zero_at_0);

// Univariate Lagrange fit over Q in monomial basis (lowest degree first).
std::vector<mpq_class> lagrange_coefficients(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

// Reduce an integral polynomial modulo p; nullopt when some denominator is divisible by p.
std::optional<MultiPoly> reduce_mod_p(const MultiPoly& p, unsigned long prime);

// Product of the first i factorials.
mpz_class factorial_product(int i);

}  // namespace ecloc
