#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ecloc/curve.hpp"
#include "ecloc/localring.hpp"
#include "ecloc/series.hpp"
#include "ecloc/sympoly.hpp"

namespace ecloc {

// ---------------------------------------------------------------- f(x)

// Coefficients c_0..c_{K-1} of f with z = f(x) on y = 1, by the coefficient recursion
// c_j = [j=3] - a1 c_{j-1} + a2 c_{j-2} - a3 (z^2)_j + a4 (z^2)_{j-1} + a6 (z^3)_j.
template <class R>
std::vector<R> f_coefficients(const Curve<R>& c, int K) {
  R zero = c.a1.zero_like();
  std::vector<R> f(K, zero), z2(K, zero), z3(K, zero);
  for (int j = 0; j < K; ++j) {
    R v = j == 3 ? c.a1.one_like() : zero;
    if (j >= 1 && !f[j - 1].is_zero()) v = v - c.a1 * f[j - 1];
    if (j >= 2 && !f[j - 2].is_zero()) v = v + c.a2 * f[j - 2];
    R s2 = zero;
    for (int i = 3; i <= j - 3; ++i) s2 = s2 + f[i] * f[j - i];
    R s3 = zero;
    for (int i = 3; i <= j - 6; ++i) s3 = s3 + f[i] * z2[j - i];
    z2[j] = s2;
    z3[j] = s3;
    if (!s2.is_zero()) v = v - c.a3 * s2;
    if (j >= 1 && !z2[j - 1].is_zero()) v = v + c.a4 * z2[j - 1];
    if (!s3.is_zero()) v = v + c.a6 * s3;
    f[j] = v;
  }
  return f;
}

template <class R>
struct FPolynomial {
  std::vector<R> c;
  R eval(const R& x) const {
    R acc = x.zero_like();
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
    return acc;
  }
};

enum class Form { Extended, Short };
const char* form_name(Form f);

// The symbolic curve: a1..a6 as variables, or the short form with A, B.
Curve<MultiPoly> symbolic_curve(Form form);
// f modulo X^K as a polynomial in X, by the coefficient recursion.
MultiPoly f_symbolic(int K, Form form);
// f modulo X^K by iterated substitution of z into the curve equation.
MultiPoly f_by_substitution(int K, Form form);

// ---------------------------------------------------------------- E^∞ points

struct LocalCurveData;

class LocalCurve {
 public:
  explicit LocalCurve(const LocalCurveCoeffs& coeffs);
  const LocalCurveCoeffs& coeffs() const;
  const RkCtx& ring() const;
  int k() const;
  std::uint32_t p() const;
  int e() const;
  std::uint32_t q() const;
  bool is_elliptic() const;
  RkElement discriminant() const;
  const FPolynomial<RkElement>& f() const;

 private:
  std::shared_ptr<const LocalCurveData> d_;
};

class InfinityPoint {
 public:
  InfinityPoint(LocalCurve curve, RkElement x, RkElement z);
  const LocalCurve& curve() const { return curve_; }
  const RkElement& x() const { return x_; }
  const RkElement& z() const { return z_; }
  Nu nu() const { return x_.nu(); }
  bool is_identity() const { return x_.is_zero(); }
  LocalPoint triple() const;
  bool operator==(const InfinityPoint& o) const { return x_ == o.x_ && z_ == o.z_; }
  bool operator!=(const InfinityPoint& o) const { return !(*this == o); }

 private:
  LocalCurve curve_;
  RkElement x_, z_;
};

InfinityPoint point_from_x(const LocalCurve& curve, const RkElement& x);
InfinityPoint infinity_identity(const LocalCurve& curve);
InfinityPoint from_triple(const LocalCurve& curve, const LocalPoint& P);
InfinityPoint inf_add(const InfinityPoint& P, const InfinityPoint& Q, AddCounter* counter = nullptr);
InfinityPoint inf_neg(const InfinityPoint& P);
InfinityPoint inf_sub(const InfinityPoint& P, const InfinityPoint& Q, AddCounter* counter = nullptr);
InfinityPoint inf_mul(unsigned long long n, const InfinityPoint& P, AddCounter* counter = nullptr);
// Order p^t of P, found by repeated multiplication by p.
unsigned long long inf_order(const InfinityPoint& P);

// Double-and-add with +_(0:1:0) only, for rings where it is always valid.
template <class R>
Point<R> scalar_mul_inf(const Curve<R>& c, unsigned long long n, const Point<R>& P) {
  if (n == 0) return identity_point(c);
  int top = 63;
  while (!((n >> top) & 1)) --top;
  Point<R> acc = P;
  for (int b = top - 1; b >= 0; --b) {
    acc = add_inf(c, acc, acc);
    if ((n >> b) & 1) acc = add_inf(c, acc, P);
  }
  return acc;
}

// ---------------------------------------------------------------- ψ tables

struct MultPolyTable {
  Form form = Form::Extended;
  int imax = 0;
  std::vector<MultiPoly> psi;  // psi[i] for 1 <= i <= imax; psi[0] = 0
  bool validated = false;
  const MultiPoly& operator()(int i) const { return psi.at(i); }
};

struct PsiTableOptions {
  bool validate = true;
  bool use_cache = true;
};

MultPolyTable psi_table(int imax, Form form, PsiTableOptions opts = {});
// Symbolic check that (n-1)P + P = nP with x-coordinates taken from the table.
bool validate_psi_table(const MultPolyTable& table);
// Coefficients of (nP)_x in X for the symbolic point, n = 1..nmax, modulo X^K.
std::vector<TruncSeries<MultiPoly>> symbolic_multiples(int K, int nmax, Form form);

// ψ_0(n)..ψ_imax(n) over Z[a] (or Z[A, B]) for a fixed integer n, from n·P over series.
std::vector<MultiPoly> psi_at_integer(unsigned long long n, int imax, Form form);

// Largest i for which a symbolic table may be generated (ECLOC_SYMBOLIC_BUDGET overrides).
int symbolic_budget();
int symbolic_budget_for(Form form);

// ψ_i(n) specialized to a concrete curve; the table's form must fit the curve.
RkElement psi_eval(const MultPolyTable& table, int i, long long n, const LocalCurve& curve);
// ψ_0(n)..ψ_imax(n) on a concrete curve from n·(X:1:f(X)) over R_k[X]/(X^{imax+1}).
std::vector<RkElement> psi_values_concrete(const LocalCurve& curve, unsigned long long n, int imax);

struct MultipleX {
  RkElement direct;
  std::optional<RkElement> from_table;
};
MultipleX x_of_multiple(const InfinityPoint& P, unsigned long long n, const MultPolyTable* table = nullptr);

// ---------------------------------------------------------------- structure

std::vector<Nu> trajectory(const InfinityPoint& P);

struct CaseInfo {
  bool exceptional = false;
  Nu d;
  RkElement psi_pp;
  std::string route;
};
CaseInfo classify_case(const LocalCurve& curve);

struct ExceptionalReport {
  Nu d;
  bool c1 = false, c2 = false, c3 = false;
  std::string failing;  // first failing condition with its index, if any
  std::string route;
  std::vector<int> A;
  std::map<int, int> l;
  std::vector<RkElement> psi_at_p;  // ψ_i(p) for 0 <= i <= p^2
  // False when two generator trajectories share a degree; A and l are then partial.
  bool disjoint = true;
  std::string collision;
  bool all() const { return c1 && c2 && c3; }
};
ExceptionalReport check_conditions(const LocalCurve& curve);

enum class Provenance { Trivial, SmallK, MainCase, ExceptionalCase, RelationLattice, BruteForce };
const char* provenance_name(Provenance p);

struct GroupStructure {
  std::map<unsigned long long, int> factors;  // cyclic order p^l -> multiplicity
  Provenance provenance = Provenance::Trivial;
  std::string theorem;
  std::vector<std::string> notes;
  std::optional<Nu> d;
  std::vector<int> A;
  std::map<int, int> l;
  std::optional<std::uint64_t> residue_order;
  std::optional<bool> split;
  mpz_class order() const;
  bool same_group(const GroupStructure& o) const { return factors == o.factors; }
  std::string str() const;
};

GroupStructure group_structure(const LocalCurve& curve);
GroupStructure brute_force_structure(const LocalCurve& curve);
// Invariant factors of Z^N modulo the relations p*g = (digit expansion of p*g) over
// the basis g = point_from_x(t^j eps^m); exact for every curve.
GroupStructure relation_lattice_structure(const LocalCurve& curve);
GroupStructure full_group_report(const LocalCurve& curve);

// ---------------------------------------------------------------- DLP

struct DlpStep {
  int i = 0;
  Nu m;       // ν(p^i P)
  Nu nu_r;    // ν of the residual before this digit
  std::uint32_t c_r = 0, c_t = 0;  // leading coefficient codes
  unsigned b = 0;
  RkElement residual_after;  // x-coordinate of the residual after removing b p^i P
};

struct DlpResult {
  unsigned long long n = 0;
  unsigned long long order = 0;
  std::vector<DlpStep> steps;
  long long additions = 0;
};

DlpResult dlp_solve(const InfinityPoint& P, const InfinityPoint& Q);
// Bound 2 ceil(log_p ord) ceil(log2 p) on the additions of the digit loop.
long long dlp_addition_bound(std::uint32_t p, unsigned long long order);

// ---------------------------------------------------------------- scan

struct ScanResult {
  std::uint32_t p = 0;
  std::uint64_t exceptional = 0;
  std::uint64_t total = 0;
  mpq_class rate;
  std::string route;
};
enum class ScanRoute { Auto, Table, Direct };
ScanResult scan_exceptional_rate(std::uint32_t p, ScanRoute route = ScanRoute::Auto);
// ψ_p(p) mod p as a polynomial in A, B computed from p·(X:1:f(X)) over Z[A,B].
MultiPoly psi_pp_short_direct(std::uint32_t p);

}  // namespace ecloc
