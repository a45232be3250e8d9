#include "ecloc/sympoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ecloc/error.hpp"

namespace ecloc {

namespace {

const char* const kNames[kNumVars] = {
    "a1", "a2", "a3", "a4", "a6", "A", "B", "X", "Z", "n", "X1", "Y1", "Z1", "X2", "Y2", "Z2",
    "beta1", "beta2", "beta3", "beta4", "beta5", "beta6", "beta7", "beta8",
    "beta9", "beta10", "beta11", "beta12", "beta13", "beta14", "beta15", "beta16",
};

}  // namespace

const char* var_name(Var v) { return kNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    int s = e[i] + o.e[i];
    if (s > 255) raise(ErrorCode::TooLarge, "exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

MultiPoly::MultiPoly(long long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, mpq_class(static_cast<long>(c)));
}

MultiPoly::MultiPoly(const mpq_class& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MultiPoly MultiPoly::var(Var v, int exp) {
  Monomial m;
  m[v] = static_cast<std::uint8_t>(exp);
  return monomial(m, 1);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const mpq_class& c) {
  MultiPoly r;
  if (c != 0) {
    r.terms_.emplace_back(m, c);
    r.terms_.back().second.canonicalize();
  }
  return r;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms, int trunc, int z_weight) {
  MultiPoly r;
  r.terms_ = std::move(terms);
  r.trunc_ = trunc;
  r.zw_ = trunc >= 0 ? z_weight : 0;
  r.normalize();
  return r;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    t.second.canonicalize();
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
  apply_truncation();
}

void MultiPoly::apply_truncation() {
  if (trunc_ < 0) return;
  std::erase_if(terms_, [&](const Term& t) { return t.first.trunc_weight(zw_) >= trunc_; });
}

MultiPoly MultiPoly::with_truncation(int K, int z_weight) const {
  MultiPoly r = *this;
  if (trunc_ >= 0 && zw_ != z_weight) raise(ErrorCode::InvalidArgument, "conflicting truncation weights");
  r.trunc_ = (trunc_ < 0) ? K : std::min(trunc_, K);
  r.zw_ = z_weight;
  r.apply_truncation();
  return r;
}

MultiPoly MultiPoly::without_truncation() const {
  MultiPoly r = *this;
  r.trunc_ = -1;
  r.zw_ = 0;
  return r;
}

namespace {
int merge_trunc(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}
}  // namespace

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

mpq_class MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first == Monomial{}) return terms_[0].second;
  return 0;
}

MultiPoly MultiPoly::inverse() const {
  if (is_unit()) {
    MultiPoly r(1 / terms_[0].second);
    r.trunc_ = trunc_;
    r.zw_ = zw_;
    return r;
  }
  // Under truncation, 1/(c + w) with w of positive weight is a finite series.
  mpq_class c = constant_term();
  if (trunc_ < 0 || c == 0) raise(ErrorCode::NotAUnit, "polynomial is not invertible");
  for (const auto& t : terms_)
    if (!(t.first == Monomial{}) && t.first.trunc_weight(zw_) == 0)
      raise(ErrorCode::NotAUnit, "polynomial is not invertible under truncation");
  MultiPoly w = -(*this).scaled(1 / c) + MultiPoly(1);
  w.trunc_ = trunc_;
  w.zw_ = zw_;
  MultiPoly s(1);
  s.trunc_ = trunc_;
  s.zw_ = zw_;
  for (int span = 1; span < trunc_; span *= 2) {
    s = s + s * w;
    w = w * w;
  }
  return s.scaled(1 / c);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r;
  r.trunc_ = merge_trunc(trunc_, o.trunc_);
  r.zw_ = trunc_ >= 0 ? zw_ : o.zw_;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpq_class s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  r.apply_truncation();
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
  if (c == 0) {
    MultiPoly z;
    z.trunc_ = trunc_;
    z.zw_ = zw_;
    return z;
  }
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  r.trunc_ = merge_trunc(trunc_, o.trunc_);
  r.zw_ = trunc_ >= 0 ? zw_ : o.zw_;
  if (terms_.empty() || o.terms_.empty()) return r;
  if (o.is_constant()) {
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= o.terms_[0].second;
    r.apply_truncation();
    return r;
  }
  if (is_constant()) {
    r.terms_ = o.terms_;
    for (auto& t : r.terms_) t.second *= terms_[0].second;
    r.apply_truncation();
    return r;
  }
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_) {
    const int wa = ma.trunc_weight(r.zw_);
    if (r.trunc_ >= 0 && wa >= r.trunc_) continue;
    for (const auto& [mb, cb] : o.terms_) {
      if (r.trunc_ >= 0 && wa + mb.trunc_weight(r.zw_) >= r.trunc_) continue;
      r.terms_.emplace_back(ma * mb, ca * cb);
    }
  }
  r.normalize();
  return r;
}

MultiPoly operator*(long long c, const MultiPoly& p) { return p.scaled(mpq_class(static_cast<long>(c))); }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(1);
  r.trunc_ = trunc_;
  r.zw_ = zw_;
  MultiPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

int MultiPoly::degree(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first[v]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

int MultiPoly::weighted_degree(const std::array<int, kNumVars>& w) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int i = 0; i < kNumVars; ++i) s += w[i] * t.first.e[i];
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::beta_degree() const {
  std::array<int, kNumVars> w{};
  for (int j = 1; j <= 16; ++j) w[static_cast<int>(beta(j))] = j;
  return weighted_degree(w);
}

MultiPoly MultiPoly::coefficient(Var v, int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first[v] != d) continue;
    Monomial m = t.first;
    m[v] = 0;
    out.emplace_back(m, t.second);
  }
  return from_terms(std::move(out), trunc_, zw_);
}

std::map<Monomial, MultiPoly> MultiPoly::split(const std::set<Var>& vars) const {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Monomial key, rest = t.first;
    for (Var v : vars) {
      key[v] = t.first[v];
      rest[v] = 0;
    }
    groups[key].emplace_back(rest, t.second);
  }
  std::map<Monomial, MultiPoly> out;
  for (auto& [k, ts] : groups) out.emplace(k, from_terms(std::move(ts), trunc_, zw_));
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& bindings) const {
  std::map<std::pair<int, int>, MultiPoly> powers;
  auto power_of = [&](Var v, int e) -> const MultiPoly& {
    auto key = std::make_pair(static_cast<int>(v), e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    MultiPoly base = bindings.at(v);
    if (trunc_ >= 0) base = base.without_truncation().with_truncation(trunc_, zw_);
    return powers.emplace(key, base.pow(e)).first->second;
  };
  MultiPoly acc;
  acc.trunc_ = trunc_;
  acc.zw_ = zw_;
  std::vector<Term> plain;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    MultiPoly factor(c);
    factor.trunc_ = trunc_;
    factor.zw_ = zw_;
    bool bound = false;
    for (const auto& [v, _] : bindings) {
      if (m[v] == 0) continue;
      bound = true;
      factor = factor * power_of(v, m[v]);
      rest[v] = 0;
      if (factor.is_zero()) break;
    }
    if (!bound) {
      plain.emplace_back(m, c);
      continue;
    }
    if (factor.is_zero()) continue;
    MultiPoly mono = monomial(rest, 1);
    mono.trunc_ = trunc_;
    mono.zw_ = zw_;
    acc = acc + factor * mono;
  }
  return acc + from_terms(std::move(plain), trunc_, zw_);
}

MultiPoly MultiPoly::reduce_monomial_ideal(const std::vector<Monomial>& gens) const {
  MultiPoly r = *this;
  std::erase_if(r.terms_, [&](const Term& t) {
    for (const auto& g : gens)
      if (g.divides(t.first)) return true;
    return false;
  });
  return r;
}

MultiPoly MultiPoly::reduce_power(Var v, int e, const MultiPoly& replacement) const {
  MultiPoly cur = *this;
  for (;;) {
    std::vector<Term> keep;
    MultiPoly rewritten;
    rewritten.trunc_ = trunc_;
    rewritten.zw_ = zw_;
    bool any = false;
    std::vector<Term> high;
    for (const auto& t : cur.terms_) {
      if (t.first[v] >= e) {
        Monomial m = t.first;
        m[v] = static_cast<std::uint8_t>(m[v] - e);
        high.emplace_back(m, t.second);
        any = true;
      } else {
        keep.push_back(t);
      }
    }
    if (!any) return cur;
    cur = from_terms(std::move(keep), trunc_, zw_) + from_terms(std::move(high), trunc_, zw_) * replacement;
  }
}

namespace {

std::string coeff_text(const mpq_class& c) {
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += kNames[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) { return grlex_greater(a->first, b->first); });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    mpq_class c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono = monomial_text(t->first);
    if (mono.empty())
      out += coeff_text(c);
    else if (c == 1)
      out += mono;
    else
      out += coeff_text(c) + "*" + mono;
  }
  return out;
}

MultiPoly MultiPoly::parse(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    raise(ErrorCode::Parse, why + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return text.substr(start, pos - start);
  };
  std::vector<Term> terms;
  skip();
  if (pos == text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    mpq_class coef = sign;
    Monomial mono;
    bool need_factor = true;
    while (need_factor) {
      skip();
      if (pos >= text.size()) fail("unexpected end");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        mpz_class num(read_int());
        mpz_class den = 1;
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = mpz_class(read_int());
          if (den == 0) fail("zero denominator");
        }
        coef *= mpq_class(num, den);
        coef.canonicalize();
      } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        auto v = var_from_name(text.substr(start, pos - start));
        if (!v) fail("unknown variable '" + text.substr(start, pos - start) + "'");
        int e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          e = std::stoi(read_int());
        }
        int s = mono[*v] + e;
        if (s > 255) fail("exponent too large");
        mono[*v] = static_cast<std::uint8_t>(s);
      } else {
        fail("unexpected character");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        need_factor = false;
      }
    }
    terms.emplace_back(mono, coef);
  }
  return from_terms(std::move(terms));
}

DenominatorProfile denominator_profile(const MultiPoly& p) {
  DenominatorProfile prof{1, {}};
  for (const auto& t : p.terms()) mpz_lcm(prof.lcm.get_mpz_t(), prof.lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
  mpz_class rest = prof.lcm;
  for (unsigned long d = 2; rest > 1; ++d) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      prof.primes.push_back(d);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) rest /= d;
    }
  }
  return prof;
}

std::vector<mpq_class> lagrange_coefficients(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  const std::size_t n = xs.size();
  // Newton divided differences, then expand into the monomial basis.
  std::vector<mpq_class> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      mpq_class den = xs[i] - xs[i - j];
      if (den == 0) raise(ErrorCode::InconsistentSamples, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
      if (i == j) break;
    }
  std::vector<mpq_class> coeffs(n, 0);
  for (std::size_t ii = n; ii-- > 0;) {
    // coeffs = coeffs * (x - xs[ii]) + dd[ii]
    std::vector<mpq_class> next(n, 0);
    for (std::size_t d = 0; d + 1 < n; ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * xs[ii];
    }
    next[0] += dd[ii];
    coeffs = std::move(next);
  }
  return coeffs;
}

MultiPoly interpolate_n(const std::vector<std::pair<long long, MultiPoly>>& samples, int degree,
                        bool force_zero_at_0) {
  std::vector<std::pair<long long, MultiPoly>> pts = samples;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].first == pts[i - 1].first) raise(ErrorCode::InconsistentSamples, "duplicate sample node");
  bool has_zero = !pts.empty() && std::any_of(pts.begin(), pts.end(), [](const auto& s) { return s.first == 0; });
  if (force_zero_at_0 && !has_zero) pts.insert(pts.begin(), {0, MultiPoly()});
  if (static_cast<int>(pts.size()) < degree + 1)
    raise(ErrorCode::InsufficientSamples, "need " + std::to_string(degree + 1) + " nodes, have " + std::to_string(pts.size()));

  // Fit on nodes other than the forced root whenever enough are available.
  std::vector<std::size_t> fit, extra;
  std::size_t zero_index = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].first == 0 && force_zero_at_0) zero_index = i;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != zero_index) fit.push_back(i);
  if (static_cast<int>(fit.size()) >= degree + 1) {
    extra.assign(fit.begin() + degree + 1, fit.end());
    fit.resize(degree + 1);
    if (zero_index < pts.size()) extra.push_back(zero_index);
  } else {
    fit.push_back(zero_index);
  }

  std::set<Var> others;
  for (int v = 0; v < kNumVars; ++v)
    if (static_cast<Var>(v) != Var::n) others.insert(static_cast<Var>(v));
  std::map<Monomial, std::vector<mpq_class>> values;
  for (std::size_t s = 0; s < pts.size(); ++s) {
    if (pts[s].second.uses(Var::n)) raise(ErrorCode::InvalidArgument, "sample value depends on n");
    for (const auto& [m, c] : pts[s].second.terms()) {
      auto& vec = values[m];
      vec.resize(pts.size(), 0);
      vec[s] = c;
    }
  }
  std::vector<mpq_class> xs;
  for (auto i : fit) xs.emplace_back(static_cast<long>(pts[i].first));
  MultiPoly out;
  for (auto& [m, vec] : values) {
    vec.resize(pts.size(), 0);
    std::vector<mpq_class> ys;
    for (auto i : fit) ys.push_back(vec[i]);
    std::vector<mpq_class> c = lagrange_coefficients(xs, ys);
    for (auto i : extra) {
      mpq_class acc = 0, x = static_cast<long>(pts[i].first);
      for (std::size_t d = c.size(); d-- > 0;) acc = acc * x + c[d];
      if (acc != vec[i])
        raise(ErrorCode::InconsistentSamples, "sample at n=" + std::to_string(pts[i].first) + " is not on the fitted polynomial");
    }
    std::vector<MultiPoly::Term> terms;
    for (std::size_t d = 0; d < c.size(); ++d) {
      if (c[d] == 0) continue;
      Monomial mm = m;
      mm[Var::n] = static_cast<std::uint8_t>(d);
      terms.emplace_back(mm, c[d]);
    }
    out = out + MultiPoly::from_terms(std::move(terms));
  }
  return out;
}

std::optional<MultiPoly> reduce_mod_p(const MultiPoly& p, unsigned long prime) {
  std::vector<MultiPoly::Term> out;
  mpz_class P = prime;
  for (const auto& [m, c] : p.terms()) {
    if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), prime)) return std::nullopt;
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), c.get_den().get_mpz_t(), P.get_mpz_t());
    mpz_class v = c.get_num() * den_inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t());
    if (v != 0) out.emplace_back(m, mpq_class(v));
  }
  return MultiPoly::from_terms(std::move(out), p.truncation(), p.z_weight());
}

mpz_class factorial_product(int i) {
  mpz_class prod = 1, fact = 1;
  for (int j = 1; j <= i; ++j) {
    fact *= j;
    prod *= fact;
  }
  return prod;
}

}  // namespace ecloc
