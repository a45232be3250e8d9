#include "ecloc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ecloc {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

unsigned long parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    raise(ErrorCode::Parse, what + ": expected a non-negative integer, got '" + s + "'");
  try {
    return std::stoul(s);
  } catch (const std::exception&) {
    raise(ErrorCode::Parse, what + ": integer out of range '" + s + "'");
  }
}

}  // namespace

FqElement parse_fq_element(const FqCtx& ctx, const std::string& text) {
  unsigned long v = parse_uint(trim(text), "field element");
  if (v >= ctx->q()) raise(ErrorCode::Parse, "field element " + std::to_string(v) + " is not below q = " + std::to_string(ctx->q()));
  return FqElement(ctx, static_cast<std::uint32_t>(v));
}

std::string format_fq_element(const FqElement& a) { return std::to_string(a.code()); }

RkElement parse_rk_element(const RkCtx& ctx, const std::string& text) {
  std::vector<std::string> parts = split_commas(trim(text));
  if (static_cast<int>(parts.size()) > ctx->k())
    raise(ErrorCode::Parse, "ring element has " + std::to_string(parts.size()) + " entries, k = " + std::to_string(ctx->k()));
  std::vector<std::uint32_t> codes;
  for (const auto& s : parts) codes.push_back(parse_fq_element(ctx->field(), s).code());
  return RkElement(ctx, codes);
}

std::string format_rk_element(const RkElement& r) { return r.str(); }

std::string format_rk_human(const RkElement& r) {
  std::string out;
  for (int i = 0; i < r.k(); ++i) {
    std::uint32_t c = r.code(i);
    if (!c) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += i == 1 ? "eps" : "eps^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_point(const LocalPoint& P) {
  return "(" + format_rk_element(P.X) + " : " + format_rk_element(P.Y) + " : " + format_rk_element(P.Z) + ")";
}

LocalPoint parse_point(const RkCtx& ctx, const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') raise(ErrorCode::Parse, "point must look like (X : Y : Z)");
  std::vector<std::string> parts;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) raise(ErrorCode::Parse, "point needs three coordinates");
  return LocalPoint{parse_rk_element(ctx, parts[0]), parse_rk_element(ctx, parts[1]), parse_rk_element(ctx, parts[2])};
}

CurveFile parse_curve_file(const std::string& text, bool allow_singular) {
  std::map<std::string, std::pair<std::string, int>> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) raise(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(s.substr(0, eq)), value = trim(s.substr(eq + 1));
    if (key.empty()) raise(ErrorCode::Parse, "line " + std::to_string(lineno) + ": empty key");
    if (kv.count(key)) raise(ErrorCode::Parse, "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = {value, lineno};
  }
  auto at = [&](const std::string& key) -> const std::pair<std::string, int>& {
    auto it = kv.find(key);
    if (it == kv.end()) raise(ErrorCode::Parse, "missing key '" + key + "'");
    return it->second;
  };
  auto with_line = [&](const std::string& key, auto&& fn) {
    const auto& [value, ln] = at(key);
    try {
      return fn(value);
    } catch (const Error& err) {
      throw Error(err.code(), "line " + std::to_string(ln) + " (" + key + "): " + err.message());
    }
  };

  CurveFile cf;
  cf.p = with_line("p", [&](const std::string& v) { return static_cast<std::uint32_t>(parse_uint(v, "p")); });
  cf.e = kv.count("e") ? with_line("e", [&](const std::string& v) { return static_cast<int>(parse_uint(v, "e")); }) : 1;
  cf.k = with_line("k", [&](const std::string& v) { return static_cast<int>(parse_uint(v, "k")); });
  if (kv.count("modulus"))
    cf.modulus = with_line("modulus", [&](const std::string& v) {
      std::vector<std::uint32_t> m;
      for (const auto& s : split_commas(v)) m.push_back(static_cast<std::uint32_t>(parse_uint(s, "modulus")));
      return m;
    });
  FqCtx field = with_line("p", [&](const std::string&) { return FqContext::make(cf.p, cf.e, cf.modulus); });
  RkCtx ring = with_line("k", [&](const std::string&) { return RkContext::make(field, cf.k); });

  bool has_short = kv.count("A") || kv.count("B");
  bool has_ext = false;
  for (const char* key : {"a1", "a2", "a3", "a4", "a6"}) has_ext = has_ext || kv.count(key);
  if (has_short && has_ext) raise(ErrorCode::Parse, "use either a1..a6 or the A, B shorthand, not both");
  auto elem = [&](const std::string& key) {
    if (!kv.count(key)) return RkElement::zero(ring);
    return with_line(key, [&](const std::string& v) { return parse_rk_element(ring, v); });
  };
  cf.short_form = has_short;
  if (has_short)
    cf.coeffs = LocalCurveCoeffs::short_form(elem("A"), elem("B"));
  else
    cf.coeffs = LocalCurveCoeffs{elem("a1"), elem("a2"), elem("a3"), elem("a4"), elem("a6")};
  for (const auto& [key, value] : kv) {
    static const std::set<std::string> known = {"p", "e", "k", "modulus", "a1", "a2", "a3", "a4", "a6", "A", "B"};
    if (known.count(key)) continue;
    cf.extras.emplace(key, elem(key));
  }
  if (!allow_singular && !cf.coeffs.is_elliptic())
    raise(ErrorCode::NotElliptic, "discriminant " + format_rk_element(cf.coeffs.discriminant()) + " is not a unit");
  return cf;
}

CurveFile load_curve_file(const std::string& path, bool allow_singular) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_curve_file(ss.str(), allow_singular);
  } catch (const Error& err) {
    throw Error(err.code(), path + ": " + err.message());
  }
}

std::string write_curve_file(const CurveFile& cf) {
  std::ostringstream os;
  os << "p = " << cf.p << "\ne = " << cf.e << "\n";
  if (!cf.modulus.empty()) {
    os << "modulus = ";
    for (std::size_t i = 0; i < cf.modulus.size(); ++i) os << (i ? "," : "") << cf.modulus[i];
    os << "\n";
  }
  os << "k = " << cf.k << "\n";
  os << "a1 = " << format_rk_element(cf.coeffs.a1) << "\n"
     << "a2 = " << format_rk_element(cf.coeffs.a2) << "\n"
     << "a3 = " << format_rk_element(cf.coeffs.a3) << "\n"
     << "a4 = " << format_rk_element(cf.coeffs.a4) << "\n"
     << "a6 = " << format_rk_element(cf.coeffs.a6) << "\n";
  for (const auto& [key, v] : cf.extras) os << key << " = " << format_rk_element(v) << "\n";
  return os.str();
}

namespace {

Provenance provenance_from_name(const std::string& s) {
  for (Provenance p : {Provenance::Trivial, Provenance::SmallK, Provenance::MainCase, Provenance::ExceptionalCase,
                       Provenance::RelationLattice, Provenance::BruteForce})
    if (s == provenance_name(p)) return p;
  raise(ErrorCode::Parse, "unknown provenance '" + s + "'");
}

nlohmann::json nu_json(Nu v) { return v.infinite() ? nlohmann::json("inf") : nlohmann::json(v.value()); }

Nu nu_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") raise(ErrorCode::Parse, "bad minimal degree");
    return Nu::infinity();
  }
  return Nu(j.get<int>());
}

}  // namespace

std::string structure_report_text(const GroupStructure& gs, const LocalCurve& curve) {
  std::ostringstream os;
  os << "ring: " << curve.ring()->describe() << "\n";
  os << "E^inf = " << gs.str() << "   (order " << curve.p() << "^" << [&] {
    mpz_class o = gs.order();
    int lg = 0;
    while (o > 1 && mpz_divisible_ui_p(o.get_mpz_t(), curve.p())) {
      o /= curve.p();
      ++lg;
    }
    return lg;
  }() << ")\n";
  os << "provenance: " << provenance_name(gs.provenance) << " -- " << gs.theorem << "\n";
  if (gs.d) os << "d = nu(psi_p(p)) = " << gs.d->str() << "\n";
  if (!gs.A.empty()) {
    os << "A = {";
    for (std::size_t i = 0; i < gs.A.size(); ++i) os << (i ? ", " : "") << gs.A[i];
    os << "}\nl_m:";
    for (int m : gs.A)
      if (gs.l.at(m) > 1) os << " l_" << m << "=" << gs.l.at(m);
    os << " (others 1)\n";
  }
  if (gs.residue_order) {
    os << "#E(F_q) = " << *gs.residue_order << "\n";
    if (gs.split && *gs.split) os << "E(R_k) = E(F_q) + E^inf  (p does not divide #E(F_q))\n";
  }
  for (const auto& n : gs.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string structure_report_json(const GroupStructure& gs, const LocalCurve& curve) {
  nlohmann::json j;
  j["ring"] = {{"p", curve.p()}, {"e", curve.e()}, {"k", curve.k()}, {"modulus", curve.ring()->field()->modulus()}};
  j["structure"] = gs.str();
  j["provenance"] = provenance_name(gs.provenance);
  j["theorem"] = gs.theorem;
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [ord, mult] : gs.factors) factors.push_back({{"order", ord}, {"multiplicity", mult}});
  j["factors"] = factors;
  j["group_order"] = gs.order().get_str();
  j["d"] = gs.d ? nu_json(*gs.d) : nlohmann::json(nullptr);
  j["A"] = gs.A;
  nlohmann::json l = nlohmann::json::object();
  for (const auto& [m, v] : gs.l) l[std::to_string(m)] = v;
  j["l"] = l;
  j["residue_order"] = gs.residue_order ? nlohmann::json(*gs.residue_order) : nlohmann::json(nullptr);
  j["split"] = gs.split ? nlohmann::json(*gs.split) : nlohmann::json(nullptr);
  j["notes"] = gs.notes;
  return j.dump(2);
}

GroupStructure parse_structure_report_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    GroupStructure gs;
    gs.provenance = provenance_from_name(j.at("provenance").get<std::string>());
    gs.theorem = j.at("theorem").get<std::string>();
    for (const auto& f : j.at("factors")) gs.factors[f.at("order").get<unsigned long long>()] = f.at("multiplicity").get<int>();
    if (!j.at("d").is_null()) gs.d = nu_from_json(j.at("d"));
    gs.A = j.at("A").get<std::vector<int>>();
    for (const auto& [m, v] : j.at("l").items()) gs.l[std::stoi(m)] = v.get<int>();
    if (!j.at("residue_order").is_null()) gs.residue_order = j.at("residue_order").get<std::uint64_t>();
    if (!j.at("split").is_null()) gs.split = j.at("split").get<bool>();
    gs.notes = j.at("notes").get<std::vector<std::string>>();
    if (gs.order().get_str() != j.at("group_order").get<std::string>())
      raise(ErrorCode::Parse, "group_order does not match the factors");
    return gs;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::Parse, std::string("structure report: ") + e.what());
  }
}

std::string dlp_transcript_text(const DlpResult& r) {
  std::ostringstream os;
  for (const auto& s : r.steps) {
    os << "digit " << s.i << ": m_" << s.i << " = " << s.m.str() << ", nu(R) = " << s.nu_r.str();
    if (s.nu_r == s.m) os << ", c_R = " << s.c_r << ", c_T = " << s.c_t;
    os << ", b_" << s.i << " = " << s.b << ", residual x = " << format_rk_human(s.residual_after) << "\n";
  }
  os << "digits (b_0 first): ";
  for (std::size_t i = 0; i < r.steps.size(); ++i) os << (i ? "," : "") << r.steps[i].b;
  os << "\nn = " << r.n << "\nord(P) = " << r.order << "\nadditions = " << r.additions << "\n";
  return os.str();
}

std::string dlp_transcript_json(const DlpResult& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["order"] = r.order;
  j["additions"] = r.additions;
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"i", s.i}, {"m", nu_json(s.m)}, {"nu_r", nu_json(s.nu_r)}, {"c_r", s.c_r}, {"c_t", s.c_t},
                     {"b", s.b}, {"residual", format_rk_element(s.residual_after)}});
  j["steps"] = steps;
  return j.dump(2);
}

DlpResult parse_dlp_transcript_json(const std::string& text, const RkCtx& ring) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    DlpResult r;
    r.n = j.at("n").get<unsigned long long>();
    r.order = j.at("order").get<unsigned long long>();
    r.additions = j.at("additions").get<long long>();
    for (const auto& s : j.at("steps")) {
      DlpStep st;
      st.i = s.at("i").get<int>();
      st.m = nu_from_json(s.at("m"));
      st.nu_r = nu_from_json(s.at("nu_r"));
      st.c_r = s.at("c_r").get<std::uint32_t>();
      st.c_t = s.at("c_t").get<std::uint32_t>();
      st.b = s.at("b").get<unsigned>();
      st.residual_after = parse_rk_element(ring, s.at("residual").get<std::string>());
      r.steps.push_back(st);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::Parse, std::string("dlp transcript: ") + e.what());
  }
}

std::string psi_table_file(const MultPolyTable& t) {
  std::ostringstream os;
  os << "# psi table form=" << form_name(t.form) << " imax=" << t.imax << "\n";
  for (int i = 1; i <= t.imax; ++i) {
    std::set<Var> avars;
    for (int v = 0; v < kNumVars; ++v)
      if (static_cast<Var>(v) != Var::n) avars.insert(static_cast<Var>(v));
    auto groups = t(i).split(avars);
    std::vector<std::pair<Monomial, MultiPoly>> ordered(groups.begin(), groups.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
    for (const auto& [m, poly] : ordered) {
      std::string mono = MultiPoly::monomial(m, 1).str();
      os << i << "\t" << mono << "\t" << poly.str() << "\n";
    }
  }
  return os.str();
}

MultPolyTable parse_psi_table_file(const std::string& text) {
  MultPolyTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto f = line.find("form=");
      auto m = line.find("imax=");
      if (f == std::string::npos || m == std::string::npos) continue;
      std::string form = line.substr(f + 5, line.find(' ', f) - f - 5);
      if (form != "extended" && form != "short") raise(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad form");
      t.form = form == "short" ? Form::Short : Form::Extended;
      t.imax = static_cast<int>(parse_uint(trim(line.substr(m + 5)), "imax"));
      t.psi.assign(t.imax + 1, MultiPoly());
      header = true;
      continue;
    }
    if (!header) raise(ErrorCode::Parse, "line " + std::to_string(lineno) + ": missing header");
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, '\t')) cols.push_back(c);
    if (cols.size() != 3) raise(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected three tab-separated columns");
    try {
      int i = static_cast<int>(parse_uint(cols[0], "index"));
      if (i < 1 || i > t.imax) raise(ErrorCode::Parse, "index out of range");
      MultiPoly mono = MultiPoly::parse(cols[1]), poly = MultiPoly::parse(cols[2]);
      t.psi[i] += mono * poly;
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.message());
    }
  }
  if (!header) raise(ErrorCode::Parse, "empty psi table file");
  return t;
}

}  // namespace ecloc
