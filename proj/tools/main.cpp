#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ecloc/io.hpp"
#include "ecloc/verify.hpp"

using namespace ecloc;

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kUnsupported = 2, kNoSolution = 3, kData = 65, kUsage = 64 };

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NoSolution:
    case ErrorCode::DegreeMismatch:
      return kNoSolution;
    case ErrorCode::UnsupportedExceptional:
    case ErrorCode::TableTooLarge:
    case ErrorCode::TooLarge:
      return kUnsupported;
    case ErrorCode::Parse:
    case ErrorCode::NotElliptic:
    case ErrorCode::NotPrime:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::NoDefaultModulus:
    case ErrorCode::NotInMaximalIdeal:
    case ErrorCode::NotOnCurve:
      return kData;
    case ErrorCode::ValidationFailed:
      return kValidationFailed;
    case ErrorCode::InvalidArgument:
      return kUsage;
    default:
      return kUnsupported;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) raise(ErrorCode::InvalidArgument, "cannot write '" + out + "'");
  f << text;
}

std::string case_line(const LocalCurve& curve) {
  CaseInfo ci = classify_case(curve);
  return ci.exceptional ? "exceptional, d=" + ci.d.str() : std::string("main");
}

int cmd_validate(const std::string& path) {
  CurveFile cf = load_curve_file(path, true);
  LocalCurve curve(cf.coeffs);
  std::cout << "ring: " << curve.ring()->describe() << "\n";
  const auto& c = cf.coeffs;
  std::cout << "a1 = " << format_rk_human(c.a1) << "\na2 = " << format_rk_human(c.a2) << "\na3 = " << format_rk_human(c.a3)
            << "\na4 = " << format_rk_human(c.a4) << "\na6 = " << format_rk_human(c.a6) << "\n";
  std::cout << "discriminant: " << format_rk_human(curve.discriminant()) << "\n";
  if (!curve.is_elliptic()) {
    std::cout << "elliptic: no\n";
    return kValidationFailed;
  }
  std::cout << "elliptic: yes; case: " << case_line(curve) << "\n";
  return kOk;
}

int cmd_psi(int imax, const std::string& form_s, long long eval, const std::string& curve_path, const std::string& out) {
  Form form = form_s == "short" ? Form::Short : Form::Extended;
  MultPolyTable t = psi_table(imax, form);
  if (curve_path.empty()) {
    emit(psi_table_file(t), out);
    return kOk;
  }
  LocalCurve curve(load_curve_file(curve_path).coeffs);
  std::string text;
  for (int i = 1; i <= imax; ++i)
    text += "psi_" + std::to_string(i) + "(" + std::to_string(eval) + ") = " + format_rk_human(psi_eval(t, i, eval, curve)) + "\n";
  emit(text, out);
  return kOk;
}

int cmd_structure(const std::string& path, bool brute, bool json, const std::string& out) {
  LocalCurve curve(load_curve_file(path).coeffs);
  GroupStructure gs = full_group_report(curve);
  std::string text = json ? structure_report_json(gs, curve) + "\n" : structure_report_text(gs, curve);
  int rc = kOk;
  if (brute) {
    GroupStructure bf = brute_force_structure(curve);
    bool match = bf.same_group(gs);
    text += "brute force: " + bf.str() + "\n" + (match ? "MATCH" : "MISMATCH") + "\n";
    if (!match) rc = kValidationFailed;
  }
  emit(text, out);
  return rc;
}

int cmd_dlp(const std::string& path, const std::string& px, const std::string& qx, bool json) {
  CurveFile cf = load_curve_file(path);
  LocalCurve curve(cf.coeffs);
  auto pick = [&](const std::string& given, const char* key) {
    if (!given.empty()) return parse_rk_element(curve.ring(), given);
    auto it = cf.extras.find(key);
    if (it == cf.extras.end()) raise(ErrorCode::Parse, std::string("no ") + key + " given and none in the curve file");
    return it->second;
  };
  InfinityPoint P = point_from_x(curve, pick(px, "Px")), Q = point_from_x(curve, pick(qx, "Qx"));
  DlpResult r = dlp_solve(P, Q);
  std::cout << (json ? dlp_transcript_json(r) + "\n" : dlp_transcript_text(r));
  return kOk;
}

int cmd_scan(std::uint32_t p, const std::string& route_s) {
  ScanRoute route = route_s == "table" ? ScanRoute::Table : route_s == "direct" ? ScanRoute::Direct : ScanRoute::Auto;
  ScanResult r = scan_exceptional_rate(p, route);
  std::cout << "p = " << r.p << ": " << r.exceptional << "/" << r.total << " non-singular (A, B) are exceptional; rate "
            << r.rate.get_str() << " (" << r.route << ")\n";
  return kOk;
}

int cmd_verify(bool quick, bool corrupt) {
  VerifyOptions opts;
  opts.quick = quick;
  opts.corrupt_h2 = corrupt;
  bool all = true;
  for (const auto& c : run_verify(opts)) {
    std::cout << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic curves over F_q[eps]/(eps^k): group structure, multiplication polynomials, discrete logs"};
  app.require_subcommand(1);

  std::string file, out, px, qx, form = "extended", route = "auto", curve_path;
  int imax = 4;
  long long eval = 0;
  std::uint32_t scan_p = 5;
  bool brute = false, json = false, quick = false, corrupt = false;

  auto* validate = app.add_subcommand("validate", "Check a curve file: discriminant, unit status, case");
  validate->add_option("file", file, "curve file")->required();

  auto* psi = app.add_subcommand("psi", "Generate multiplication polynomials or evaluate them on a curve");
  psi->add_option("--imax", imax, "largest index i")->check(CLI::PositiveNumber);
  psi->add_option("--form", form, "extended or short")->check(CLI::IsMember({"extended", "short"}));
  auto* eval_opt = psi->add_option("--eval", eval, "evaluate psi_i(n) at this n");
  auto* curve_opt = psi->add_option("--curve", curve_path, "curve file for --eval");
  eval_opt->needs(curve_opt);
  curve_opt->needs(eval_opt);
  psi->add_option("--out", out, "write to a file instead of stdout");

  auto* structure = app.add_subcommand("structure", "Group structure of E^inf (and E(R_k) when it splits)");
  structure->add_option("file", file, "curve file")->required();
  structure->add_flag("--brute-force", brute, "compare against exhaustive enumeration");
  structure->add_flag("--json", json, "machine-readable report");
  structure->add_option("--out", out, "write to a file instead of stdout");

  auto* dlp = app.add_subcommand("dlp", "Solve Q = nP on E^inf");
  dlp->add_option("file", file, "curve file (may carry Px, Qx)")->required();
  dlp->add_option("--px", px, "x-coordinate of P as a comma list");
  dlp->add_option("--qx", qx, "x-coordinate of Q as a comma list");
  dlp->add_flag("--json", json, "machine-readable transcript");

  auto* scan = app.add_subcommand("scan", "Rate of exceptional short curves over F_p");
  scan->add_option("--p", scan_p, "prime p >= 5")->required();
  scan->add_option("--route", route, "auto, table or direct")->check(CLI::IsMember({"auto", "table", "direct"}));

  auto* verify = app.add_subcommand("verify", "Replay the symbolic verification suite");
  verify->add_flag("--quick", quick, "skip the condition checks for p >= 5");
  verify->add_flag("--corrupt-h2", corrupt, "perturb H2 (mutation control)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (psi->parsed()) return cmd_psi(imax, form, eval, curve_path, out);
    if (structure->parsed()) return cmd_structure(file, brute, json, out);
    if (dlp->parsed()) return cmd_dlp(file, px, qx, json);
    if (scan->parsed()) return cmd_scan(scan_p, route);
    if (verify->parsed()) return cmd_verify(quick, corrupt);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoSolution || e.code() == ErrorCode::DegreeMismatch)
      std::cout << "no solution: " << e.message() << "\n";
    else
      std::cerr << "error (" << error_name(e.code()) << "): " << e.message() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}
