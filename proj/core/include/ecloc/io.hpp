#pragma once

#include <map>
#include <string>
#include <vector>

#include "ecloc/infinity.hpp"

namespace ecloc {

// Flat key = value curve description. Keys: p, e, modulus, k, a1..a6 (or A, B),
// and optional elements such as Px, Qx. Lines starting with '#' are comments.
struct CurveFile {
  std::uint32_t p = 0;
  int e = 1;
  std::vector<std::uint32_t> modulus;  // empty: bundled default
  int k = 1;
  bool short_form = false;
  LocalCurveCoeffs coeffs;
  std::map<std::string, RkElement> extras;
  RkCtx ring() const { return coeffs.a1.ctx(); }
};

CurveFile parse_curve_file(const std::string& text, bool allow_singular = false);
CurveFile load_curve_file(const std::string& path, bool allow_singular = false);
std::string write_curve_file(const CurveFile& cf);

// F_q element as its base-p code; R_k element as k comma-separated codes.
FqElement parse_fq_element(const FqCtx& ctx, const std::string& text);
std::string format_fq_element(const FqElement& a);
RkElement parse_rk_element(const RkCtx& ctx, const std::string& text);
std::string format_rk_element(const RkElement& r);
// Human form such as "2 + eps^16".
std::string format_rk_human(const RkElement& r);
std::string format_point(const LocalPoint& P);
LocalPoint parse_point(const RkCtx& ctx, const std::string& text);

std::string structure_report_text(const GroupStructure& gs, const LocalCurve& curve);
std::string structure_report_json(const GroupStructure& gs, const LocalCurve& curve);
GroupStructure parse_structure_report_json(const std::string& text);

std::string dlp_transcript_text(const DlpResult& r);
std::string dlp_transcript_json(const DlpResult& r);
DlpResult parse_dlp_transcript_json(const std::string& text, const RkCtx& ring);

std::string psi_table_file(const MultPolyTable& t);
MultPolyTable parse_psi_table_file(const std::string& text);

}  // namespace ecloc
