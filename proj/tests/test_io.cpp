#include <gtest/gtest.h>

#include "ecloc/io.hpp"
#include "support/gen.hpp"

using namespace ecloc;
using ecloc::testing::data_path;
using ecloc::testing::Gen;

namespace {

ErrorCode code_of(const std::function<void()>& fn, std::string* msg = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (msg) *msg = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalInvariantViolation;
}

}  // namespace

TEST(Io, ElementEncodings) {
  auto r = RkContext::make(FqContext::make(3, 1), 5);
  RkElement x = parse_rk_element(r, "1,2");
  EXPECT_EQ(format_rk_element(x), "1,2,0,0,0");
  EXPECT_EQ(format_rk_human(RkElement::from_int(r, 2) + RkElement::eps_power(r, 4)), "2 + eps^4");
  EXPECT_EQ(format_rk_human(RkElement::zero(r)), "0");
  EXPECT_EQ(code_of([&] { parse_rk_element(r, "1,2,0,0,0,0"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([&] { parse_rk_element(r, "1,3"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([&] { parse_rk_element(r, "1,,2"); }), ErrorCode::Parse);
  auto f9 = FqContext::make(3, 2);
  EXPECT_EQ(format_fq_element(parse_fq_element(f9, "7")), "7");
  EXPECT_EQ(code_of([&] { parse_fq_element(f9, "9"); }), ErrorCode::Parse);
}

TEST(Io, ElementRoundTrip) {
  Gen g(1);
  for (auto [p, e, k] : std::vector<std::tuple<int, int, int>>{{2, 1, 7}, {3, 2, 4}, {5, 1, 12}, {2, 4, 3}}) {
    auto r = RkContext::make(FqContext::make(p, e), k);
    for (int i = 0; i < 50; ++i) {
      RkElement x = g.rk_sparse(r);
      EXPECT_EQ(parse_rk_element(r, format_rk_element(x)), x);
    }
  }
}

TEST(Io, PointRoundTrip) {
  Gen g(2);
  auto r = RkContext::make(FqContext::make(3, 1), 6);
  LocalCurve c(g.curve(r));
  for (int i = 0; i < 20; ++i) {
    LocalPoint P = g.inf_point(c).triple();
    EXPECT_EQ(parse_point(r, format_point(P)), P);
  }
  EXPECT_EQ(code_of([&] { parse_point(r, "(1 : 2)"); }), ErrorCode::Parse);
}

TEST(Io, CurveFiles) {
  CurveFile s = load_curve_file(data_path("strange_ex1.curve"));
  EXPECT_EQ(s.p, 3u);
  EXPECT_EQ(s.k, 20);
  EXPECT_EQ(s.coeffs.a1, RkElement::eps_power(s.ring(), 4));
  CurveFile back = parse_curve_file(write_curve_file(s));
  EXPECT_EQ(back.coeffs.a1, s.coeffs.a1);
  EXPECT_EQ(back.coeffs.a2, s.coeffs.a2);
  EXPECT_EQ(back.coeffs.a4, s.coeffs.a4);

  CurveFile d = load_curve_file(data_path("dlp_comp_1.curve"));
  ASSERT_TRUE(d.extras.count("Px") && d.extras.count("Qx"));
  CurveFile d2 = parse_curve_file(write_curve_file(d));
  EXPECT_EQ(d2.extras.at("Qx"), d.extras.at("Qx"));

  CurveFile sh = parse_curve_file("p = 5\nk = 3\nA = 1\nB = 2,1\n");
  EXPECT_TRUE(sh.short_form);
  EXPECT_TRUE(sh.coeffs.a1.is_zero());
  EXPECT_EQ(format_rk_element(sh.coeffs.a6), "2,1,0");

  CurveFile f4 = parse_curve_file("p = 2\ne = 2\nmodulus = 1,1,1\nk = 2\na3 = 1\na6 = 2\n");
  EXPECT_EQ(f4.ring()->field()->q(), 4u);
}

TEST(Io, CurveFileErrorsCarryLineContext) {
  std::string msg;
  EXPECT_EQ(code_of([&] { parse_curve_file("p = 5\nk = 2\nA = 1\nB = 7\n"); }, &msg), ErrorCode::Parse);
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
  EXPECT_EQ(code_of([&] { parse_curve_file("p = 5\nk\n"); }, &msg), ErrorCode::Parse);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_EQ(code_of([&] { parse_curve_file("p = 6\nk = 2\n"); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([&] { parse_curve_file("p = 5\nk = 2\nA = 0\nB = 0\n"); }), ErrorCode::NotElliptic);
  EXPECT_NO_THROW(parse_curve_file("p = 5\nk = 2\nA = 0\nB = 0\n", true));
  EXPECT_EQ(code_of([&] { parse_curve_file("p = 5\nk = 2\nA = 1\na1 = 1\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([&] { parse_curve_file("p = 5\np = 5\nk = 2\n"); }, &msg), ErrorCode::Parse);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_EQ(code_of([&] { load_curve_file("/nonexistent/x.curve"); }), ErrorCode::Parse);
}

TEST(Io, StructureReportRoundTrip) {
  Gen g(3);
  std::vector<LocalCurve> curves = {LocalCurve(load_curve_file(data_path("strange_ex1.curve")).coeffs)};
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {5, 3}, {3, 1}}) {
    auto r = RkContext::make(FqContext::make(p, 1), k);
    curves.emplace_back(g.curve(r));
  }
  for (const auto& c : curves) {
    GroupStructure gs = full_group_report(c);
    GroupStructure back = parse_structure_report_json(structure_report_json(gs, c));
    EXPECT_EQ(back.factors, gs.factors);
    EXPECT_EQ(back.provenance, gs.provenance);
    EXPECT_EQ(back.theorem, gs.theorem);
    EXPECT_EQ(back.notes, gs.notes);
    EXPECT_EQ(back.A, gs.A);
    EXPECT_EQ(back.l, gs.l);
    EXPECT_EQ(back.residue_order, gs.residue_order);
    EXPECT_EQ(back.split, gs.split);
    EXPECT_EQ(back.d, gs.d);
    EXPECT_FALSE(structure_report_text(gs, c).empty());
  }
  EXPECT_EQ(code_of([] { parse_structure_report_json("{\"factors\": 3}"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_structure_report_json("not json"); }), ErrorCode::Parse);
}

TEST(Io, DlpTranscriptRoundTrip) {
  for (const char* name : {"dlp_comp_1.curve", "dlp_comp_2.curve"}) {
    CurveFile f = load_curve_file(data_path(name));
    LocalCurve c(f.coeffs);
    DlpResult r = dlp_solve(point_from_x(c, f.extras.at("Px")), point_from_x(c, f.extras.at("Qx")));
    DlpResult back = parse_dlp_transcript_json(dlp_transcript_json(r), f.ring());
    EXPECT_EQ(back.n, r.n);
    EXPECT_EQ(back.order, r.order);
    EXPECT_EQ(back.additions, r.additions);
    ASSERT_EQ(back.steps.size(), r.steps.size());
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      EXPECT_EQ(back.steps[i].b, r.steps[i].b);
      EXPECT_EQ(back.steps[i].m, r.steps[i].m);
      EXPECT_EQ(back.steps[i].nu_r, r.steps[i].nu_r);
      EXPECT_EQ(back.steps[i].c_r, r.steps[i].c_r);
      EXPECT_EQ(back.steps[i].c_t, r.steps[i].c_t);
      EXPECT_EQ(back.steps[i].residual_after, r.steps[i].residual_after);
    }
    EXPECT_NE(dlp_transcript_text(r).find("n = " + std::to_string(r.n)), std::string::npos);
  }
}

TEST(Io, PsiTableFileErrors) {
  EXPECT_EQ(code_of([] { parse_psi_table_file("1\tn\tn\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_psi_table_file("# psi table form=short imax=1\n1\tn\n"); }), ErrorCode::Parse);
  std::string msg;
  EXPECT_EQ(code_of([&] { parse_psi_table_file("# psi table form=short imax=1\n1\t1\tn +\n"); }, &msg), ErrorCode::Parse);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}
