#pragma once

#include <string>
#include <vector>

#include "ecloc/infinity.hpp"

namespace ecloc {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  bool quick = false;       // skip the condition checks for p >= 5
  bool corrupt_h2 = false;  // mutation control: perturb one constant of H2
};

// The H-table polynomials and g1, g2 as printed, over Q[a, X1..Z2].
ShortSumParts<MultiPoly> short_sum_table(bool corrupt_h2 = false);
// (g1 H1 + g2 H2, H1 H4 - H2 H3, g1 H3 + g2 H4) built from the table.
Point<MultiPoly> short_sum_from_table(bool corrupt_h2 = false);
// Reduce modulo the curve equations of (X1:Y1:Z1) and (X2:Y2:Z2), leading term X_i^3.
MultiPoly reduce_mod_curves(const MultiPoly& poly);

// f mod x^10 as displayed for the extended form; the x^8 coefficient is given sign-corrected
// when `corrected`, otherwise literally.
MultiPoly f_display(bool corrected);

VerifyCheck check_shortsum(bool corrupt_h2 = false);
VerifyCheck check_fx_series();
VerifyCheck check_sum_mod_ideal();
VerifyCheck check_psi_tables(bool quick);
VerifyCheck check_psi_prime_powers();
// C1, C2, C3 symbolically over F_p for p in {2, 3} (extended form) or 5 <= p <= 13 (short form).
VerifyCheck check_conditions_symbolic(std::uint32_t p);
// C1, C2, C3 on sampled exceptional short curves over F_p[eps]/(eps^k).
VerifyCheck check_conditions_specialized(std::uint32_t p, int samples, std::uint64_t seed = 1);

std::vector<VerifyCheck> run_verify(const VerifyOptions& opts);

}  // namespace ecloc
