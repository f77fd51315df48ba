#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "chm/critical.hpp"
#include "chm/surface.hpp"

namespace chm::periods {

using surface::cplx;
using surface::DifferentialForm;
using surface::FormFamily;

// Sampled lift of beta(s) = 1/2 + e^{2 pi i s} anchored at (3/2, w(0)) with
// w(0) real positive.  The radicand winds g+1 full turns, so the lift closes
// after a single circuit (deck_power = 0).
struct BetaLift {
  std::vector<cplx> z;
  std::vector<cplx> w;
  int deck_power;
};
BetaLift lift_beta(int g, int samples = 4096);

// Period of gamma^power * form over the cycle lambda^l o beta~, by adaptive
// branch-tracked quadrature.  For l > 0 the value is cross-checked against
// the pullback phase times the l = 0 period.
cplx period(const DifferentialForm& form, int power, int cycle_l, int g,
            double abs_tol = 1e-11);

// The pullback phase: period over lambda^l equals phase^l times the beta
// period, with phase = rho^power * lambda-eigenvalue(form).
cplx pullback_phase(const DifferentialForm& form, int power);

// Gamma closed forms of the beta-periods of the basis forms.
cplx period_closed_form(const DifferentialForm& basis_form, int power, const GenusParams& p);

// Periods are insensitive to adding an exact differential: each omega^(2),
// omega^(3) basis form integrates like its monomial equivalent.
struct CohomologyRow {
  int family;  // 2 or 3
  int k;
  cplx period_form;
  cplx period_equivalent;
  double rel_discrepancy;
};
struct CohomologyReport {
  int g;
  double max_rel_discrepancy;
  bool pass;
  std::vector<CohomologyRow> rows;
};
CohomologyReport cohomology_check(int g, double tol = 1e-8);

// The real-linear system in the 3g coefficients c_k^(i) (6g real unknowns
// after the real/imaginary split; the conjugations make the conditions only
// real-linear).  dim_solution is the real null-space dimension by SVD:
// Nul(G_t) = 3 + dim_solution.
struct SystemAssembly {
  int g;
  double t;
  Eigen::MatrixXd matrix;  // 6g x 6g
  int dim_solution;
  double sigma_max;
  double sigma_threshold;   // 1e-8 * sigma_max
  double smallest_kept_sigma;
  bool gap_ok;              // smallest kept sigma >= 1e3 * threshold
  std::vector<std::string> notes;
};
SystemAssembly assemble_system(const GenusParams& p, double t);

}  // namespace chm::periods
