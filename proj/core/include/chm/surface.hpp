#pragma once

#include <complex>
#include <span>
#include <vector>

namespace chm::surface {

using cplx = std::complex<double>;

// A point of the curve w^{g+1} = z^g (z^2 - 1).  Branch identity is the
// explicit w value; there is no branch index.
struct SurfacePoint {
  cplx z;
  cplx w;
};

bool on_curve(const SurfacePoint& p, int g, double tol = 1e-10);

// All g+1 fiber values over z, sorted by principal argument (ties by
// magnitude are impossible: the roots share one modulus).
std::vector<cplx> w_branches(cplx z, int g);

// Analytic continuation of w along a sampled z-path.  Consecutive samples
// must move w by less than half the local branch gap, otherwise a
// std::runtime_error reports the refinement failure.  For a closed z-path,
// deck_power records j with w_end = w_start * exp(2 pi i j/(g+1)).
struct ContinuationResult {
  std::vector<cplx> w;
  int deck_power;  // meaningful when the z-path is closed
};
ContinuationResult continue_w(std::span<const cplx> z_path, cplx w_start, int g);

// The dihedral symmetries: lambda(z,w) = (-z, rho w) with
// rho = e^{i pi g/(g+1)} (order 2g+2), kappa(z,w) = (conj z, conj w).
SurfacePoint sym_lambda(const SurfacePoint& p, int g);
SurfacePoint sym_kappa(const SurfacePoint& p);
cplx rho_of(int g);

// Marked points: Q0 = (0,0), P± = (±1, 0), P_inf, and the fibers over ±A
// where dw/dz vanishes, P_m = (A, B_m), S_m = (-A, C_m), m = 0..g.  B_m, C_m
// are ordered by principal argument of the fiber value.
struct RamificationSet {
  double A;
  std::vector<cplx> P_w;  // w values over z = +A
  std::vector<cplx> S_w;  // w values over z = -A
  // Q0, P_plus, P_minus are (0,0), (1,0), (-1,0); P_inf is a marker only.
  int marked_point_count() const { return 2 * static_cast<int>(P_w.size()) + 4; }
};
RamificationSet ramification_points(int g);

// P_1 = (A, B_1), the fiber point the residue checks use.
SurfacePoint P1_point(int g);

enum class FormFamily {
  kCandidateA,  // w^k / z^{k-1} dz/(z^2-A^2)^2,   k = -1..g-1
  kCandidateB,  // w^k / z^k     dz/(z^2-A^2)^2,   k = -1..g-1
  kCandidateC,  // w^k / z^{k+1} dz/(z^2-A^2),     k = -1..g-1
  kCandidateD,  // z^k / w^{k+1} dz/(z^2-A^2),     k = 1..g-1
  kCandidateE,  // z^{k-1} / w^{k+1} dz/(z^2-A^2), k = 1..g-1
  kBasis1,      // z^{k-1} / w^{k+1} dz,                             k = 1..g-1
  kBasis2,      // z^{k-1}((k-2)z^2 - k A^2)/(w^k (z^2-A^2)^2) dz,   k = 0..g
  kBasis3,      // z^{k-1}((k-2)z^2 - k A^2)/(w^{k+1}(z^2-A^2)^2) dz, k = 0..g-1
};

struct DifferentialForm {
  FormFamily family;
  int k;
  int g;

  // omega = coeff(z, w) dz
  cplx coeff(cplx z, cplx w) const;
  // lambda^* omega = lambda_eigenvalue() * omega
  cplx lambda_eigenvalue() const;
};

std::vector<DifferentialForm> candidate_forms(int g);  // the 5g+1 list
std::vector<DifferentialForm> basis_forms(int g);      // the 3g null-residue basis

// Residue on the surface at a marked point, by contour quadrature of the
// lifted z-circle (traversed g+1 times over the totally branched fibers
// z in {0, +-1}, once elsewhere).  Computed at radius and radius/2;
// two_radius_diff records the Richardson disagreement.  P_inf has no chart
// here: the dihedral symmetry reduces the null-residue checks to Q0 and P1.
struct Residue {
  cplx value;
  double two_radius_diff;
  bool converged;  // two_radius_diff <= tol
};
Residue residue_at(const DifferentialForm& form, const SurfacePoint& center,
                   double radius = 0.1, double tol = 1e-10);

}  // namespace chm::surface
