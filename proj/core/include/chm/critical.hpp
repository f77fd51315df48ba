#pragma once

#include <vector>

#include "chm/specfun.hpp"

namespace chm {

using specfun::EvalResult;

// Genus parameters of the compact surface w^{g+1} = z^g (z^2 - 1).
struct GenusParams {
  int g;
  double s;  // 1/(g+1)
  double A;  // sqrt(g/(g+2))

  static GenusParams from_genus(int g);  // throws std::domain_error for g < 2

  int l_min() const { return 2; }
  int l_max() const { return g - 1; }
  bool l_range_empty() const { return g < 3; }
};

// The Gamma-ratio constants attached to one index m.  I is undefined at m=0
// (the defining expression divides by m); L delegates to I_{m-2} and short
// circuits the m=2 zero, so L_0 and L_2 never touch I_0.
double const_I(int m, const GenusParams& p);  // throws for m == 0
double const_J(int m, const GenusParams& p);
double const_K(int m, const GenusParams& p);  // = J_{m+2}
double const_L(int m, const GenusParams& p);  // = (m-2)/(2g-m+4) * I_{m-2}

struct PeriodConstants {
  int m;
  double I, J, K, L;
  double rel_err;  // propagated bound, relative, shared by all four
};
PeriodConstants period_constants(int m, const GenusParams& p);  // throws for m == 0

// The three Gamma-ratio products used by the discriminant analysis,
// on |v| < 1/2.  L(v) = 1/I(v).
double F_func(double v);
double I_func(double v);
double L_func(double v);
EvalResult F_func_e(double v);
EvalResult I_func_e(double v);
EvalResult L_func_e(double v);

// Same products on the whole pole-free window (-1, 1); the ratio X and the
// root brackets need arguments l/(g+1) through (g-1)/(g+1).
double F_wide(double v);
double I_wide(double v);
double L_wide(double v);

// Deformation parameters at which extra Jacobi fields appear:
// t1 = sqrt(K0/J0), t2 = sqrt(I1/((2g+3) L1)), t3 = sqrt(I2 J0/(g L0 K0)).
// Construction cross-checks the ratio route against an equivalent closed form
// and enforces t3 > t2.
struct CriticalValues {
  double t1, t2, t3;
  double rel_err;
};
CriticalValues critical_values(const GenusParams& p);

// Roots of a u^2 + b u + c (u = t^2) with a > 0, c > 0, b < 0, computed
// cancellation-free: u_plus = (-b + sqrt(disc))/(2a), u_minus = c/(a u_plus).
// X = b^2/(4ac); X within 1e-12 of 1 is treated as a double root.
struct BiquadraticRoots {
  bool has_roots;
  double u_minus, u_plus;  // NaN when absent
};
BiquadraticRoots solve_biquadratic(double a, double b, double c);

// One (l, g) cell of the discriminant scan.
struct QuarticInstance {
  int l;
  double a, b, c;
  double X;      // b^2/(4ac), cross-checked against the Gamma-ratio product
  double X_err;  // propagated relative bound on X
  bool has_roots;
  double t_minus, t_plus;  // NaN when X < 1
};
QuarticInstance quartic_instance(int l, const GenusParams& p);

// Nul(G_t).  For g <= 37 (or t <= t3) this is the three-branch table:
// 4 at t1, t2; 5 at t3; 3 elsewhere.  For g >= 38 and t beyond t3 matching a
// quartic root t_-/t_+, the kernel dimension is not asserted: value holds the
// generic 3 and extra_unknown is set.
struct NullityResult {
  int value;
  bool extra_unknown;
};
NullityResult nullity(const GenusParams& p, double t, double tol = 1e-9);

// Ind(G_t): 2g+3 / 2g+4 / 2g+2 across the t1, t2, t3 breakpoints.  For
// g >= 38 the table is only valid for t <= t3; beyond that throws
// std::domain_error.
int index_of(const GenusParams& p, double t, double tol = 1e-9);

// Genus-1 (Costa surface) values, handled outside the g >= 2 machinery.
inline constexpr int costa_nullity = 4;
inline constexpr int costa_index = 5;

struct ScanRow {
  int g, l;
  double X;
  double X_err;  // propagated relative bound on X
  bool has_roots;
  double t_minus, t_plus;  // NaN unless has_roots
  double t3;
  double margin;      // t_minus^2 - t3^2, NaN unless has_roots
  double margin_err;  // propagated absolute error on margin
};

// All cells 2 <= l <= g-1 for g in [g_min, g_max], sorted by (g, l);
// parallel over g.
std::vector<ScanRow> scan(int g_min, int g_max);

}  // namespace chm
