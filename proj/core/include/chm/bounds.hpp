#pragma once

#include <array>
#include <string>
#include <vector>

#include "chm/critical.hpp"

namespace chm::bounds {

// Admissible ranges of the scan variables: x = l s, y = (l+1) s, z = (l-1) s,
// s = 1/(g+1), pinned at the last genus (37) where the discriminant is still
// negative at l = 2.
struct DomainBox {
  double x_max = 2.0 / 38.0;
  double y_max = 3.0 / 38.0;
  double z_max = 1.0 / 38.0;
  double s_max = 1.0 / 38.0;
  double grid_step = 1e-5;
};

// digamma combinations driving the logarithmic derivatives of F, I, L
double psi_F(double x);  // F'/F
double psi_I(double z);  // I'/I
double psi_L(double y);  // L'/L = -psi_I
double psi_F1(double x), psi_F2(double x), psi_F3(double x);
double psi_I1(double z);

// first-order remainders and their relatives
double R_F(double x);   // F'(x)  = F psi_F
double R_I(double z);   // I'(z)  = I psi_I
double R_L(double y);   // L'(y)  = L psi_L
double R_I2(double z);  // (I^2)' = 2 I^2 psi_I
double W(double x);     // (F^2)' = 2 F^2 psi_F
double Y(double x);     // x W(x)

// closed-form derivatives (digamma/polygamma combinations, no differencing)
double W1(double x), W2(double x), W3(double x);
double Y1(double x), Y2(double x), Y3(double x);

// E(t,l) = 2 Y''(t) (1 + l^2 Y(t)) - l^2 Y'(t)^2; <= 0 with equality at
// (t,l) = (0,2)
double E_func(double t, int l);

// root bracket pieces for one (l, g) cell: t_pm^2 = T1 +- T2
double T1(int l, const GenusParams& p);
struct T2Result {
  bool defined;  // radicand >= 0, i.e. X >= 1
  double value;
};
T2Result T2(int l, const GenusParams& p);

// t3^2 as a function of s and the log-derivative factor of its s-derivative:
// T'(s) = T(s) B(s) / (1-s)
double B_func(double s);
double T_func(double s);

struct Certificate {
  std::string claim_id;
  bool verified;
  double worst_margin;                 // inequality slack at the worst grid point
  std::array<double, 2> worst_point;   // location (second slot 0 for 1-D claims)
  double err_bound;                    // evaluation error at the worst point
  std::string detail;
};

// Grid certification of every sign/monotonicity/bound claim, sorted by
// claim_id.  Strict claims verify when worst_margin > err_bound; claims that
// carry equality at a boundary point (the <= / >= ones) verify when
// worst_margin >= -err_bound.  err_bound folds in the Lipschitz slack
// bound*step wherever a next-derivative constant is available, turning the
// grid check into an interval statement.
std::vector<Certificate> certify_all(const DomainBox& box = {});

}  // namespace chm::bounds
