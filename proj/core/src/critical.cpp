#include "chm/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chm/parallel.hpp"

namespace chm {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double qnan = std::numeric_limits<double>::quiet_NaN();

// log value with absolute error bound
struct Ln {
  double v;
  double e;
};

Ln lng(double x) {
  const EvalResult r = specfun::ln_gamma(x);
  return {r.value, r.rel_err_bound * std::fmax(1.0, std::fabs(r.value))};
}

Ln operator+(Ln a, Ln b) { return {a.v + b.v, a.e + b.e + eps * (std::fabs(a.v) + std::fabs(b.v))}; }
Ln operator-(Ln a, Ln b) { return {a.v - b.v, a.e + b.e + eps * (std::fabs(a.v) + std::fabs(b.v))}; }
Ln scale(double c, Ln a) { return {c * a.v, std::fabs(c) * a.e + eps * std::fabs(c * a.v)}; }
Ln ln_of(double c) { return {std::log(c), 2 * eps * std::fmax(1.0, std::fabs(std::log(c)))}; }

// exp with propagated relative error
EvalResult exp_of(Ln a) { return {std::exp(a.v), a.e + 2 * eps}; }

void check_positive_gamma_arg(double a) {
  if (!(a > 0.0))
    throw std::domain_error("period constant: Gamma argument is not positive");
}

Ln ln_I(int m, const GenusParams& p) {
  if (m == 0) throw std::domain_error("const_I: I_0 is undefined (division by m)");
  const double s = p.s;
  check_positive_gamma_arg(1 + m * s / 2);
  check_positive_gamma_arg(1 - m * s);
  check_positive_gamma_arg(1 - m * s / 2);
  // magnitude only; the sign is that of m
  return ln_of((p.g + 1) / std::fabs(static_cast<double>(m))) + lng(1 + m * s / 2) +
         lng(1 - m * s) - lng(1 - m * s / 2);
}

Ln ln_J(int m, const GenusParams& p) {
  const double s = p.s;
  if (p.g - m + 2 <= 0) throw std::domain_error("const_J: index out of range");
  check_positive_gamma_arg(0.5 + (m - 1) * s / 2);
  check_positive_gamma_arg(1 - (m - 1) * s);
  check_positive_gamma_arg(0.5 - (m - 1) * s / 2);
  return ln_of(static_cast<double>(p.g + 1) / (p.g - m + 2)) + lng(0.5 + (m - 1) * s / 2) +
         lng(1 - (m - 1) * s) - lng(0.5 - (m - 1) * s / 2);
}

double sign_of_I(int m) { return m > 0 ? 1.0 : -1.0; }

// ln F, ln I, ln L on (-1, 1); the public F_func/I_func/L_func restrict to
// the (-1/2, 1/2) window the series arguments actually live in, but the
// discriminant ratio X needs l/(g+1) all the way up to (g-1)/(g+1).
Ln ln_F(double v) {
  return scale(2.0, lng(0.5 + v / 2) - lng(0.5 - v / 2)) + lng(1 - v) - lng(1 + v);
}
Ln ln_Ifun(double v) {
  return scale(2.0, lng(1 - v / 2) - lng(1 + v / 2)) + lng(1 + v) - lng(1 - v);
}

void check_FIL_domain(double v) {
  if (!(std::fabs(v) < 0.5))
    throw std::domain_error("F/I/L: argument must satisfy |v| < 1/2");
}

}  // namespace

GenusParams GenusParams::from_genus(int g) {
  if (g < 2) throw std::domain_error("GenusParams: genus must be >= 2");
  return {g, 1.0 / (g + 1), std::sqrt(static_cast<double>(g) / (g + 2))};
}

double const_I(int m, const GenusParams& p) {
  return sign_of_I(m) * exp_of(ln_I(m, p)).value;
}
double const_J(int m, const GenusParams& p) { return exp_of(ln_J(m, p)).value; }
double const_K(int m, const GenusParams& p) { return const_J(m + 2, p); }
double const_L(int m, const GenusParams& p) {
  if (m == 2) return 0.0;
  return static_cast<double>(m - 2) / (2 * p.g - m + 4) * const_I(m - 2, p);
}

PeriodConstants period_constants(int m, const GenusParams& p) {
  const Ln li = ln_I(m, p);
  const Ln lj = ln_J(m, p);
  const Ln lk = ln_J(m + 2, p);
  PeriodConstants out;
  out.m = m;
  out.I = sign_of_I(m) * exp_of(li).value;
  out.J = exp_of(lj).value;
  out.K = exp_of(lk).value;
  out.L = const_L(m, p);
  double e = std::fmax(exp_of(li).rel_err_bound, exp_of(lj).rel_err_bound);
  e = std::fmax(e, exp_of(lk).rel_err_bound);
  if (m != 2) e = std::fmax(e, exp_of(ln_I(m - 2, p)).rel_err_bound);
  out.rel_err = e;
  return out;
}

EvalResult F_func_e(double v) {
  check_FIL_domain(v);
  return exp_of(ln_F(v));
}
EvalResult I_func_e(double v) {
  check_FIL_domain(v);
  return exp_of(ln_Ifun(v));
}
EvalResult L_func_e(double v) {
  check_FIL_domain(v);
  return exp_of(scale(-1.0, ln_Ifun(v)));
}
double F_func(double v) { return F_func_e(v).value; }
double I_func(double v) { return I_func_e(v).value; }
double L_func(double v) { return L_func_e(v).value; }

namespace {
void check_wide_domain(double v) {
  if (!(std::fabs(v) < 1.0)) throw std::domain_error("F/I/L: argument must satisfy |v| < 1");
}
}  // namespace

double F_wide(double v) {
  check_wide_domain(v);
  return exp_of(ln_F(v)).value;
}
double I_wide(double v) {
  check_wide_domain(v);
  return exp_of(ln_Ifun(v)).value;
}
double L_wide(double v) {
  check_wide_domain(v);
  return exp_of(scale(-1.0, ln_Ifun(v))).value;
}

CriticalValues critical_values(const GenusParams& p) {
  const double s = p.s;
  // ratio route, fully in log space
  const Ln l_t1 = scale(0.5, ln_J(2, p) - ln_J(0, p));
  // L_1 = -I_{-1}/(2g+3) > 0, so t2^2 = I_1/((2g+3) L_1) = I_1 / |I_{-1}|
  const Ln l_t2b = scale(0.5, ln_I(1, p) - ln_I(-1, p));
  // L_0 = (-2/(2g+4)) I_{-2} = (2/(2g+4)) |I_{-2}|
  const Ln l_L0 = ln_of(2.0 / (2 * p.g + 4)) + ln_I(-2, p);
  const Ln l_t3 = scale(0.5, ln_I(2, p) + ln_J(0, p) - ln_of(static_cast<double>(p.g)) -
                              l_L0 - ln_J(2, p));

  const EvalResult t1 = exp_of(l_t1);
  const EvalResult t2 = exp_of(l_t2b);
  const EvalResult t3 = exp_of(l_t3);

  // closed forms (t1 is the duplication-reduced equivalent of sqrt(K0/J0))
  const Ln c1 = ln_of(std::sqrt((1 + s) / (1 - s))) + scale(-2 * s, ln_of(2.0)) +
                scale(0.5, lng(1 + s) - lng(1 - s)) + lng(1 - s / 2) - lng(1 + s / 2);
  const Ln c2 = scale(0.5, lng(1 - s) - lng(1 + s)) + lng(1 + s / 2) - lng(1 - s / 2);
  const Ln c3 = ln_of(2.0 / (1 - s)) + scale(1.5, lng(1 + s) - lng(1 - s)) +
                scale(0.5, lng(1 - 2 * s) - lng(1 + 2 * s)) + lng(1.5 - s / 2) -
                lng(0.5 + s / 2);
  const double closed[3] = {exp_of(c1).value, exp_of(c2).value, exp_of(c3).value};
  const double ratio[3] = {t1.value, t2.value, t3.value};
  for (int i = 0; i < 3; ++i) {
    if (std::fabs(closed[i] - ratio[i]) > 1e-10 * std::fabs(ratio[i]))
      throw std::logic_error("critical_values: ratio/closed-form cross-check failed");
  }
  if (!(t3.value > t2.value))
    throw std::logic_error("critical_values: t3 > t2 violated");

  CriticalValues out;
  out.t1 = t1.value;
  out.t2 = t2.value;
  out.t3 = t3.value;
  out.rel_err = std::max({t1.rel_err_bound, t2.rel_err_bound, t3.rel_err_bound});
  return out;
}

BiquadraticRoots solve_biquadratic(double a, double b, double c) {
  if (!(a > 0.0) || !(c > 0.0) || !(b < 0.0))
    throw std::domain_error("solve_biquadratic: expects a > 0, c > 0, b < 0");
  const double X = b * b / (4 * a * c);
  if (X < 1.0 - 1e-12) return {false, qnan, qnan};
  if (X < 1.0 + 1e-12) {
    const double u = -b / (2 * a);  // double root
    return {true, u, u};
  }
  const double disc = std::sqrt(b * b - 4 * a * c);
  const double u_plus = (-b + disc) / (2 * a);
  const double u_minus = c / (a * u_plus);
  return {true, u_minus, u_plus};
}

QuarticInstance quartic_instance(int l, const GenusParams& p) {
  if (l < p.l_min() || l > p.l_max())
    throw std::domain_error("quartic_instance: l must satisfy 2 <= l <= g-1");
  const int g = p.g;
  const double s = p.s;

  const Ln lI_gl1 = ln_I(g - l + 1, p);
  const Ln lJ_gl1 = ln_J(g - l + 1, p);
  const Ln lJ_l1 = ln_J(l + 1, p);
  const Ln lK_gl1 = ln_J(g - l + 3, p);
  const Ln lI_l1 = ln_I(l + 1, p);
  // L_{l+1} = (l-1)/(2g-l+3) I_{l-1}
  const Ln lL_l1 = ln_of(static_cast<double>(l - 1) / (2 * g - l + 3)) + ln_I(l - 1, p);

  const Ln la = ln_of(static_cast<double>(2 * g - l + 3)) + lI_gl1 + lJ_gl1 + lL_l1;
  const Ln lb = ln_of(2.0 * (g - l + 1)) + lJ_l1 + lJ_gl1 + lK_gl1;  // |b|
  const Ln lc = ln_of(static_cast<double>(l + 1)) + lI_gl1 + lI_l1 + lK_gl1;

  QuarticInstance q;
  q.l = l;
  q.a = exp_of(la).value;
  q.b = -exp_of(lb).value;
  q.c = exp_of(lc).value;

  // X two ways: from the coefficients and from the Gamma-ratio product
  const Ln lX_coeff = scale(2.0, lb) - ln_of(4.0) - la - lc;
  const Ln lX_ratio = ln_of(static_cast<double>(l) * l / (static_cast<double>(l) * l - 1)) +
                      scale(2.0, ln_F(l * s)) + ln_Ifun((l - 1) * s) + ln_Ifun((l + 1) * s);
  const EvalResult Xr = exp_of(lX_ratio);
  const EvalResult Xc = exp_of(lX_coeff);
  if (std::fabs(Xr.value - Xc.value) > 1e-9 * std::fabs(Xr.value))
    throw std::logic_error("quartic_instance: X route disagreement");
  q.X = Xr.value;
  q.X_err = Xr.rel_err_bound;

  const BiquadraticRoots roots = solve_biquadratic(q.a, q.b, q.c);
  q.has_roots = roots.has_roots;
  q.t_minus = roots.has_roots ? std::sqrt(roots.u_minus) : qnan;
  q.t_plus = roots.has_roots ? std::sqrt(roots.u_plus) : qnan;
  return q;
}

namespace {

bool close_rel(double t, double ref, double tol) {
  return std::fabs(t - ref) <= tol * std::fabs(ref);
}

// quartic roots for every l (used by nullity for the g >= 38, t > t3 branch)
std::vector<QuarticInstance> root_cells(const GenusParams& p) {
  std::vector<QuarticInstance> out;
  for (int l = p.l_min(); l <= p.l_max(); ++l) {
    QuarticInstance q = quartic_instance(l, p);
    if (q.has_roots) out.push_back(q);
  }
  return out;
}

}  // namespace

NullityResult nullity(const GenusParams& p, double t, double tol) {
  if (!(t > 0.0)) throw std::domain_error("nullity: t must be positive");
  const CriticalValues cv = critical_values(p);
  if (close_rel(t, cv.t1, tol) || close_rel(t, cv.t2, tol)) return {4, false};
  if (close_rel(t, cv.t3, tol)) return {5, false};
  if (p.g >= 38 && t > cv.t3) {
    for (const QuarticInstance& q : root_cells(p)) {
      if (close_rel(t, q.t_minus, tol) || close_rel(t, q.t_plus, tol)) return {3, true};
    }
  }
  return {3, false};
}

int index_of(const GenusParams& p, double t, double tol) {
  if (!(t > 0.0)) throw std::domain_error("index_of: t must be positive");
  const CriticalValues cv = critical_values(p);
  if (close_rel(t, cv.t3, tol)) return 2 * p.g + 2;
  if (p.g >= 38 && t > cv.t3)
    throw std::domain_error("index_of: table not established for g >= 38 and t > t3");
  if (t <= cv.t1 || close_rel(t, cv.t1, tol)) return 2 * p.g + 3;
  if (t < cv.t2 && !close_rel(t, cv.t2, tol)) return 2 * p.g + 4;
  return 2 * p.g + 3;
}

std::vector<ScanRow> scan(int g_min, int g_max) {
  if (g_min < 2 || g_min > g_max) throw std::domain_error("scan: need 2 <= g_min <= g_max");
  std::vector<std::vector<ScanRow>> per_g(g_max - g_min + 1);
  parallel_for(per_g.size(), [&](std::size_t gi) {
    const int g = g_min + static_cast<int>(gi);
    const GenusParams p = GenusParams::from_genus(g);
    const double s = p.s;
    if (p.l_range_empty()) return;

    // ln F(i s) for i = 2..g-1 and ln I(i s) for i = 1..g, shared across l
    std::vector<double> lnF(g + 1, 0.0), lnI(g + 1, 0.0), errF(g + 1, 0.0), errI(g + 1, 0.0);
    for (int i = 2; i <= g - 1; ++i) {
      const Ln f = ln_F(i * s);
      lnF[i] = f.v;
      errF[i] = f.e;
    }
    for (int i = 1; i <= g; ++i) {
      const Ln v = ln_Ifun(i * s);
      lnI[i] = v.v;
      errI[i] = v.e;
    }

    const CriticalValues cv = critical_values(p);
    std::vector<ScanRow>& rows = per_g[gi];
    rows.reserve(g - 2);
    for (int l = 2; l <= g - 1; ++l) {
      const double ll = static_cast<double>(l);
      const double lnX = std::log(ll * ll / (ll * ll - 1)) + 2 * lnF[l] + lnI[l - 1] + lnI[l + 1];
      const double Xerr = 2 * errF[l] + errI[l - 1] + errI[l + 1] + 4 * eps;
      ScanRow row;
      row.g = g;
      row.l = l;
      row.X = std::exp(lnX);
      row.X_err = Xerr;
      row.t3 = cv.t3;
      if (row.X >= 1.0 - 1e-12) {
        const QuarticInstance q = quartic_instance(l, p);
        row.has_roots = q.has_roots;
        row.t_minus = q.t_minus;
        row.t_plus = q.t_plus;
        const double t3sq = cv.t3 * cv.t3;
        row.margin = q.t_minus * q.t_minus - t3sq;
        // T2 = (t+^2 - t-^2)/2 picks up the 1/(X-1) discriminant amplification
        const double T2 = 0.5 * (q.t_plus * q.t_plus - q.t_minus * q.t_minus);
        const double amp = (q.X > 1.0 + 1e-12) ? q.X / (q.X - 1.0) : 1e12;
        row.margin_err = q.t_minus * q.t_minus * 4 * q.X_err + T2 * 2 * q.X_err * amp +
                         t3sq * 2 * cv.rel_err;
      } else {
        row.has_roots = false;
        row.t_minus = row.t_plus = row.margin = row.margin_err = qnan;
      }
      rows.push_back(row);
    }
  });
  std::vector<ScanRow> out;
  for (auto& v : per_g) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace chm
