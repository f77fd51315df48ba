#include "chm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "chm/parallel.hpp"

namespace chm::bounds {
namespace {

constexpr double C_rfi = -4.0 * specfun::ln2;  // R_F(0) = -4 ln 2
constexpr double C_W = 1125.0;                 // bound on W'''

double psi(double x) { return specfun::digamma(x).value; }
double psi_n(int n, double x) { return specfun::polygamma(n, x).value; }

void check_range(double v, double lo, double hi, const char* who) {
  if (!(v >= lo - 1e-12) || !(v <= hi + 1e-12))
    throw std::domain_error(std::string(who) + ": argument outside admissible range");
}

const DomainBox kBox{};

double F_of(double x) { return F_func(x); }
double I_of(double z) { return I_func(z); }
double L_of(double y) { return L_func(y); }

}  // namespace

double psi_F(double x) {
  check_range(x, 0.0, kBox.x_max, "psi_F");
  return -psi(1 - x) - psi(1 + x) + psi(0.5 - x / 2) + psi(0.5 + x / 2);
}

double psi_I(double z) {
  check_range(z, 0.0, kBox.z_max, "psi_I");
  return psi(1 - z) + psi(1 + z) - psi(1 - z / 2) - psi(1 + z / 2);
}

double psi_L(double y) {
  check_range(y, 0.0, kBox.y_max, "psi_L");
  return -(psi(1 - y) + psi(1 + y) - psi(1 - y / 2) - psi(1 + y / 2));
}

double psi_F1(double x) {
  check_range(x, 0.0, kBox.x_max, "psi_F1");
  return psi_n(1, 1 - x) - psi_n(1, 1 + x) - psi_n(1, 0.5 - x / 2) / 2 +
         psi_n(1, 0.5 + x / 2) / 2;
}

double psi_F2(double x) {
  check_range(x, 0.0, kBox.x_max, "psi_F2");
  return -psi_n(2, 1 - x) - psi_n(2, 1 + x) + psi_n(2, 0.5 - x / 2) / 4 +
         psi_n(2, 0.5 + x / 2) / 4;
}

double psi_F3(double x) {
  check_range(x, 0.0, kBox.x_max, "psi_F3");
  return psi_n(3, 1 - x) - psi_n(3, 1 + x) - psi_n(3, 0.5 - x / 2) / 8 +
         psi_n(3, 0.5 + x / 2) / 8;
}

double psi_I1(double z) {
  check_range(z, 0.0, kBox.z_max, "psi_I1");
  return -psi_n(1, 1 - z) + psi_n(1, 1 + z) + psi_n(1, 1 - z / 2) / 2 -
         psi_n(1, 1 + z / 2) / 2;
}

double R_F(double x) { return F_of(x) * psi_F(x); }
double R_I(double z) { return I_of(z) * psi_I(z); }
double R_L(double y) { return L_of(y) * psi_L(y); }
double R_I2(double z) {
  const double i = I_of(z);
  return 2 * i * i * psi_I(z);
}

double W(double x) {
  const double f = F_of(x);
  return 2 * f * f * psi_F(x);
}
double Y(double x) { return x * W(x); }

double W1(double x) {
  const double f = F_of(x);
  const double pf = psi_F(x);
  return f * f * (4 * pf * pf + 2 * psi_F1(x));
}

double W2(double x) {
  const double f = F_of(x);
  const double pf = psi_F(x);
  const double pf1 = psi_F1(x);
  return 0.5 * f * f * (16 * pf * pf * pf + 24 * pf * pf1 + 4 * psi_F2(x));
}

double W3(double x) {
  const double f = F_of(x);
  const double pf = psi_F(x);
  const double pf1 = psi_F1(x);
  const double pf2 = psi_F2(x);
  return 0.25 * f * f *
         (64 * pf * pf * pf * pf + 192 * pf * pf * pf1 + 48 * pf1 * pf1 + 64 * pf * pf2 +
          8 * psi_F3(x));
}

double Y1(double x) { return W(x) + x * W1(x); }
double Y2(double x) { return 2 * W1(x) + x * W2(x); }
double Y3(double x) { return 3 * W2(x) + x * W3(x); }

double E_func(double t, int l) {
  const double y = Y(t);
  const double y1 = Y1(t);
  const double y2 = Y2(t);
  return 2 * y2 * (1 + l * l * y) - l * l * y1 * y1;
}

double T1(int l, const GenusParams& p) {
  if (l < p.l_min() || l > p.l_max()) throw std::domain_error("T1: l out of range");
  const double s = p.s;
  return static_cast<double>(l) / (l - 1) * F_wide(l * s) * I_wide((l - 1) * s);
}

T2Result T2(int l, const GenusParams& p) {
  if (l < p.l_min() || l > p.l_max()) throw std::domain_error("T2: l out of range");
  const double s = p.s;
  const double fi = F_wide(l * s) * I_wide((l - 1) * s);
  const double rad = static_cast<double>(l) * l / ((l - 1.0) * (l - 1.0)) * fi * fi -
                     (l + 1.0) / (l - 1.0) * L_wide((l + 1) * s) * I_wide((l - 1) * s);
  if (rad < 0.0) return {false, 0.0};
  return {true, std::sqrt(rad)};
}

double B_func(double s) {
  check_range(s, 0.0, kBox.s_max, "B_func");
  const double d =
      -2 * psi(1 - 2 * s) - 2 * psi(1 + 2 * s) + 3 * psi(1 - s) + 3 * psi(1 + s);
  return 2 + (1 - s) * (d - psi(1.5 - s / 2) - psi(0.5 + s / 2));
}

double T_func(double s) {
  check_range(s, 0.0, kBox.s_max, "T_func");
  using specfun::ln_gamma;
  const double ln =
      3 * (ln_gamma(1 + s).value - ln_gamma(1 - s).value) +
      (ln_gamma(1 - 2 * s).value - ln_gamma(1 + 2 * s).value) +
      2 * (ln_gamma(1.5 - s / 2).value - ln_gamma(0.5 + s / 2).value);
  return 4.0 / ((1 - s) * (1 - s)) * std::exp(ln);
}

namespace {

struct GridScan {
  double extreme;                     // min or max encountered
  std::array<double, 2> where;
};

template <typename F>
GridScan grid_min(F f, double lo, double hi, double step) {
  GridScan s{std::numeric_limits<double>::infinity(), {lo, 0}};
  const auto n = static_cast<std::size_t>((hi - lo) / step);
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = (i == n) ? hi : lo + static_cast<double>(i) * step;
    const double v = f(x);
    if (v < s.extreme) s = {v, {x, 0}};
  }
  return s;
}

template <typename F>
GridScan grid_max(F f, double lo, double hi, double step) {
  GridScan s = grid_min([&](double x) { return -f(x); }, lo, hi, step);
  return {-s.extreme, s.where};
}

Certificate sign_claim(std::string id, GridScan worst, bool strict, double err,
                       std::string detail) {
  Certificate c;
  c.claim_id = std::move(id);
  c.worst_margin = worst.extreme;
  c.worst_point = worst.where;
  c.err_bound = err;
  c.verified = strict ? worst.extreme > err : worst.extreme >= -err;
  c.detail = std::move(detail);
  return c;
}

// (l, g) cells whose x = l/(g+1) lies in the admissible window
template <typename Fn>
void for_each_cell(int g_lo, int g_hi, const DomainBox& box, Fn&& fn) {
  for (int g = g_lo; g <= g_hi; ++g) {
    const GenusParams p = GenusParams::from_genus(g);
    for (int l = 2; l <= g - 1; ++l) {
      if (l * p.s > box.x_max) break;
      fn(l, p);
    }
  }
}

}  // namespace

std::vector<Certificate> certify_all(const DomainBox& box) {
  if (box.grid_step > 1e-4) throw std::domain_error("certify_all: grid_step must be <= 1e-4");
  const double h = box.grid_step;
  const double h2 = 1e-4;  // step for the two-variable claims

  // evaluation error allowances (conservative; actual roundoff is 100-1000x
  // smaller, margins are larger by 1e6+)
  const double err_psi = 1e-11;
  const double err_w = 1e-9;
  const double err_cell = 1e-10;

  std::vector<Certificate> certs;
  using Task = std::function<Certificate()>;
  std::vector<Task> tasks;

  tasks.push_back([&, h] {
    auto worst = grid_max(R_F, 0.0, box.x_max, h);
    worst.extreme = -worst.extreme;
    return sign_claim("rf-negative", worst, true, err_psi + 7.8 * h, "R_F < 0; Lipschitz |R_F'| <= 7.8");
  });
  tasks.push_back([&, h] {
    auto worst = grid_max(R_I, 0.0, box.z_max, h);
    worst.extreme = -worst.extreme;
    return sign_claim("ri-nonpositive", worst, false, err_psi + 0.096 * h,
                      "R_I <= 0, equality at 0; Lipschitz |R_I'| <= 0.096");
  });
  tasks.push_back([&, h] {
    auto worst = grid_min(R_L, 0.0, box.y_max, h);
    return sign_claim("rl-nonnegative", worst, false, err_psi + 0.2 * h,
                      "R_L >= 0, equality at 0");
  });
  tasks.push_back([&, h] {
    auto worst = grid_min([](double x) { return F_func(x) * (psi_F(x) * psi_F(x) + psi_F1(x)); },
                          0.0, box.x_max, h);
    return sign_claim("rf-deriv-positive", worst, true, err_psi,
                      "(R_F)' = F'' > 0; grid minimum " + std::to_string(worst.extreme));
  });
  tasks.push_back([&, h] {
    auto worst = grid_min([](double z) { return I_func(z) * (psi_I(z) * psi_I(z) + psi_I1(z)); },
                          0.0, box.z_max, h);
    Certificate c;
    c.claim_id = "ri-deriv-min";
    c.worst_point = worst.where;
    c.err_bound = err_psi;
    const double target = -0.095;
    c.worst_margin = 1e-3 - std::fabs(worst.extreme - target);
    c.verified = c.worst_margin > err_psi;
    c.detail = "min (R_I)' on grid = " + std::to_string(worst.extreme) + ", target -0.095(1e-3)";
    return c;
  });
  tasks.push_back([&, h2] {
    // R_FI(x,z) >= C x with C = -4 ln 2, i.e. F(x) I(z) - 1 - C x >= 0,
    // on the admissible half x >= z (x = l s vs z = (l-1) s)
    GridScan worst{std::numeric_limits<double>::infinity(), {0, 0}};
    for (double x = 0.0; x <= box.x_max + 1e-15; x += h2) {
      const double fx = F_func(x);
      for (double z = 0.0; z <= std::min(x, box.z_max) + 1e-15; z += h2) {
        const double v = fx * I_func(z) - 1.0 - C_rfi * x;
        if (v < worst.extreme) worst = {v, {x, z}};
      }
    }
    return sign_claim("rfi-lower-bound", worst, false, err_psi,
                      "F(x)I(z) - 1 >= C x for x >= z, equality at the origin");
  });
  tasks.push_back([&, h2] {
    // R_LI(y,z) >= 0 on the admissible half y >= z (every use has y > z)
    GridScan worst{std::numeric_limits<double>::infinity(), {0, 0}};
    for (double z = 0.0; z <= box.z_max + 1e-15; z += h2) {
      const double iz = I_func(z);
      for (double y = z; y <= box.y_max + 1e-15; y += h2) {
        const double v = L_func(y) * iz - 1.0;
        if (v < worst.extreme) worst = {v, {y, z}};
      }
    }
    return sign_claim("rli-nonnegative", worst, false, err_psi,
                      "L(y)I(z) >= 1 for y >= z, equality on the diagonal");
  });
  tasks.push_back([&, h] {
    auto worst = grid_max(R_I2, 0.0, box.z_max, h);
    worst.extreme = -worst.extreme;
    return sign_claim("ri2-nonpositive", worst, false, err_psi + 0.2 * h,
                      "(I^2)' <= 0, equality at 0");
  });
  tasks.push_back([&, h] {
    auto worst = grid_max(W, 0.0, box.x_max, h);
    worst.extreme = -worst.extreme;
    return sign_claim("w-negative", worst, true, err_w + 30.75 * h,
                      "W < 0; Lipschitz |W'| <= W'(0) = 30.75");
  });
  tasks.push_back([&, h] {
    auto worst = grid_min(W1, 0.0, box.x_max, h);
    return sign_claim("w1-positive", worst, true, err_w + 177.8 * h,
                      "W' > 0; Lipschitz |W''| <= |W''(0)| = 177.8");
  });
  tasks.push_back([&, h] {
    auto worst = grid_max(W2, 0.0, box.x_max, h);
    worst.extreme = -worst.extreme;
    return sign_claim("w2-negative", worst, true, err_w + C_W * h,
                      "W'' < 0; Lipschitz |W'''| < 1125");
  });
  tasks.push_back([&, h] {
    auto lo = grid_min(W3, 0.0, box.x_max, h);
    auto hi = grid_max(W3, 0.0, box.x_max, h);
    Certificate c;
    c.claim_id = "w3-positive-bounded";
    c.worst_margin = std::min(lo.extreme, C_W - hi.extreme);
    c.worst_point = lo.extreme < C_W - hi.extreme ? lo.where : hi.where;
    c.err_bound = err_w;
    c.verified = c.worst_margin > err_w;
    c.detail = "0 < W''' < 1125 pointwise on the grid (no fourth-derivative bound available)";
    return c;
  });
  tasks.push_back([&, h] {
    auto worst = grid_max(Y1, 0.0, box.x_max, h);
    worst.extreme = -worst.extreme;
    return sign_claim("y1-negative", worst, true, err_w + 70.9 * h,
                      "Y' < 0; Lipschitz |Y''| <= 2 W'(0) + x_max |W''(0)|");
  });
  tasks.push_back([&, h] {
    auto worst = grid_min(Y2, 0.0, box.x_max, h);
    return sign_claim("y2-positive", worst, true, err_w + 593.0 * h,
                      "Y'' > 0; Lipschitz |Y'''| <= 3|W''(0)| + x_max C_W");
  });
  tasks.push_back([&, h] {
    auto worst = grid_max(Y3, 0.0, box.x_max, h);
    worst.extreme = -worst.extreme;
    return sign_claim("y3-negative", worst, true, err_w,
                      "Y''' < 0 pointwise on the grid (no fourth-derivative bound available)");
  });
  tasks.push_back([&, h] {
    auto bmin = grid_min(B_func, 0.0, box.s_max, h);
    auto bmax = grid_max(B_func, 0.0, box.s_max, h);
    Certificate c;
    c.claim_id = "b-range";
    c.worst_margin = std::min(bmin.extreme - 1.0, 3.0 - bmax.extreme);
    c.worst_point = (bmin.extreme - 1.0 < 3.0 - bmax.extreme) ? bmin.where : bmax.where;
    c.err_bound = err_psi;
    c.verified = c.worst_margin > err_psi;
    c.detail = "1 < B(s) < 3";
    return c;
  });
  tasks.push_back([&, h] {
    auto worst = grid_min([](double s) { return 1.0 + 3.5 * s - T_func(s); }, 0.0, box.s_max, h);
    return sign_claim("t3sq-upper-bound", worst, false, err_psi,
                      "t3^2(s) <= 1 + 3.5 s, equality at s = 0");
  });

  // (l, g) cell claims; genus window chosen so x sweeps the admissible range
  const int g_lo = 38, g_hi = 1000;
  tasks.push_back([&] {
    GridScan worst{std::numeric_limits<double>::infinity(), {0, 0}};
    for_each_cell(g_lo, g_hi, box, [&](int l, const GenusParams& p) {
      const double x = l * p.s;
      const double v = T1(l, p) - static_cast<double>(l) / (l - 1) * (1 + C_rfi * x);
      if (v < worst.extreme) worst = {v, {static_cast<double>(l), static_cast<double>(p.g)}};
    });
    return sign_claim("t1-lower-bound", worst, false, err_cell,
                      "T1 >= l/(l-1) (1 + C x) over admissible (l, g)");
  });
  tasks.push_back([&] {
    GridScan worst{std::numeric_limits<double>::infinity(), {0, 0}};
    for_each_cell(g_lo, g_hi, box, [&](int l, const GenusParams& p) {
      const T2Result t2 = T2(l, p);
      if (!t2.defined) return;
      const double x = l * p.s;
      const double v = (1 + C_rfi * l * l * x) / (l - 1) - t2.value;
      if (v < worst.extreme) worst = {v, {static_cast<double>(l), static_cast<double>(p.g)}};
    });
    return sign_claim("t2-upper-bound", worst, false, err_cell,
                      "T2 <= (1 + C l^2 x)/(l-1) wherever T2 is real");
  });
  tasks.push_back([&] {
    GridScan worst{std::numeric_limits<double>::infinity(), {0, 0}};
    for_each_cell(g_lo, g_hi, box, [&](int l, const GenusParams& p) {
      const T2Result t2 = T2(l, p);
      if (!t2.defined) return;
      const double x = l * p.s;
      const double v = (T1(l, p) - t2.value) - (1 + C_rfi * l * x);
      if (v < worst.extreme) worst = {v, {static_cast<double>(l), static_cast<double>(p.g)}};
    });
    return sign_claim("tminus-lower-bound", worst, false, err_cell,
                      "t_-^2 >= 1 - C l x wherever the roots are real");
  });
  tasks.push_back([&] {
    GridScan worst{std::numeric_limits<double>::infinity(), {0, 0}};
    for_each_cell(g_lo, g_hi, box, [&](int l, const GenusParams& p) {
      const T2Result t2 = T2(l, p);
      if (!t2.defined) return;
      const double v = (T1(l, p) - t2.value) - T_func(p.s);
      if (v < worst.extreme) worst = {v, {static_cast<double>(l), static_cast<double>(p.g)}};
    });
    return sign_claim("t3-below-tminus", worst, true, err_cell,
                      "t3^2(s) < t_-^2(l, g) on every real-root cell");
  });

  std::vector<Certificate> out(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) { out[i] = tasks[i](); });
  std::sort(out.begin(), out.end(),
            [](const Certificate& a, const Certificate& b) { return a.claim_id < b.claim_id; });
  return out;
}

}  // namespace chm::bounds
