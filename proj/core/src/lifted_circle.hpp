#pragma once

// Branch-tracked lifts of circular z-paths and adaptive contour quadrature.
// Internal to the library; surface.cpp and periods.cpp share it.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace chm::internal {

using cplx = std::complex<double>;

inline cplx radicand(cplx z, int g) {
  return std::pow(z, g) * (z * z - 1.0);
}

// all g+1 roots of the radicand, unordered (caller picks by proximity)
inline void fiber_roots(cplx z, int g, std::vector<cplx>& out) {
  const cplx R = radicand(z, g);
  const double r = std::pow(std::abs(R), 1.0 / (g + 1));
  const double phi = std::arg(R);
  out.resize(g + 1);
  for (int j = 0; j <= g; ++j) {
    const double a = (phi + 2 * M_PI * j) / (g + 1);
    out[j] = std::polar(r, a);
  }
}

inline cplx nearest_root(cplx z, int g, cplx ref, std::vector<cplx>& scratch) {
  fiber_roots(z, g, scratch);
  cplx best = scratch[0];
  double bd = std::abs(scratch[0] - ref);
  for (int j = 1; j <= g; ++j) {
    const double d = std::abs(scratch[j] - ref);
    if (d < bd) {
      bd = d;
      best = scratch[j];
    }
  }
  return best;
}

// z(s) = center + radius e^{i(phase0 + 2 pi s)}, s in [0, loops]; w continued
// from w0, which must sit over z(0).
class LiftedCircle {
 public:
  LiftedCircle(int g, cplx center, double radius, cplx w0, int loops, double phase0 = 0.0)
      : g_(g), center_(center), radius_(radius), loops_(loops), phase0_(phase0) {
    std::size_t n = static_cast<std::size_t>(256) * loops;
    for (;;) {
      if (!build_table(n, w0)) {
        if (n > (1u << 22)) throw std::runtime_error("LiftedCircle: branch gap below resolution");
        n *= 2;
        continue;
      }
      break;
    }
  }

  cplx z(double s) const { return center_ + std::polar(radius_, phase0_ + 2 * M_PI * s); }
  cplx dz(double s) const {  // d z / d s
    return cplx(0, 2 * M_PI) * std::polar(radius_, phase0_ + 2 * M_PI * s);
  }
  cplx w(double s) const {
    const double u = s / loops_;
    const auto i = std::min(static_cast<std::size_t>(u * (table_.size() - 1) + 0.5),
                            table_.size() - 1);
    return nearest_root(z(s), g_, table_[i], scratch_);
  }
  cplx w_start() const { return table_.front(); }
  cplx w_end() const { return table_.back(); }
  int loops() const { return loops_; }

  // deck transform index j: w_end = w_start e^{2 pi i j/(g+1)}
  int deck_power() const {
    const double dphi = std::arg(w_end() / w_start());
    const double j = dphi * (g_ + 1) / (2 * M_PI);
    const int ji = static_cast<int>(std::lround(j));
    return ((ji % (g_ + 1)) + (g_ + 1)) % (g_ + 1);
  }

 private:
  bool build_table(std::size_t n, cplx w0) {
    table_.assign(n + 1, cplx{});
    table_[0] = w0;
    std::vector<cplx> roots;
    for (std::size_t i = 1; i <= n; ++i) {
      const double s = loops_ * static_cast<double>(i) / n;
      const cplx zi = z(s);
      fiber_roots(zi, g_, roots);
      cplx best = roots[0];
      double bd = std::abs(roots[0] - table_[i - 1]);
      for (int j = 1; j <= g_; ++j) {
        const double d = std::abs(roots[j] - table_[i - 1]);
        if (d < bd) {
          bd = d;
          best = roots[j];
        }
      }
      // adjacent fiber roots sit 2 |w| sin(pi/(g+1)) apart
      const double gap = 2 * std::abs(best) * std::sin(M_PI / (g_ + 1));
      if (!(bd < 0.45 * gap)) return false;
      table_[i] = best;
    }
    return true;
  }

  int g_;
  cplx center_;
  double radius_;
  int loops_;
  double phase0_;
  std::vector<cplx> table_;
  mutable std::vector<cplx> scratch_;
};

// adaptive Gauss-Kronrod 7/15 over s in [a, b] of fn(s), complex-valued
template <typename Fn>
cplx gk_segment(const Fn& fn, double a, double b, double& err, double& round_floor) {
  static const double xgk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.0};
  static const double wgk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static const double wg[4] = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  const double mid = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  cplx kron = 0.0, gauss = 0.0;
  double l1 = 0.0;
  for (int i = 0; i < 7; ++i) {
    const cplx f1 = fn(mid - hl * xgk[i]);
    const cplx f2 = fn(mid + hl * xgk[i]);
    kron += wgk[i] * (f1 + f2);
    l1 += wgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += wg[i / 2] * (f1 + f2);
  }
  const cplx fc = fn(mid);
  kron += wgk[7] * fc;
  gauss += wg[3] * fc;
  l1 += wgk[7] * std::abs(fc);
  kron *= hl;
  gauss *= hl;
  err = std::abs(kron - gauss);
  // the estimate cannot resolve below the roundoff of the evaluations
  round_floor = 50 * std::numeric_limits<double>::epsilon() * l1 * hl;
  return kron;
}

template <typename Fn>
cplx adaptive_quad(const Fn& fn, double a, double b, double abs_tol, int depth = 0) {
  double err, floor;
  const cplx v = gk_segment(fn, a, b, err, floor);
  if (err <= std::max(abs_tol, floor) || depth >= 24) {
    if (depth >= 24 && err > std::max(abs_tol, floor))
      throw std::runtime_error("adaptive_quad: tolerance not met");
    return v;
  }
  const double mid = 0.5 * (a + b);
  return adaptive_quad(fn, a, mid, abs_tol / 2, depth + 1) +
         adaptive_quad(fn, mid, b, abs_tol / 2, depth + 1);
}

// contour integral of integrand(z, w) dz along the lifted circle
template <typename Fn>
cplx contour_integral(const LiftedCircle& path, const Fn& integrand, double abs_tol) {
  const int loops = path.loops();
  cplx total = 0.0;
  // one adaptive call per turn keeps segments away from the table seam
  for (int t = 0; t < loops; ++t) {
    total += adaptive_quad(
        [&](double s) { return integrand(path.z(s), path.w(s)) * path.dz(s); },
        static_cast<double>(t), static_cast<double>(t + 1), abs_tol);
  }
  return total;
}

}  // namespace chm::internal
