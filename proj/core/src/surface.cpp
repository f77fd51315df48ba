#include "chm/surface.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lifted_circle.hpp"

namespace chm::surface {
namespace {

double A2_of(int g) { return static_cast<double>(g) / (g + 2); }

void check_genus(int g) {
  if (g < 2) throw std::domain_error("surface: genus must be >= 2");
}

}  // namespace

bool on_curve(const SurfacePoint& p, int g, double tol) {
  const cplx rhs = internal::radicand(p.z, g);
  const cplx lhs = std::pow(p.w, g + 1);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) <= tol * scale;
}

std::vector<cplx> w_branches(cplx z, int g) {
  check_genus(g);
  std::vector<cplx> roots;
  internal::fiber_roots(z, g, roots);
  std::sort(roots.begin(), roots.end(),
            [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });
  return roots;
}

ContinuationResult continue_w(std::span<const cplx> z_path, cplx w_start, int g) {
  check_genus(g);
  if (z_path.empty()) throw std::domain_error("continue_w: empty path");
  ContinuationResult out;
  out.w.resize(z_path.size());
  out.w[0] = w_start;
  std::vector<cplx> roots;
  for (std::size_t i = 1; i < z_path.size(); ++i) {
    internal::fiber_roots(z_path[i], g, roots);
    cplx best = roots[0];
    double bd = std::abs(roots[0] - out.w[i - 1]);
    for (int j = 1; j <= g; ++j) {
      const double d = std::abs(roots[j] - out.w[i - 1]);
      if (d < bd) {
        bd = d;
        best = roots[j];
      }
    }
    const double gap = 2 * std::abs(best) * std::sin(M_PI / (g + 1));
    if (!(bd < 0.5 * gap))
      throw std::runtime_error("continue_w: step exceeds half the branch gap; refine the path");
    out.w[i] = best;
  }
  const cplx ratio = out.w.back() / out.w.front();
  const double j = std::arg(ratio) * (g + 1) / (2 * M_PI);
  const int ji = static_cast<int>(std::lround(j));
  out.deck_power = ((ji % (g + 1)) + (g + 1)) % (g + 1);
  return out;
}

cplx rho_of(int g) { return std::polar(1.0, M_PI * g / (g + 1)); }

SurfacePoint sym_lambda(const SurfacePoint& p, int g) {
  return {-p.z, rho_of(g) * p.w};
}

SurfacePoint sym_kappa(const SurfacePoint& p) { return {std::conj(p.z), std::conj(p.w)}; }

RamificationSet ramification_points(int g) {
  check_genus(g);
  RamificationSet rs;
  rs.A = std::sqrt(A2_of(g));
  rs.P_w = w_branches(cplx(rs.A, 0.0), g);
  rs.S_w = w_branches(cplx(-rs.A, 0.0), g);
  return rs;
}

SurfacePoint P1_point(int g) {
  check_genus(g);
  const double A = std::sqrt(A2_of(g));
  const double mod = std::pow(std::abs(internal::radicand(cplx(A, 0.0), g)), 1.0 / (g + 1));
  // fiber over +A: radicand is negative real, so the m-th value carries
  // argument (2m+1) pi/(g+1)
  return {cplx(A, 0.0), std::polar(mod, 3 * M_PI / (g + 1))};
}

cplx DifferentialForm::coeff(cplx z, cplx w) const {
  const double A2 = A2_of(g);
  const cplx d2 = (z * z - A2) * (z * z - A2);
  const cplx d1 = z * z - A2;
  switch (family) {
    case FormFamily::kCandidateA:
      return std::pow(w, k) / (std::pow(z, k - 1) * d2);
    case FormFamily::kCandidateB:
      return std::pow(w, k) / (std::pow(z, k) * d2);
    case FormFamily::kCandidateC:
      return std::pow(w, k) / (std::pow(z, k + 1) * d1);
    case FormFamily::kCandidateD:
      return std::pow(z, k) / (std::pow(w, k + 1) * d1);
    case FormFamily::kCandidateE:
      return std::pow(z, k - 1) / (std::pow(w, k + 1) * d1);
    case FormFamily::kBasis1:
      return std::pow(z, k - 1) / std::pow(w, k + 1);
    case FormFamily::kBasis2:
      return std::pow(z, k - 1) * (static_cast<double>(k - 2) * z * z - k * A2) /
             (std::pow(w, k) * d2);
    case FormFamily::kBasis3:
      return std::pow(z, k - 1) * (static_cast<double>(k - 2) * z * z - k * A2) /
             (std::pow(w, k + 1) * d2);
  }
  throw std::logic_error("DifferentialForm: bad family");
}

cplx DifferentialForm::lambda_eigenvalue() const {
  const cplx rho = rho_of(g);
  const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
  switch (family) {
    case FormFamily::kCandidateA:
      return sgn * std::pow(rho, k);
    case FormFamily::kCandidateB:
      return -sgn * std::pow(rho, k);
    case FormFamily::kCandidateC:
      return sgn * std::pow(rho, k);
    case FormFamily::kCandidateD:
      return -sgn * std::pow(rho, -(k + 1));
    case FormFamily::kCandidateE:
      return sgn * std::pow(rho, -(k + 1));
    case FormFamily::kBasis1:
    case FormFamily::kBasis3:
      return sgn * std::pow(rho, -(k + 1));
    case FormFamily::kBasis2:
      return sgn * std::pow(rho, -k);
  }
  throw std::logic_error("DifferentialForm: bad family");
}

std::vector<DifferentialForm> candidate_forms(int g) {
  check_genus(g);
  std::vector<DifferentialForm> out;
  out.reserve(5 * g + 1);
  for (int k = -1; k <= g - 1; ++k) out.push_back({FormFamily::kCandidateA, k, g});
  for (int k = -1; k <= g - 1; ++k) out.push_back({FormFamily::kCandidateB, k, g});
  for (int k = -1; k <= g - 1; ++k) out.push_back({FormFamily::kCandidateC, k, g});
  for (int k = 1; k <= g - 1; ++k) out.push_back({FormFamily::kCandidateD, k, g});
  for (int k = 1; k <= g - 1; ++k) out.push_back({FormFamily::kCandidateE, k, g});
  return out;
}

std::vector<DifferentialForm> basis_forms(int g) {
  check_genus(g);
  std::vector<DifferentialForm> out;
  out.reserve(3 * g);
  for (int k = 1; k <= g - 1; ++k) out.push_back({FormFamily::kBasis1, k, g});
  for (int k = 0; k <= g; ++k) out.push_back({FormFamily::kBasis2, k, g});
  for (int k = 0; k <= g - 1; ++k) out.push_back({FormFamily::kBasis3, k, g});
  return out;
}

Residue residue_at(const DifferentialForm& form, const SurfacePoint& center, double radius,
                   double tol) {
  const int g = form.g;
  check_genus(g);
  const bool branched = std::abs(center.z) < 1e-12 || std::abs(center.z - 1.0) < 1e-12 ||
                        std::abs(center.z + 1.0) < 1e-12;
  const int loops = branched ? g + 1 : 1;

  const auto one_radius = [&](double r) {
    // start on the fiber nearest the center branch; over a totally branched
    // point any start works (the lift visits the whole fiber)
    std::vector<cplx> roots;
    internal::fiber_roots(center.z + r, g, roots);
    cplx w0 = roots[0];
    if (!branched) {
      double bd = std::abs(roots[0] - center.w);
      for (int j = 1; j <= g; ++j) {
        const double d = std::abs(roots[j] - center.w);
        if (d < bd) {
          bd = d;
          w0 = roots[j];
        }
      }
    }
    internal::LiftedCircle path(g, center.z, r, w0, loops);
    const cplx integral = internal::contour_integral(
        path, [&](cplx z, cplx w) { return form.coeff(z, w); }, 1e-12);
    return integral / cplx(0.0, 2 * M_PI);
  };

  const cplx coarse = one_radius(radius);
  const cplx fine = one_radius(radius / 2);
  Residue res;
  res.value = fine;
  res.two_radius_diff = std::abs(coarse - fine);
  res.converged = res.two_radius_diff <= tol;
  return res;
}

}  // namespace chm::surface
