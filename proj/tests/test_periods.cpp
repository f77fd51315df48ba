#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "chm/periods.hpp"

using namespace chm;
using namespace chm::periods;

namespace {

bool close_c(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(b), 1.0);
}

}  // namespace

TEST_CASE("lifted homology loop") {
  for (int g : {2, 3, 5}) {
    const BetaLift lift = lift_beta(g, 2048);
    CHECK(std::fabs(lift.w.front().imag()) < 1e-12);
    CHECK(lift.w.front().real() > 0.0);
    for (std::size_t i = 0; i < lift.z.size(); ++i) {
      CHECK(std::abs(std::abs(lift.z[i] - 0.5) - 1.0) < 1e-12);
      CHECK(surface::on_curve({lift.z[i], lift.w[i]}, g, 1e-9));
    }
    // the deck closure matches the winding count: g turns around 0 plus one
    // around +1 make g+1 = 0 mod (g+1)
    CHECK(lift.deck_power == 0);
    // fundamental theorem for df = dw on the closed lift
    CHECK(std::abs(lift.w.back() - lift.w.front()) < 1e-10);
  }
  CHECK_THROWS_AS(lift_beta(1), std::domain_error);
  CHECK_THROWS_AS(lift_beta(2, 8), std::domain_error);
}

TEST_CASE("quadrature matches the closed-form periods") {
  for (int g : {2, 3, 4, 5}) {
    const GenusParams p = GenusParams::from_genus(g);
    for (const auto& form : surface::basis_forms(g)) {
      for (int power = 0; power <= 2; ++power) {
        const cplx quad = period(form, power, 0, g);
        const cplx closed = period_closed_form(form, power, p);
        INFO("g=", g, " family=", static_cast<int>(form.family), " k=", form.k,
             " power=", power);
        CHECK(close_c(quad, closed, 1e-8));
      }
    }
  }
}

TEST_CASE("vanishing sine factors give vanishing periods") {
  const int g = 4;
  const GenusParams p = GenusParams::from_genus(g);
  const auto is_zero = [&](surface::FormFamily fam, int k, int power) {
    const surface::DifferentialForm form{fam, k, g};
    CHECK(std::abs(period(form, power, 0, g)) < 1e-10);
    CHECK(std::abs(period_closed_form(form, power, p)) == 0.0);
  };
  is_zero(surface::FormFamily::kBasis2, 0, 0);
  is_zero(surface::FormFamily::kBasis2, 1, 1);
  is_zero(surface::FormFamily::kBasis2, 2, 2);
  is_zero(surface::FormFamily::kBasis1, 1, 2);
  is_zero(surface::FormFamily::kBasis3, 0, 1);
}

TEST_CASE("pullback phases predict the rotated cycles") {
  for (int g : {2, 3}) {
    for (const auto& form : surface::basis_forms(g)) {
      for (int power = 0; power <= 2; ++power) {
        const cplx base = period(form, power, 0, g);
        for (int l : {1, 2}) {
          const cplx direct = period(form, power, l, g);
          const cplx predicted = std::pow(pullback_phase(form, power), l) * base;
          INFO("g=", g, " family=", static_cast<int>(form.family), " k=", form.k,
               " power=", power, " l=", l);
          CHECK(close_c(direct, predicted, 1e-8));
        }
      }
    }
  }
}

TEST_CASE("rotation block maps the l=0 vector period to l=1") {
  for (int g : {2, 3}) {
    const double theta = g * M_PI / (g + 1);
    const double ct = std::cos(theta), st = std::sin(theta);
    std::vector<surface::DifferentialForm> sample = {
        {surface::FormFamily::kBasis1, 1, g}, {surface::FormFamily::kBasis2, 2, g}};
    for (const auto& form : sample) {
      const auto period_at = [&](int l) {
        const cplx p0 = period(form, 0, l, g);
        const cplx p1 = period(form, 1, l, g);
        const cplx p2 = period(form, 2, l, g);
        return std::array<cplx, 3>{p0 - p2, cplx(0, 1) * (p0 + p2), 2.0 * p1};
      };
      const auto v0 = period_at(0);
      const auto v1 = period_at(1);
      // the component-vector relation carries rho times the scalar eigenvalue
      const cplx fac = surface::rho_of(g) * form.lambda_eigenvalue();
      const std::array<cplx, 3> rotated = {fac * (ct * v0[0] - st * v0[1]),
                                           fac * (st * v0[0] + ct * v0[1]), fac * v0[2]};
      for (int i = 0; i < 3; ++i) CHECK(close_c(v1[i], rotated[i], 1e-8));
    }
  }
}

TEST_CASE("every homology cycle index is reachable") {
  // period() cross-checks l > 0 against the accumulated pullback phase and
  // throws on disagreement, so covering l = 0..2g-1 exercises the powers
  for (int g : {2, 3}) {
    const surface::DifferentialForm form{surface::FormFamily::kBasis1, 1, g};
    for (int l = 0; l <= 2 * g - 1; ++l) {
      CHECK_NOTHROW(period(form, 1, l, g));
    }
    CHECK_THROWS_AS(period(form, 1, 2 * g, g), std::domain_error);
    CHECK_THROWS_AS(period(form, 3, 0, g), std::domain_error);
  }
}

TEST_CASE("cohomology equivalents integrate identically") {
  for (int g : {2, 3}) {
    const auto rep = cohomology_check(g);
    CHECK(rep.pass);
    CHECK(rep.max_rel_discrepancy < 1e-8);
    CHECK(rep.rows.size() == static_cast<std::size_t>((g + 1) + g));
    for (const auto& row : rep.rows) {
      CHECK(row.rel_discrepancy < 1e-8);
    }
  }
}

TEST_CASE("system assembly dimensions at the critical parameters") {
  for (int g : {2, 3, 5}) {
    const GenusParams p = GenusParams::from_genus(g);
    const CriticalValues cv = critical_values(p);
    CHECK(assemble_system(p, cv.t1).dim_solution == 1);
    CHECK(assemble_system(p, cv.t2).dim_solution == 1);
    CHECK(assemble_system(p, cv.t3).dim_solution == 2);
    const auto generic = assemble_system(p, std::sqrt(cv.t1 * cv.t2));
    CHECK(generic.dim_solution == 0);
    CHECK(generic.gap_ok);
    CHECK(generic.matrix.rows() == 6 * g);
    CHECK(generic.matrix.cols() == 6 * g);
    CHECK(!generic.notes.empty());
  }
  CHECK_THROWS_AS(assemble_system(GenusParams::from_genus(2), 0.0), std::domain_error);
}

TEST_CASE("system assembly is deterministic") {
  const GenusParams p = GenusParams::from_genus(3);
  const auto a = assemble_system(p, 1.1);
  const auto b = assemble_system(p, 1.1);
  CHECK((a.matrix - b.matrix).norm() == 0.0);
  CHECK(a.dim_solution == b.dim_solution);
}

TEST_CASE("rank jumps only at the special parameters") {
  for (int g : {2, 3}) {
    const GenusParams p = GenusParams::from_genus(g);
    const CriticalValues cv = critical_values(p);
    const double lo = cv.t1 / 2, hi = 2 * cv.t3;
    for (int i = 0; i < 200; ++i) {
      const double t = lo * std::pow(hi / lo, i / 199.0);
      const auto sys = assemble_system(p, t);
      INFO("g=", g, " t=", t);
      CHECK(sys.dim_solution == 0);
    }
  }
}

TEST_CASE("quartic roots open extra kernel directions at genus 38") {
  const GenusParams p = GenusParams::from_genus(38);
  const auto q = quartic_instance(2, p);
  REQUIRE(q.has_roots);
  CHECK(assemble_system(p, q.t_minus).dim_solution == 2);
  CHECK(assemble_system(p, q.t_plus).dim_solution == 2);
  CHECK(assemble_system(p, 0.5 * (q.t_minus + q.t_plus)).dim_solution == 0);
  const CriticalValues cv = critical_values(p);
  CHECK(assemble_system(p, cv.t2).dim_solution == 1);
}
