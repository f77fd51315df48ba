#pragma once

namespace chm::specfun {

inline constexpr double pi          = 3.14159265358979323846264338327950288;
inline constexpr double ln_pi       = 1.14472988584940017414342735135305871;
inline constexpr double ln2         = 0.69314718055994530941723212145817657;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double zeta3       = 1.20205690315959428539973816151144999;

// Value with a conservative, analytically derived error bound.
//
// Convention: |computed - exact| <= rel_err_bound * max(1, |value|) for
// ln_gamma, digamma and polygamma (for ln Gamma this doubles as a relative
// bound on Gamma itself).  gamma_ratio is strictly positive and its bound is
// plain relative: |computed - exact| <= rel_err_bound * value.
struct EvalResult {
  double value = 0.0;
  double rel_err_bound = 0.0;
};

// ln Gamma(x), x > 0.  Argument-shift recurrence up to x >= 10, then the
// Stirling series through the x^-15 term; truncation bounded by the first
// omitted term.
EvalResult ln_gamma(double x);

// psi(x) = d/dx ln Gamma(x), x > 0.
EvalResult digamma(double x);

// psi^(n)(x) for 1 <= n <= 8, x > 0.
EvalResult polygamma(int n, double x);

// Gamma(p)/Gamma(q) via exp(lnGamma(p) - lnGamma(q)); never forms raw Gamma.
EvalResult gamma_ratio(double p, double q);

}  // namespace chm::specfun
