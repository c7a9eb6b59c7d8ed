#pragma once

namespace mub {

// Marchenko-Pastur parameters for aspect ratio y in (0, 1); the density
// is supported on [a, b] = [(1-sqrt(y))^2, (1+sqrt(y))^2].
struct MpParams {
  double y;
  double a;
  double b;

  explicit MpParams(double ratio);
};

// Density: sqrt((b-x)(x-a)) / (2 pi x y) on (a, b), zero elsewhere
// (including the endpoints).
double mp_pdf(const MpParams& params, double x);

// CDF by quadrature after the substitution x = a + (b-a) sin^2(theta),
// which removes the square-root endpoint singularities. Absolute error
// below 1e-8.
double mp_cdf(const MpParams& params, double x);

// ell-th moment as the Narayana-weighted sum
// sum_{v=1..ell} y^{v-1}/v * C(ell, v-1) * C(ell-1, v-1).
double mp_moment(int ell, double y);

// Independent route: quadrature of x^ell against the density.
double mp_moment_quadrature(int ell, const MpParams& params);

// Total mass of the density; should be 1.
double mp_pdf_mass(const MpParams& params);

}  // namespace mub
