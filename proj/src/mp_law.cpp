#include "mub/mp_law.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "mub/paths.hpp"

namespace mub {
namespace {

double simpson_slice(const std::function<double(double)>& f, double lo, double hi, double flo,
                     double fmid, double fhi) {
  return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double adaptive_step(const std::function<double(double)>& f, double lo, double hi, double flo,
                     double fmid, double fhi, double whole, double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lmid = 0.5 * (lo + mid);
  const double rmid = 0.5 * (mid + hi);
  const double flm = f(lmid);
  const double frm = f(rmid);
  const double left = simpson_slice(f, lo, mid, flo, flm, fmid);
  const double right = simpson_slice(f, mid, hi, fmid, frm, fhi);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (hi <= lo) return 0.0;
  const double flo = f(lo);
  const double fhi = f(hi);
  const double fmid = f(0.5 * (lo + hi));
  const double whole = simpson_slice(f, lo, hi, flo, fmid, fhi);
  return adaptive_step(f, lo, hi, flo, fmid, fhi, whole, tol, 40);
}

// Weight of the substituted integrand: pdf(x) dx = weight(theta) dtheta
// with x = a + (b-a) sin^2(theta), theta in [0, pi/2].
double substituted_weight(const MpParams& params, double theta) {
  const double width = params.b - params.a;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double x = params.a + width * s * s;
  return width * width * s * s * c * c / (std::numbers::pi * x * params.y);
}

}  // namespace

MpParams::MpParams(double ratio) : y(ratio) {
  if (!(ratio > 0.0 && ratio < 1.0))
    throw std::invalid_argument("mp: ratio must lie in (0,1)");
  const double r = std::sqrt(ratio);
  a = (1.0 - r) * (1.0 - r);
  b = (1.0 + r) * (1.0 + r);
}

double mp_pdf(const MpParams& params, double x) {
  if (x <= params.a || x >= params.b) return 0.0;
  const double radicand = (params.b - x) * (x - params.a);
  return std::sqrt(radicand) / (2.0 * std::numbers::pi * x * params.y);
}

double mp_cdf(const MpParams& params, double x) {
  if (x <= params.a) return 0.0;
  if (x >= params.b) return 1.0;
  const double ratio = (x - params.a) / (params.b - params.a);
  const double theta = std::asin(std::sqrt(ratio));
  const double value = adaptive_simpson(
      [&](double t) { return substituted_weight(params, t); }, 0.0, theta, 1e-10);
  return std::min(1.0, std::max(0.0, value));
}

double mp_moment(int ell, double y) {
  if (ell < 1) throw std::invalid_argument("mp_moment: ell must be positive");
  double sum = 0.0;
  double ypow = 1.0;
  for (int v = 1; v <= ell; ++v) {
    sum += ypow * static_cast<double>(narayana(ell, v));
    ypow *= y;
  }
  return sum;
}

double mp_moment_quadrature(int ell, const MpParams& params) {
  if (ell < 0) throw std::invalid_argument("mp_moment_quadrature: negative order");
  const double width = params.b - params.a;
  return adaptive_simpson(
      [&](double t) {
        const double s = std::sin(t);
        const double x = params.a + width * s * s;
        return std::pow(x, ell) * substituted_weight(params, t);
      },
      0.0, 0.5 * std::numbers::pi, 1e-10);
}

double mp_pdf_mass(const MpParams& params) { return mp_moment_quadrature(0, params); }

}  // namespace mub
