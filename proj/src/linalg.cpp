#include "mub/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace mub {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
  return m;
}

cplx inner(const cplx* u, const cplx* v, int n) {
  double re = 0.0, im = 0.0;
  for (int k = 0; k < n; ++k) {
    const double ur = u[k].real(), ui = u[k].imag();
    const double vr = v[k].real(), vi = v[k].imag();
    re += ur * vr + ui * vi;
    im += ui * vr - ur * vi;
  }
  return {re, im};
}

cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner: dimension mismatch");
  return inner(u.data(), v.data(), static_cast<int>(u.size()));
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  CMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    cplx* ci = c.row(i);
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* bk = b.row(k);
      for (int j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

cplx trace(const CMatrix& a) {
  cplx t(0.0, 0.0);
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

double hermitian_defect(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_defect: not square");
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j <= i; ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const cplx& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace mub
