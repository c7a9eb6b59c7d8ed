#include "mub/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mub {
namespace {

inline double& at(std::vector<double>& a, int n, int i, int j) {
  return a[static_cast<std::size_t>(i) * n + j];
}

// Householder reduction of a symmetric matrix to tridiagonal form,
// accumulating the orthogonal transformations in place of the input.
// d receives the diagonal, e the subdiagonal (e[0] unused).
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(a, n, i, k));
      if (scale == 0.0) {
        e[i] = at(a, n, i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(a, n, i, k) /= scale;
          h += at(a, n, i, k) * at(a, n, i, k);
        }
        double f = at(a, n, i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(a, n, i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          at(a, n, j, i) = at(a, n, i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(a, n, j, k) * at(a, n, i, k);
          for (int k = j + 1; k <= l; ++k) g += at(a, n, k, j) * at(a, n, i, k);
          e[j] = g / h;
          f += e[j] * at(a, n, i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(a, n, i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k)
            at(a, n, j, k) -= f * e[k] + g * at(a, n, i, k);
        }
      }
    } else {
      e[i] = at(a, n, i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += at(a, n, i, k) * at(a, n, k, j);
        for (int k = 0; k <= l; ++k) at(a, n, k, j) -= g * at(a, n, k, i);
      }
    }
    d[i] = at(a, n, i, i);
    at(a, n, i, i) = 1.0;
    for (int j = 0; j <= l; ++j) at(a, n, j, i) = at(a, n, i, j) = 0.0;
  }
}

// Implicit-shift QL on the tridiagonal (d, e); rotations are applied to
// the columns of z so its columns end up as eigenvectors.
void ql_iterate(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, int n) {
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 50) throw std::runtime_error("eigensolver: QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = at(z, n, k, i + 1);
            at(z, n, k, i + 1) = s * at(z, n, k, i) + c * f;
            at(z, n, k, i) = c * at(z, n, k, i) - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

SymmetricEigenResult symmetric_eigen(std::vector<double> matrix, int n) {
  if (n < 1) throw std::invalid_argument("symmetric_eigen: empty matrix");
  if (static_cast<int>(matrix.size()) != n * n)
    throw std::invalid_argument("symmetric_eigen: size mismatch");
  std::vector<double> d(n), e(n);
  tridiagonalize(matrix, n, d, e);
  ql_iterate(d, e, matrix, n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

  SymmetricEigenResult result;
  result.values.resize(n);
  result.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    result.values[j] = d[order[j]];
    for (int k = 0; k < n; ++k)
      result.vectors[static_cast<std::size_t>(k) * n + j] = at(matrix, n, k, order[j]);
  }
  return result;
}

HermitianEigenResult hermitian_eigen(const CMatrix& a, double hermitian_tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eigen: matrix not square");
  const int n = a.rows();
  if (hermitian_defect(a) > hermitian_tol)
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian");

  // Exactly Hermitian symmetrization, so the embedding is exactly symmetric.
  const int nn = 2 * n;
  std::vector<double> m(static_cast<std::size_t>(nn) * nn);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = 0.5 * (a(i, j).real() + a(j, i).real());
      const double im = 0.5 * (a(i, j).imag() - a(j, i).imag());
      at(m, nn, i, j) = re;
      at(m, nn, i + n, j + n) = re;
      at(m, nn, i, j + n) = -im;
      at(m, nn, i + n, j) = im;
    }
  }

  const SymmetricEigenResult sym = symmetric_eigen(std::move(m), nn);

  HermitianEigenResult result;
  result.values.resize(n);
  result.vectors = CMatrix(n, n);
  for (int t = 0; t < n; ++t) {
    const int col = 2 * t;
    result.values[t] = sym.values[col];
    double norm_sq = 0.0;
    for (int k = 0; k < n; ++k) {
      const double re = sym.vectors[static_cast<std::size_t>(k) * nn + col];
      const double im = sym.vectors[static_cast<std::size_t>(k + n) * nn + col];
      result.vectors(k, t) = cplx(re, im);
      norm_sq += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (int k = 0; k < n; ++k) result.vectors(k, t) *= scale;
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a, double hermitian_tol) {
  return hermitian_eigen(a, hermitian_tol).values;
}

}  // namespace mub
