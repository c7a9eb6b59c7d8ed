#pragma once

#include <vector>

#include "mub/linalg.hpp"

namespace mub {

struct SymmetricEigenResult {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n; column j pairs with values[j]
};

// Householder reduction to tridiagonal form followed by implicit-shift QL
// iteration, with accumulated orthogonal transformations.
SymmetricEigenResult symmetric_eigen(std::vector<double> matrix, int n);

struct HermitianEigenResult {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column j pairs with values[j]
};

// Solves the complex Hermitian problem through the real symmetric
// embedding [[Re A, -Im A], [Im A, Re A]], whose spectrum is the
// doubled spectrum of A. Throws if the Hermitian defect exceeds tol.
HermitianEigenResult hermitian_eigen(const CMatrix& a, double hermitian_tol = 1e-10);
std::vector<double> hermitian_eigenvalues(const CMatrix& a, double hermitian_tol = 1e-10);

}  // namespace mub
