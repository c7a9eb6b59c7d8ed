#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mub {

using cplx = std::complex<double>;

// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return data_[idx(i, j)]; }
  const cplx& operator()(int i, int j) const { return data_[idx(i, j)]; }

  cplx* row(int i) { return data_.data() + idx(i, 0); }
  const cplx* row(int i) const { return data_.data() + idx(i, 0); }

  const std::vector<cplx>& data() const { return data_; }

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

// Standard Hermitian inner product on C^n, conjugate-linear in the
// second slot: <u, v> = sum_k u_k * conj(v_k).
cplx inner(const cplx* u, const cplx* v, int n);
cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v);

CMatrix multiply(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
cplx trace(const CMatrix& a);

// max_ij |a_ij - conj(a_ji)|
double hermitian_defect(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double frobenius_norm(const CMatrix& a);

}  // namespace mub
