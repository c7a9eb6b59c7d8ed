#include "mub/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mub/rng.hpp"

namespace mub {

SampleSpec make_sample_spec(int n, int m, double y, std::uint64_t seed, int trials) {
  if (n < 2) throw std::invalid_argument("sample spec: n must be at least 2");
  if (m < 1) throw std::invalid_argument("sample spec: m must be positive");
  if (!(y > 0.0 && y < 1.0)) throw std::invalid_argument("sample spec: y must lie in (0,1)");
  if (trials < 1) throw std::invalid_argument("sample spec: trials must be positive");
  const int p = static_cast<int>(std::llrint(y * n));
  if (p < 1) throw std::invalid_argument("sample spec: p = round(y*n) must be at least 1");
  if (p >= n) throw std::invalid_argument("sample spec: p = round(y*n) must be below n");
  return {n, m, p, static_cast<double>(p) / n, seed, trials};
}

SampleMatrix::SampleMatrix(CMatrix rows, std::vector<RowProvenance> provenance, int basis_count,
                           std::uint64_t seed)
    : rows_(std::move(rows)), provenance_(std::move(provenance)), m_(basis_count), seed_(seed) {
  if (static_cast<int>(provenance_.size()) != rows_.rows())
    throw std::invalid_argument("sample: provenance size mismatch");
}

SampleMatrix draw_sample(const MubFamily& fam, int p, std::uint64_t seed) {
  if (p < 1) throw std::invalid_argument("draw_sample: p must be positive");
  const int n = fam.dimension();
  const std::uint64_t pool = static_cast<std::uint64_t>(fam.pool_size());
  SplitMix64 rng(seed);
  CMatrix rows(p, n);
  std::vector<RowProvenance> provenance(p);
  for (int r = 0; r < p; ++r) {
    const int k = static_cast<int>(rng.below(pool));
    provenance[r] = {k / n, k % n};
    const std::vector<cplx>& v = fam.pool_vector(k);
    for (int x = 0; x < n; ++x) rows(r, x) = v[x];
  }
  return SampleMatrix(std::move(rows), std::move(provenance), fam.basis_count(), seed);
}

CMatrix gram(const SampleMatrix& sample) {
  const int p = sample.row_count();
  const int n = sample.dimension();
  const CMatrix& rows = sample.rows();
  CMatrix g(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j <= i; ++j) {
      const cplx z = inner(rows.row(i), rows.row(j), n);
      g(i, j) = z;
      g(j, i) = std::conj(z);
    }
  }
  return g;
}

namespace {

double real_trace_checked(const CMatrix& power, int p) {
  const cplx t = trace(power);
  if (std::abs(t.imag()) > 1e-10)
    throw std::runtime_error("trace_moment: trace has non-negligible imaginary part");
  return t.real() / p;
}

}  // namespace

double trace_moment(const CMatrix& g, int ell) {
  if (ell < 1) throw std::invalid_argument("trace_moment: ell must be positive");
  if (g.rows() != g.cols()) throw std::invalid_argument("trace_moment: matrix not square");
  if (hermitian_defect(g) > 1e-10)
    throw std::invalid_argument("trace_moment: input is not Hermitian");
  CMatrix power = g;
  for (int i = 1; i < ell; ++i) power = multiply(power, g);
  return real_trace_checked(power, g.rows());
}

std::vector<double> trace_moments_upto(const CMatrix& g, int lmax) {
  if (lmax < 1) throw std::invalid_argument("trace_moments_upto: lmax must be positive");
  if (hermitian_defect(g) > 1e-10)
    throw std::invalid_argument("trace_moments_upto: input is not Hermitian");
  std::vector<double> out;
  out.reserve(lmax);
  CMatrix power = g;
  out.push_back(real_trace_checked(power, g.rows()));
  for (int ell = 2; ell <= lmax; ++ell) {
    power = multiply(power, g);
    out.push_back(real_trace_checked(power, g.rows()));
  }
  return out;
}

}  // namespace mub
