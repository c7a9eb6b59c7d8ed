#pragma once

#include <cstdint>
#include <vector>

#include "mub/family.hpp"
#include "mub/linalg.hpp"

namespace mub {

// One Monte-Carlo run configuration. p is derived from the ratio y.
struct SampleSpec {
  int n = 0;
  int m = 0;
  int p = 0;
  double y = 0.0;  // realized ratio p / n
  std::uint64_t seed = 0;
  int trials = 0;

  // True when m falls below sqrt(n); runs are allowed but flagged.
  bool low_basis_warning() const { return static_cast<long long>(m) * m < n; }
};

// p = round(y * n) with ties to even; validates 1 <= p < n and trials >= 1.
SampleSpec make_sample_spec(int n, int m, double y, std::uint64_t seed, int trials);

struct RowProvenance {
  int basis;
  int index;
  bool operator==(const RowProvenance&) const = default;
};

// p pool vectors stacked as rows, with the pool addresses they came from.
class SampleMatrix {
 public:
  SampleMatrix(CMatrix rows, std::vector<RowProvenance> provenance, int basis_count,
               std::uint64_t seed);

  int row_count() const { return rows_.rows(); }
  int dimension() const { return rows_.cols(); }
  int basis_count() const { return m_; }
  std::uint64_t seed() const { return seed_; }
  const CMatrix& rows() const { return rows_; }
  const std::vector<RowProvenance>& provenance() const { return provenance_; }

 private:
  CMatrix rows_;
  std::vector<RowProvenance> provenance_;
  int m_;
  std::uint64_t seed_;
};

// Draws p rows independently and uniformly from the mn pool vectors.
// Identical (fam, p, seed) gives identical output.
SampleMatrix draw_sample(const MubFamily& fam, int p, std::uint64_t seed);

// G = Phi * Phi^*, the p x p matrix of pairwise row inner products.
CMatrix gram(const SampleMatrix& sample);

// (1/p) tr(G^ell) by repeated multiplication; the imaginary part of the
// trace must vanish to 1e-10 and is then discarded.
double trace_moment(const CMatrix& g, int ell);
std::vector<double> trace_moments_upto(const CMatrix& g, int lmax);

}  // namespace mub
