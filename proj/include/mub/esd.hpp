#pragma once

#include <cstddef>
#include <vector>

#include "mub/mp_law.hpp"

namespace mub {

// Empirical spectral distribution: the step CDF with mass 1/N at each
// stored value. Pooling eigenvalues from several trials yields the
// trial-averaged ESD.
class Esd {
 public:
  explicit Esd(std::vector<double> values);

  // F(x) = fraction of values <= x.
  double operator()(double x) const;

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;  // ascending
};

// sup |F - F_MP| probed at both sides of every jump of F and on a
// 2000-point grid spanning [a - 0.5, b + 0.5].
double ks_distance(const Esd& F, const MpParams& params);

}  // namespace mub
