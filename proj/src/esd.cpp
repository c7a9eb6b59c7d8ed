#include "mub/esd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mub {

Esd::Esd(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("esd: no values");
  std::sort(values_.begin(), values_.end());
}

double Esd::operator()(double x) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double ks_distance(const Esd& F, const MpParams& params) {
  const std::vector<double>& vals = F.values();
  const double total = static_cast<double>(vals.size());
  double sup = 0.0;

  // Both sides of every jump.
  std::size_t i = 0;
  while (i < vals.size()) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    const double x = vals[i];
    const double ref = mp_cdf(params, x);
    const double before = static_cast<double>(i) / total;
    const double after = static_cast<double>(j) / total;
    sup = std::max({sup, std::abs(before - ref), std::abs(after - ref)});
    i = j;
  }

  // Grid sweep across the support and a margin on each side.
  const double lo = params.a - 0.5;
  const double hi = params.b + 0.5;
  const int grid = 2000;
  for (int g = 0; g < grid; ++g) {
    const double x = lo + (hi - lo) * g / (grid - 1);
    sup = std::max(sup, std::abs(F(x) - mp_cdf(params, x)));
  }
  return sup;
}

}  // namespace mub
