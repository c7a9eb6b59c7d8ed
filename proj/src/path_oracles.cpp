#include "mub/path_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "mub/sampling.hpp"

namespace mub {

int PathAssignment::at(int label) const {
  const int slot = label - 1;
  if (slot < 0 || slot >= static_cast<int>(pool_index_by_label.size()) ||
      pool_index_by_label[slot] < 0)
    throw std::invalid_argument("assignment: vertex " + std::to_string(label) + " unassigned");
  return pool_index_by_label[slot];
}

AssignmentStats assignment_stats(const ClosedPath& path, const PathAssignment& assignment) {
  std::vector<int> values;
  for (int label : path.labels()) values.push_back(assignment.at(label));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  int crossings = 0;
  for (int i = 0; i < path.length(); ++i)
    if (assignment.at(path.word[i]) != assignment.at(path.word[i + 1])) ++crossings;
  return {static_cast<int>(values.size()), crossings};
}

cplx omega(const ClosedPath& path, const PathAssignment& assignment, const MubFamily& fam) {
  cplx product(1.0, 0.0);
  for (int i = 0; i < path.length(); ++i) {
    const std::vector<cplx>& u = fam.pool_vector(assignment.at(path.word[i]));
    const std::vector<cplx>& v = fam.pool_vector(assignment.at(path.word[i + 1]));
    product *= inner(u, v);
  }
  return product;
}

namespace {

// Pairwise inner products of the pool, tabulated when the pool is small
// enough; otherwise computed on demand.
class PoolGram {
 public:
  explicit PoolGram(const MubFamily& fam) : fam_(fam), pool_(fam.pool_size()) {
    if (pool_ <= kTableLimit) {
      table_.resize(static_cast<std::size_t>(pool_) * pool_);
      for (int i = 0; i < pool_; ++i)
        for (int j = 0; j < pool_; ++j)
          table_[static_cast<std::size_t>(i) * pool_ + j] =
              inner(fam.pool_vector(i), fam.pool_vector(j));
    }
  }

  cplx at(int i, int j) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(i) * pool_ + j];
    return inner(fam_.pool_vector(i), fam_.pool_vector(j));
  }

 private:
  static constexpr int kTableLimit = 1500;

  const MubFamily& fam_;
  int pool_;
  std::vector<cplx> table_;
};

// Path steps translated to slots in a compact vertex array.
std::vector<std::pair<int, int>> steps_as_slots(const ClosedPath& path,
                                                const std::vector<int>& labels) {
  auto slot_of = [&](int label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) -
                            labels.begin());
  };
  std::vector<std::pair<int, int>> steps;
  steps.reserve(path.length());
  for (int i = 0; i < path.length(); ++i)
    steps.emplace_back(slot_of(path.word[i]), slot_of(path.word[i + 1]));
  return steps;
}

void check_cost(int pool, int vertices, double cost_cap, const char* what) {
  if (std::pow(static_cast<double>(pool), vertices) > cost_cap)
    throw std::invalid_argument(std::string(what) + ": assignment count exceeds cost cap");
}

// Sums f(values) over all assignments values: slots -> [0, pool).
template <typename Body>
void for_each_assignment(int slots, int pool, Body&& body) {
  std::vector<int> values(slots, 0);
  for (;;) {
    body(values);
    int pos = slots - 1;
    while (pos >= 0 && values[pos] == pool - 1) values[pos--] = 0;
    if (pos < 0) return;
    ++values[pos];
  }
}

unsigned long long falling_factorial(int p, int v) {
  unsigned long long result = 1;
  for (int i = 0; i < v; ++i) result *= static_cast<unsigned long long>(p - i);
  return result;
}

}  // namespace

WValue w_exact(const ClosedPath& path, const MubFamily& fam, double cost_cap) {
  const std::vector<int> labels = path.labels();
  const int v = static_cast<int>(labels.size());
  const int n = fam.dimension();
  const int m = fam.basis_count();

  WValue result;
  result.gamma_member = in_gamma(path);
  result.vertex_count = v;
  result.predicted = std::pow(static_cast<double>(n), 1 - v);
  result.bound = result.predicted * (1.0 / m + 1.0 / n);

  if (v == 1) {
    // Every step stays on one unit vector, so omega is identically 1.
    result.value = cplx(1.0, 0.0);
    return result;
  }

  const int pool = fam.pool_size();
  check_cost(pool, v, cost_cap, "w_exact");
  const PoolGram pg(fam);
  const std::vector<std::pair<int, int>> steps = steps_as_slots(path, labels);

  cplx sum(0.0, 0.0);
  for_each_assignment(v, pool, [&](const std::vector<int>& values) {
    cplx product(1.0, 0.0);
    for (const auto& [si, sj] : steps) product *= pg.at(values[si], values[sj]);
    sum += product;
  });
  result.value = sum / std::pow(static_cast<double>(pool), v);
  return result;
}

double expectation_exact(int length, int p, const MubFamily& fam) {
  if (length < 1 || length > 6)
    throw std::invalid_argument("expectation_exact: length must be in [1, 6]");
  if (p < 1) throw std::invalid_argument("expectation_exact: p must be positive");
  cplx sum(0.0, 0.0);
  for (const ClosedPath& path : enumerate_paths(length)) {
    const int v = path.vertex_count();
    if (v > p) continue;  // empty orbit for this p
    const WValue w = w_exact(path, fam);
    sum += static_cast<double>(falling_factorial(p, v)) * w.value;
  }
  sum /= static_cast<double>(p);
  if (std::abs(sum.imag()) > 1e-10)
    throw std::runtime_error("expectation_exact: non-real expectation");
  return sum.real();
}

namespace {

// A_length(s) for the sample map with the given pool indices.
double map_moment(const std::vector<int>& rows, int length, const PoolGram& pg) {
  const int p = static_cast<int>(rows.size());
  CMatrix g(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) g(i, j) = pg.at(rows[i], rows[j]);
  CMatrix power = g;
  for (int i = 1; i < length; ++i) power = multiply(power, g);
  return trace(power).real() / p;
}

std::vector<double> all_map_moments(int length, int p, const MubFamily& fam, double cost_cap,
                                    const char* what) {
  if (length < 1) throw std::invalid_argument("exhaustive oracle: length must be positive");
  if (p < 1) throw std::invalid_argument("exhaustive oracle: p must be positive");
  const int pool = fam.pool_size();
  check_cost(pool, p, cost_cap, what);
  const PoolGram pg(fam);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(std::pow(static_cast<double>(pool), p)));
  for_each_assignment(p, pool, [&](const std::vector<int>& rows) {
    values.push_back(map_moment(rows, length, pg));
  });
  return values;
}

}  // namespace

double exhaustive_moment(int length, int p, const MubFamily& fam, double cost_cap) {
  const std::vector<double> values = all_map_moments(length, p, fam, cost_cap, "exhaustive_moment");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double exhaustive_variance(int length, int p, const MubFamily& fam, double cost_cap) {
  const std::vector<double> values =
      all_map_moments(length, p, fam, cost_cap, "exhaustive_variance");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  return var / static_cast<double>(values.size());
}

namespace {

std::vector<int> rotate_to_label(const std::vector<int>& word, int label) {
  const int length = static_cast<int>(word.size()) - 1;
  int start = 0;
  while (word[start] != label) ++start;
  std::vector<int> out(word.size());
  for (int i = 0; i < length; ++i) out[i] = word[(start + i) % length];
  out[length] = out[0];
  return out;
}

}  // namespace

ClosedPath join_paths(const ClosedPath& g1, const ClosedPath& g2) {
  const std::vector<int> l1 = g1.labels();
  const std::vector<int> l2 = g2.labels();
  std::vector<int> common;
  std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(common));
  if (common.empty()) throw std::invalid_argument("join_paths: vertex sets are disjoint");

  const std::vector<int> w1 = rotate_to_label(g1.word, common.front());
  const std::vector<int> w2 = rotate_to_label(g2.word, common.front());
  const int len1 = static_cast<int>(w1.size()) - 1;
  const int len2 = static_cast<int>(w2.size()) - 1;

  std::vector<int> joined(len1 + len2 + 1);
  for (int i = 0; i <= len1; ++i) joined[i] = w1[i];
  for (int i = len1; i <= len1 + len2; ++i) joined[i] = w2[len1 + len2 - i];
  return ClosedPath(std::move(joined));
}

cplx w_pair_exact(const ClosedPath& g1, const ClosedPath& g2, const MubFamily& fam,
                  double cost_cap) {
  std::vector<int> labels = g1.labels();
  for (int label : g2.labels()) labels.push_back(label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int v = static_cast<int>(labels.size());

  const int pool = fam.pool_size();
  check_cost(pool, v, cost_cap, "w_pair_exact");
  const PoolGram pg(fam);
  const std::vector<std::pair<int, int>> steps1 = steps_as_slots(g1, labels);
  const std::vector<std::pair<int, int>> steps2 = steps_as_slots(g2, labels);

  cplx sum(0.0, 0.0);
  for_each_assignment(v, pool, [&](const std::vector<int>& values) {
    cplx p1(1.0, 0.0), p2(1.0, 0.0);
    for (const auto& [si, sj] : steps1) p1 *= pg.at(values[si], values[sj]);
    for (const auto& [si, sj] : steps2) p2 *= pg.at(values[si], values[sj]);
    sum += p1 * std::conj(p2);
  });
  return sum / std::pow(static_cast<double>(pool), v);
}

namespace {

void enumerate_second_words(int length, int max_used, std::vector<int>& word, int pos,
                            const ClosedPath& first, std::vector<std::pair<ClosedPath, ClosedPath>>& out) {
  if (pos == length) {
    word[length] = word[0];
    out.emplace_back(first, ClosedPath(word));
    return;
  }
  for (int label = 1; label <= max_used + 1; ++label) {
    word[pos] = label;
    enumerate_second_words(length, std::max(max_used, label), word, pos + 1, first, out);
  }
}

}  // namespace

std::vector<std::pair<ClosedPath, ClosedPath>> enumerate_path_pairs(int length) {
  std::vector<std::pair<ClosedPath, ClosedPath>> out;
  for (const ClosedPath& first : enumerate_paths(length)) {
    std::vector<int> word(length + 1);
    // New labels in the second word continue the restricted growth of the
    // combined scan, so each pair orbit appears exactly once.
    for (int label = 1; label <= first.vertex_count() + 1; ++label) {
      word[0] = label;
      enumerate_second_words(length, std::max(first.vertex_count(), label), word, 1, first, out);
    }
  }
  return out;
}

double variance_exact(int length, int p, const MubFamily& fam) {
  if (length < 1 || length > 3)
    throw std::invalid_argument("variance_exact: length must be in [1, 3]");
  if (p < 1) throw std::invalid_argument("variance_exact: p must be positive");

  std::map<std::string, cplx> w_cache;
  auto w_of = [&](const ClosedPath& path) {
    const std::string key = canonical_form(path).str();
    const auto it = w_cache.find(key);
    if (it != w_cache.end()) return it->second;
    const cplx value = w_exact(path, fam).value;
    w_cache.emplace(key, value);
    return value;
  };

  cplx sum(0.0, 0.0);
  for (const auto& [g1, g2] : enumerate_path_pairs(length)) {
    std::vector<int> labels = g1.labels();
    for (int label : g2.labels()) labels.push_back(label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    const int v_union = static_cast<int>(labels.size());
    if (v_union > p) continue;
    const cplx w12 = w_pair_exact(g1, g2, fam);
    const cplx separate = w_of(g1) * std::conj(w_of(g2));
    sum += static_cast<double>(falling_factorial(p, v_union)) * (w12 - separate);
  }
  sum /= static_cast<double>(p) * static_cast<double>(p);
  if (std::abs(sum.imag()) > 1e-10) throw std::runtime_error("variance_exact: non-real variance");

  const double direct = exhaustive_variance(length, p, fam);
  if (std::abs(sum.real() - direct) > 1e-10)
    throw std::runtime_error("variance_exact: pair-class sum disagrees with the direct average");
  return sum.real();
}

}  // namespace mub
