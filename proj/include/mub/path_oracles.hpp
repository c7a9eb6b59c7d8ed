#pragma once

#include <utility>
#include <vector>

#include "mub/family.hpp"
#include "mub/linalg.hpp"
#include "mub/paths.hpp"

namespace mub {

// Assignment of pool vectors to path vertices: pool_index_by_label[z - 1]
// is the flat pool index given to vertex label z (-1 when unassigned).
struct PathAssignment {
  std::vector<int> pool_index_by_label;

  int at(int label) const;
};

struct AssignmentStats {
  int distinct_vectors;  // N: distinct pool vectors over the vertices
  int crossing_steps;    // C: steps whose endpoints got different vectors
};

AssignmentStats assignment_stats(const ClosedPath& path, const PathAssignment& assignment);

// Product of inner products along the path:
// prod_i <s(w(i)), s(w(i+1))>.
cplx omega(const ClosedPath& path, const PathAssignment& assignment, const MubFamily& fam);

struct WValue {
  cplx value;         // exact average of omega over all assignments
  bool gamma_member;  // path reduces to the single loop
  int vertex_count;
  double predicted;  // n^{1-v}, exact for Gamma members
  double bound;      // n^{1-v} (1/m + 1/n), the non-member scale
};

// Exact W by exhaustive averaging over all (mn)^v assignments.
// Throws when (mn)^v exceeds the cost cap.
WValue w_exact(const ClosedPath& path, const MubFamily& fam, double cost_cap = 1e7);

// Exact moment by the orbit decomposition:
// (1/p) sum over canonical paths of p!/(p-v)! * W. Requires length <= 6.
double expectation_exact(int length, int p, const MubFamily& fam);

// Independent route: average of (1/p) tr(G^length) over all (mn)^p
// sample maps.
double exhaustive_moment(int length, int p, const MubFamily& fam, double cost_cap = 1e6);
double exhaustive_variance(int length, int p, const MubFamily& fam, double cost_cap = 1e6);

// Joins two closed paths sharing a vertex into one closed path of length
// l1 + l2: the first is walked forward, the second backward. Both are
// rotated to start at their smallest common label first. Throws when the
// vertex sets are disjoint.
ClosedPath join_paths(const ClosedPath& g1, const ClosedPath& g2);

// Exact average of omega_{g1}(s) * conj(omega_{g2}(s)) over assignments
// of the union vertex set. Labels shared between the two words denote
// shared vertices.
cplx w_pair_exact(const ClosedPath& g1, const ClosedPath& g2, const MubFamily& fam,
                  double cost_cap = 1e7);

// Canonical representatives of ordered path pairs of equal length under
// simultaneous relabeling: the first word is canonical and new labels in
// the second appear in first-use order.
std::vector<std::pair<ClosedPath, ClosedPath>> enumerate_path_pairs(int length);

// Variance of the length-th moment over sample maps, computed both by
// the pair-class sum and by direct exhaustive averaging; the two routes
// must agree to 1e-10. Requires length <= 3.
double variance_exact(int length, int p, const MubFamily& fam);

}  // namespace mub
