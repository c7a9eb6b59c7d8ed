#pragma once

#include <string>
#include <vector>

namespace mub {

// A closed path of length l: a word w(0..l) of positive labels with
// w(0) = w(l). Paths are considered up to relabeling; the canonical
// representative uses restricted-growth labels (w(0) = 1 and each new
// vertex takes the smallest unused label).
struct ClosedPath {
  std::vector<int> word;

  ClosedPath() = default;
  explicit ClosedPath(std::vector<int> w);

  int length() const { return static_cast<int>(word.size()) - 1; }
  int vertex_count() const;
  std::vector<int> labels() const;  // distinct labels, ascending
  bool is_canonical() const;
  std::string str() const;  // dash-separated, e.g. "1-2-1"

  bool operator==(const ClosedPath&) const = default;
};

ClosedPath canonical_form(const ClosedPath& path);

// All canonical closed paths of the given length, in lexicographic
// order of their words. Capped at length 8.
std::vector<ClosedPath> enumerate_paths(int length);

// Reduced means: the single loop (l = v = 1), or every vertex is visited
// at least twice and no step repeats a vertex, both read cyclically over
// positions 0..l-1.
bool is_reduced(const ClosedPath& path);

// Which reduction wins when both kinds apply somewhere. Membership in
// Gamma and the reduction counts do not depend on the choice; the
// alternative order exists to let tests assert exactly that.
enum class ReductionOrder { kCase1First, kCase2First };

struct ReductionStep {
  int kind;      // 1: dropped one of two equal consecutive labels
                 // 2: spliced out a vertex visited exactly once
  int position;  // index in the word at the time of the step
};

struct ReductionTrace {
  ClosedPath input;  // canonicalized
  std::vector<ReductionStep> steps;
  int case1_steps = 0;
  int case2_steps = 0;
  ClosedPath reduced;  // canonicalized
};

// Applies reductions at the smallest applicable position until the path
// is reduced. Each step shortens the path by one; a case-2 step also
// removes one vertex.
ReductionTrace reduce(const ClosedPath& path, ReductionOrder order = ReductionOrder::kCase1First);

// True iff the path reduces all the way to the single loop (the
// double-tree class Gamma).
bool in_gamma(const ClosedPath& path);

unsigned long long binomial(int n, int k);

// Number of Gamma paths of the given length with v vertices:
// C(l, v-1) * C(l-1, v-1) / v.
unsigned long long narayana(int length, int v);

unsigned long long catalan(int length);

// Counts enumerated Gamma paths with the given vertex count; should
// equal narayana(length, v).
unsigned long long gamma_count(int length, int v);

}  // namespace mub
