#include "mub/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace mub {

ClosedPath::ClosedPath(std::vector<int> w) : word(std::move(w)) {
  if (word.size() < 2) throw std::invalid_argument("path: word too short");
  if (word.front() != word.back()) throw std::invalid_argument("path: word not closed");
  for (int label : word)
    if (label < 1) throw std::invalid_argument("path: labels must be positive");
}

int ClosedPath::vertex_count() const { return static_cast<int>(labels().size()); }

std::vector<int> ClosedPath::labels() const {
  std::vector<int> out(word.begin(), word.end() - 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ClosedPath::is_canonical() const { return canonical_form(*this).word == word; }

std::string ClosedPath::str() const {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(word[i]);
  }
  return s;
}

ClosedPath canonical_form(const ClosedPath& path) {
  std::vector<int> relabel(*std::max_element(path.word.begin(), path.word.end()) + 1, 0);
  int next = 0;
  std::vector<int> out;
  out.reserve(path.word.size());
  for (int label : path.word) {
    if (relabel[label] == 0) relabel[label] = ++next;
    out.push_back(relabel[label]);
  }
  return ClosedPath(std::move(out));
}

namespace {

void enumerate_rec(std::vector<int>& word, int pos, int length, int max_label,
                   std::vector<ClosedPath>& out) {
  if (pos == length) {
    word[length] = word[0];
    out.emplace_back(word);
    return;
  }
  for (int label = 1; label <= max_label + 1; ++label) {
    word[pos] = label;
    enumerate_rec(word, pos + 1, length, std::max(max_label, label), out);
  }
}

}  // namespace

std::vector<ClosedPath> enumerate_paths(int length) {
  if (length < 1) throw std::invalid_argument("enumerate_paths: length must be positive");
  if (length > 8) throw std::invalid_argument("enumerate_paths: length capped at 8");
  std::vector<ClosedPath> out;
  std::vector<int> word(length + 1);
  word[0] = 1;
  enumerate_rec(word, 1, length, 1, out);
  return out;
}

namespace {

// Visit counts over the cyclic positions 0..l-1.
std::vector<int> visit_counts(const std::vector<int>& word) {
  const int max_label = *std::max_element(word.begin(), word.end());
  std::vector<int> counts(max_label + 1, 0);
  for (std::size_t i = 0; i + 1 < word.size(); ++i) ++counts[word[i]];
  return counts;
}

bool word_is_reduced(const std::vector<int>& word) {
  const int length = static_cast<int>(word.size()) - 1;
  if (length == 1) return true;
  for (int u = 0; u < length; ++u)
    if (word[u] == word[u + 1]) return false;
  const std::vector<int> counts = visit_counts(word);
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (counts[word[i]] < 2) return false;
  return true;
}

int first_case1_position(const std::vector<int>& word) {
  const int length = static_cast<int>(word.size()) - 1;
  for (int u = 0; u < length; ++u)
    if (word[u] == word[u + 1]) return u;
  return -1;
}

int first_case2_position(const std::vector<int>& word) {
  const std::vector<int> counts = visit_counts(word);
  const int length = static_cast<int>(word.size()) - 1;
  for (int u = 0; u < length; ++u)
    if (counts[word[u]] == 1) return u;
  return -1;
}

void apply_case1(std::vector<int>& word, int u) { word.erase(word.begin() + u); }

void apply_case2(std::vector<int>& word, int u) {
  if (u > 0) {
    word.erase(word.begin() + u);
    return;
  }
  // The lone visit sits at the base point: drop both copies of it and
  // close the word at the next vertex instead.
  std::vector<int> next(word.begin() + 1, word.end() - 1);
  next.push_back(next.front());
  word = std::move(next);
}

}  // namespace

bool is_reduced(const ClosedPath& path) { return word_is_reduced(path.word); }

ReductionTrace reduce(const ClosedPath& path, ReductionOrder order) {
  ReductionTrace trace;
  trace.input = canonical_form(path);
  std::vector<int> word = trace.input.word;
  while (!word_is_reduced(word)) {
    const int c1 = first_case1_position(word);
    const int c2 = first_case2_position(word);
    const bool use_case1 =
        (order == ReductionOrder::kCase1First) ? (c1 >= 0) : (c1 >= 0 && c2 < 0);
    if (use_case1) {
      apply_case1(word, c1);
      trace.steps.push_back({1, c1});
      ++trace.case1_steps;
    } else if (c2 >= 0) {
      apply_case2(word, c2);
      trace.steps.push_back({2, c2});
      ++trace.case2_steps;
    } else {
      throw std::logic_error("reduce: no applicable reduction on a non-reduced path");
    }
  }
  trace.reduced = canonical_form(ClosedPath(std::move(word)));
  return trace;
}

bool in_gamma(const ClosedPath& path) {
  const ReductionTrace trace = reduce(path);
  return trace.reduced.length() == 1;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long result = 1;
  for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

unsigned long long narayana(int length, int v) {
  if (v < 1 || v > length) return 0;
  const unsigned long long product = binomial(length, v - 1) * binomial(length - 1, v - 1);
  if (product % v != 0) throw std::logic_error("narayana: non-integer value");
  return product / v;
}

unsigned long long catalan(int length) {
  if (length < 0) return 0;
  return binomial(2 * length, length) / (length + 1);
}

unsigned long long gamma_count(int length, int v) {
  unsigned long long count = 0;
  for (const ClosedPath& path : enumerate_paths(length))
    if (path.vertex_count() == v && in_gamma(path)) ++count;
  return count;
}

}  // namespace mub
