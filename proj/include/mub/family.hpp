#pragma once

#include <vector>

#include "mub/linalg.hpp"

namespace mub {

// Decomposes n = p^k with p prime. Returns false if n is not a prime power.
bool is_prime_power(int n, int* p_out = nullptr, int* k_out = nullptr);

// A family of m orthonormal bases of C^n. The sampling pool is the
// disjoint union of the bases: pool index k <-> (basis k / n, vector k % n).
class MubFamily {
 public:
  explicit MubFamily(std::vector<std::vector<std::vector<cplx>>> bases);

  int dimension() const { return n_; }
  int basis_count() const { return m_; }
  int pool_size() const { return m_ * n_; }

  const std::vector<std::vector<std::vector<cplx>>>& bases() const { return bases_; }
  const std::vector<cplx>& vector_at(int basis, int index) const;
  const std::vector<cplx>& pool_vector(int k) const { return vector_at(k / n_, k % n_); }

  // New family keeping only the first `m` bases.
  MubFamily truncated(int m) const;

  bool operator==(const MubFamily&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<std::vector<cplx>>> bases_;
};

// The n+1 bases for n = 2 (eigenbases of the three Pauli matrices) or for
// an odd prime power n = p^k (standard basis plus the quadratic-phase
// bases v_{a,b}(x) = q^{-1/2} exp(2*pi*i*tr(a*x^2 + b*x)/p)).
MubFamily construct_complete_mubs(int n);

struct UnbiasedReport {
  double within_defect;  // max |<v_i,v_j> - delta_ij| inside one basis
  double cross_defect;   // max | |<v_i,v_j>| - n^{-1/2} | across bases
  bool pass;
};

// Measures every pairwise inner product in the family.
UnbiasedReport verify_unbiased(const MubFamily& fam, double tol);

// Largest cross-basis inner-product modulus; 0 for a single basis.
double coherence(const MubFamily& fam);

}  // namespace mub
