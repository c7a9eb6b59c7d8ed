#pragma once

#include <vector>

namespace mub {

bool is_prime(int p);

// Lexicographically smallest monic irreducible polynomial of degree k
// over F_p. Coefficients are returned lowest degree first (length k+1,
// last entry 1); the lexicographic comparison is on (c0, c1, ..., c_{k-1}).
std::vector<int> smallest_irreducible(int p, int k);

// GF(p^k) with tabulated arithmetic. Elements are indices in [0, q);
// index <-> coefficient vector via base-p digits, lowest degree first,
// so the prime subfield occupies indices [0, p).
class FieldContext {
 public:
  static constexpr int kDefaultOrderCap = 1024;

  FieldContext(int p, int k, int order_cap = kDefaultOrderCap);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const { return mul_table_[static_cast<std::size_t>(a) * q_ + b]; }
  int inverse(int a) const;  // a != 0
  int pow(int a, long long e) const;

  // tr(x) = x + x^p + ... + x^{p^{k-1}}, landing in the prime subfield.
  int trace(int a) const { return trace_table_[a]; }

  std::vector<int> coefficients(int a) const;
  int element(const std::vector<int>& coeffs) const;

 private:
  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<int> mul_table_;
  std::vector<int> inv_table_;
  std::vector<int> trace_table_;
};

}  // namespace mub
