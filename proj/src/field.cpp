#include "mub/field.hpp"

#include <stdexcept>
#include <string>

namespace mub {
namespace {

// Polynomials over F_p, coefficients lowest degree first, no trailing zeros.
using Poly = std::vector<int>;

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f divided by monic g.
Poly poly_mod(Poly f, const Poly& g, int p) {
  const int dg = poly_degree(g);
  int df = poly_degree(f);
  while (df >= dg) {
    const int c = f[df];
    if (c != 0) {
      for (int i = 0; i <= dg; ++i) {
        f[df - dg + i] = ((f[df - dg + i] - c * g[i]) % p + p * p) % p;
      }
    }
    --df;
    while (df >= 0 && f[df] == 0) --df;
  }
  f.resize(dg > 0 ? dg : 1, 0);
  if (f.empty()) f.push_back(0);
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

bool is_zero(const Poly& f) { return poly_degree(f) < 0; }

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Poly& f, int p, int k) {
  for (int d = 1; 2 * d <= k; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      long long t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> smallest_irreducible(int p, int k) {
  Poly f(k + 1, 0);
  f[k] = 1;
  // Odometer over (c0, ..., c_{k-1}) with c0 most significant, so the
  // first hit is the lexicographic minimum under low-to-high comparison.
  std::vector<int> c(k, 0);
  for (;;) {
    for (int i = 0; i < k; ++i) f[i] = c[i];
    if (is_irreducible(f, p, k)) return f;
    int pos = k - 1;
    while (pos >= 0 && c[pos] == p - 1) c[pos--] = 0;
    if (pos < 0) throw std::logic_error("no irreducible polynomial found");
    ++c[pos];
  }
}

FieldContext::FieldContext(int p, int k, int order_cap) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field: extension degree must be positive");
  if (p == 2 && k > 1) throw std::invalid_argument("field: characteristic-2 extensions unsupported");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > order_cap)
      throw std::invalid_argument("field: order " + std::to_string(q) + " exceeds cap " +
                                  std::to_string(order_cap));
  }
  q_ = static_cast<int>(q);
  modulus_ = smallest_irreducible(p, k);

  mul_table_.resize(static_cast<std::size_t>(q_) * q_);
  for (int a = 0; a < q_; ++a) {
    const Poly pa = coefficients(a);
    for (int b = 0; b <= a; ++b) {
      const Poly pb = coefficients(b);
      const Poly prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
      Poly padded(prod);
      padded.resize(k_, 0);
      const int e = element(padded);
      mul_table_[static_cast<std::size_t>(a) * q_ + b] = e;
      mul_table_[static_cast<std::size_t>(b) * q_ + a] = e;
    }
  }

  inv_table_.assign(q_, 0);
  for (int a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);
  for (int a = 1; a < q_; ++a)
    if (mul(a, inv_table_[a]) != 1) throw std::logic_error("field: inverse table inconsistent");

  trace_table_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    int frob = a;
    int acc = a;
    for (int i = 1; i < k_; ++i) {
      frob = pow(frob, p_);
      acc = add(acc, frob);
    }
    const std::vector<int> cs = coefficients(acc);
    for (int i = 1; i < k_; ++i)
      if (cs[i] != 0) throw std::logic_error("field: trace left the prime subfield");
    trace_table_[a] = cs[0];
  }
}

int FieldContext::add(int a, int b) const {
  int out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    const int da = a % p_, db = b % p_;
    out += ((da + db) % p_) * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

int FieldContext::neg(int a) const {
  int out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    mult *= p_;
    a /= p_;
  }
  return out;
}

int FieldContext::sub(int a, int b) const { return add(a, neg(b)); }

int FieldContext::inverse(int a) const {
  if (a == 0) throw std::invalid_argument("field: zero has no inverse");
  return inv_table_[a];
}

int FieldContext::pow(int a, long long e) const {
  if (e < 0) throw std::invalid_argument("field: negative exponent");
  int result = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<int> FieldContext::coefficients(int a) const {
  std::vector<int> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

int FieldContext::element(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != k_)
    throw std::invalid_argument("field: coefficient vector has wrong length");
  int a = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    const int c = coeffs[i];
    if (c < 0 || c >= p_) throw std::invalid_argument("field: coefficient out of range");
    a += c * mult;
    mult *= p_;
  }
  return a;
}

}  // namespace mub
