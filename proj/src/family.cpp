#include "mub/family.hpp"

#include <cblas.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mub/field.hpp"

namespace mub {

bool is_prime_power(int n, int* p_out, int* k_out) {
  if (n < 2) return false;
  int p = n;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  int rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

MubFamily::MubFamily(std::vector<std::vector<std::vector<cplx>>> bases)
    : bases_(std::move(bases)) {
  m_ = static_cast<int>(bases_.size());
  if (m_ == 0) throw std::invalid_argument("family: no bases");
  n_ = static_cast<int>(bases_[0].size());
  if (n_ == 0) throw std::invalid_argument("family: empty basis");
  if (m_ > n_ + 1) throw std::invalid_argument("family: more than n+1 bases");
  for (const auto& basis : bases_) {
    if (static_cast<int>(basis.size()) != n_)
      throw std::invalid_argument("family: basis has wrong vector count");
    for (const auto& v : basis)
      if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("family: vector has wrong dimension");
  }
}

const std::vector<cplx>& MubFamily::vector_at(int basis, int index) const {
  if (basis < 0 || basis >= m_ || index < 0 || index >= n_)
    throw std::out_of_range("family: vector index out of range");
  return bases_[basis][index];
}

MubFamily MubFamily::truncated(int m) const {
  if (m < 1 || m > m_) throw std::invalid_argument("family: bad truncation count");
  return MubFamily(std::vector<std::vector<std::vector<cplx>>>(bases_.begin(), bases_.begin() + m));
}

namespace {

MubFamily pauli_family() {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<std::vector<std::vector<cplx>>> bases = {
      {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}},
      {{{s, 0.0}, {s, 0.0}}, {{s, 0.0}, {-s, 0.0}}},
      {{{s, 0.0}, {0.0, s}}, {{s, 0.0}, {0.0, -s}}},
  };
  return MubFamily(std::move(bases));
}

}  // namespace

MubFamily construct_complete_mubs(int n) {
  if (n == 2) return pauli_family();
  int p = 0, k = 0;
  if (!is_prime_power(n, &p, &k))
    throw std::invalid_argument("mub: n = " + std::to_string(n) + " is not a prime power");
  if (p == 2)
    throw std::invalid_argument("mub: even prime powers beyond n = 2 are unsupported");

  const FieldContext field(p, k);
  const int q = n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));

  std::vector<cplx> root(p);
  for (int r = 0; r < p; ++r)
    root[r] = std::polar(1.0, 2.0 * std::numbers::pi * r / p);

  std::vector<std::vector<std::vector<cplx>>> bases;
  bases.reserve(q + 1);

  std::vector<std::vector<cplx>> standard(q, std::vector<cplx>(q, cplx(0.0, 0.0)));
  for (int x = 0; x < q; ++x) standard[x][x] = cplx(1.0, 0.0);
  bases.push_back(std::move(standard));

  std::vector<int> square(q);
  for (int x = 0; x < q; ++x) square[x] = field.mul(x, x);

  for (int a = 0; a < q; ++a) {
    std::vector<int> quad_phase(q);
    for (int x = 0; x < q; ++x) quad_phase[x] = field.trace(field.mul(a, square[x]));
    std::vector<std::vector<cplx>> basis(q, std::vector<cplx>(q));
    for (int b = 0; b < q; ++b) {
      std::vector<cplx>& v = basis[b];
      for (int x = 0; x < q; ++x) {
        const int phase = (quad_phase[x] + field.trace(field.mul(b, x))) % p;
        v[x] = scale * root[phase];
      }
    }
    bases.push_back(std::move(basis));
  }
  return MubFamily(std::move(bases));
}

namespace {

std::vector<std::vector<cplx>> flatten_bases(const MubFamily& fam) {
  const int n = fam.dimension();
  std::vector<std::vector<cplx>> flat(fam.basis_count());
  for (int b = 0; b < fam.basis_count(); ++b) {
    flat[b].resize(static_cast<std::size_t>(n) * n);
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < n; ++x) flat[b][static_cast<std::size_t>(v) * n + x] = fam.vector_at(b, v)[x];
  }
  return flat;
}

// out = a * b^H for n x n row-major blocks.
void cross_product(const cplx* a, const cplx* b, cplx* out, int n) {
  const cplx one(1.0, 0.0), zero(0.0, 0.0);
  cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasConjTrans, n, n, n, &one, a, n, b, n, &zero, out,
              n);
}

struct CrossExtremes {
  double min_sq;  // smallest squared modulus over all cross-basis pairs
  double max_sq;  // largest
};

CrossExtremes scan_cross(const MubFamily& fam, const std::vector<std::vector<cplx>>& flat) {
  const int n = fam.dimension();
  const int m = fam.basis_count();
  CrossExtremes ext{1.0, 0.0};
  std::vector<cplx> prod(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      cross_product(flat[i].data(), flat[j].data(), prod.data(), n);
      for (const cplx& z : prod) {
        const double sq = std::norm(z);
        if (sq < ext.min_sq) ext.min_sq = sq;
        if (sq > ext.max_sq) ext.max_sq = sq;
      }
    }
  }
  return ext;
}

}  // namespace

UnbiasedReport verify_unbiased(const MubFamily& fam, double tol) {
  const int n = fam.dimension();
  const int m = fam.basis_count();
  const std::vector<std::vector<cplx>> flat = flatten_bases(fam);

  double within = 0.0;
  std::vector<cplx> prod(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < m; ++b) {
    cross_product(flat[b].data(), flat[b].data(), prod.data(), n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const cplx target = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
        within = std::max(within, std::abs(prod[static_cast<std::size_t>(i) * n + j] - target));
      }
  }

  double cross = 0.0;
  if (m > 1) {
    const CrossExtremes ext = scan_cross(fam, flat);
    const double target = 1.0 / std::sqrt(static_cast<double>(n));
    cross = std::max(std::abs(std::sqrt(ext.max_sq) - target),
                     std::abs(std::sqrt(ext.min_sq) - target));
  }
  return {within, cross, within <= tol && cross <= tol};
}

double coherence(const MubFamily& fam) {
  if (fam.basis_count() < 2) return 0.0;
  const CrossExtremes ext = scan_cross(fam, flatten_bases(fam));
  return std::sqrt(ext.max_sq);
}

}  // namespace mub
