#include "spinbound/spin_ops.hpp"

#include <cmath>
#include <cstdint>

namespace spinbound {

namespace {

constexpr Complex kI{0.0, 1.0};

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Strides for converting between (local digits on support, digits on the
/// rest) and a global basis index.
struct EmbedIndexer {
  std::vector<std::int64_t> site_stride;   // stride of each support site
  std::int64_t dim_local;

  EmbedIndexer(const std::vector<int>& support, int d, int num_sites) {
    site_stride.reserve(support.size());
    for (int s : support) site_stride.push_back(ipow(d, num_sites - 1 - s));
    dim_local = ipow(d, static_cast<int>(support.size()));
  }

  /// Global index obtained from `base` (a global index whose support digits
  /// are all zero) by writing the local digits of `loc`.
  std::int64_t compose(std::int64_t base, std::int64_t loc, int d) const {
    std::int64_t idx = base;
    for (int a = static_cast<int>(site_stride.size()) - 1; a >= 0; --a) {
      idx += (loc % d) * site_stride[a];
      loc /= d;
    }
    return idx;
  }

  /// Splits a global index into (local digits value, base with zeroed
  /// support digits).
  std::pair<std::int64_t, std::int64_t> split(std::int64_t global, int d) const {
    std::int64_t loc = 0;
    std::int64_t base = global;
    for (std::size_t a = 0; a < site_stride.size(); ++a) {
      const std::int64_t digit = (global / site_stride[a]) % d;
      loc = loc * d + digit;
      base -= digit * site_stride[a];
    }
    return {loc, base};
  }
};

void check_support(const std::vector<int>& support, int local_dim,
                   int num_sites, Eigen::Index op_dim) {
  if (local_dim < 2) throw ValidationError("embed: local_dim must be >= 2");
  int prev = -1;
  for (int s : support) {
    if (s < 0 || s >= num_sites)
      throw ValidationError("embed: support site out of range");
    if (s <= prev)
      throw ValidationError("embed: support must be sorted strictly ascending");
    prev = s;
  }
  if (op_dim != ipow(local_dim, static_cast<int>(support.size())))
    throw ValidationError("embed: operator dimension does not match support");
}

template <typename Mat>
Mat apply_embedded_impl(const Mat& op, const std::vector<int>& support,
                        int d, int num_sites, const Mat& m) {
  check_support(support, d, num_sites, op.rows());
  const std::int64_t dim = ipow(d, num_sites);
  if (m.rows() != dim)
    throw ValidationError("apply_embedded: row count != d^num_sites");
  const EmbedIndexer ix(support, d, num_sites);
  Mat out = Mat::Zero(m.rows(), m.cols());
  for (std::int64_t row = 0; row < dim; ++row) {
    const auto [lr, base] = ix.split(row, d);
    for (std::int64_t lc = 0; lc < ix.dim_local; ++lc) {
      const auto v = op(lr, lc);
      if (v == typename Mat::Scalar(0)) continue;
      out.row(row) += v * m.row(ix.compose(base, lc, d));
    }
  }
  return out;
}

}  // namespace

Matrix pauli(int which) {
  Matrix m(2, 2);
  switch (which) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw ValidationError("pauli: index must be 0..3");
  }
  return m;
}

Matrix spin_x(int d) {
  if (d == 2) return 0.5 * pauli(1);
  if (d == 3) {
    Matrix m(3, 3);
    const double r = 1.0 / std::sqrt(2.0);
    m << 0, r, 0, r, 0, r, 0, r, 0;
    return m;
  }
  throw ValidationError("spin_x: only local dimensions 2 and 3 are supported");
}

Matrix spin_y(int d) {
  if (d == 2) return 0.5 * pauli(2);
  if (d == 3) {
    Matrix m(3, 3);
    const Complex r = kI / std::sqrt(2.0);
    m << 0, -r, 0, r, 0, -r, 0, r, 0;
    return m;
  }
  throw ValidationError("spin_y: only local dimensions 2 and 3 are supported");
}

Matrix spin_z(int d) {
  if (d == 2) return 0.5 * pauli(3);
  if (d == 3) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = 1;
    m(2, 2) = -1;
    return m;
  }
  throw ValidationError("spin_z: only local dimensions 2 and 3 are supported");
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed_operator(const Matrix& op, const std::vector<int>& support,
                      int d, int num_sites) {
  check_support(support, d, num_sites, op.rows());
  const std::int64_t dim = ipow(d, num_sites);
  const EmbedIndexer ix(support, d, num_sites);
  Matrix out = Matrix::Zero(dim, dim);
  for (std::int64_t row = 0; row < dim; ++row) {
    const auto [lr, base] = ix.split(row, d);
    for (std::int64_t lc = 0; lc < ix.dim_local; ++lc)
      out(row, ix.compose(base, lc, d)) = op(lr, lc);
  }
  return out;
}

RealMatrix apply_embedded(const RealMatrix& op, const std::vector<int>& support,
                          int d, int num_sites, const RealMatrix& m) {
  return apply_embedded_impl(op, support, d, num_sites, m);
}

Matrix apply_embedded(const Matrix& op, const std::vector<int>& support,
                      int d, int num_sites, const Matrix& m) {
  return apply_embedded_impl(op, support, d, num_sites, m);
}

Vector product_state(const Vector& state_a, const std::vector<int>& sites_a,
                     const Vector& state_b, const std::vector<int>& sites_b,
                     int d, int num_sites) {
  if (static_cast<int>(sites_a.size() + sites_b.size()) != num_sites)
    throw ValidationError("product_state: site sets must cover the lattice");
  const std::int64_t dim = ipow(d, num_sites);
  const EmbedIndexer ix_a(sites_a, d, num_sites);
  const EmbedIndexer ix_b(sites_b, d, num_sites);
  if (state_a.size() != ix_a.dim_local || state_b.size() != ix_b.dim_local)
    throw ValidationError("product_state: state dimension mismatch");
  Vector out(dim);
  for (std::int64_t g = 0; g < dim; ++g) {
    const auto [la, rest_a] = ix_a.split(g, d);
    const auto [lb, rest_b] = ix_b.split(g, d);
    (void)rest_a;
    (void)rest_b;
    out(g) = state_a(la) * state_b(lb);
  }
  return out;
}

}  // namespace spinbound
