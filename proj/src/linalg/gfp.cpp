#include "mindeg/gfp.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "mindeg/errors.hpp"

namespace mindeg::gfp {

namespace {

Residue reduce(long long v, Residue p)
{
  long long r = v % static_cast<long long>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

/// Advances a strictly increasing k-subset of 0..n-1 to its lexicographic
/// successor. Returns false after the last one.
bool next_combination(std::vector<std::size_t> &c, std::size_t n)
{
  std::size_t const k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j)
        c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> complement(std::vector<std::size_t> const &idx, std::size_t n)
{
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < idx.size() && idx[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

} // namespace

Residue inverse(Residue a, Residue p)
{
  if (a % p == 0)
    throw DomainError("zero has no inverse mod " + std::to_string(p));
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r) {
    long long q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  return reduce(t, p);
}

MatrixGFp::MatrixGFp(Residue p, std::size_t rows, std::size_t cols)
  : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0)
{
  if (p < 2)
    throw DomainError("modulus must be a prime >= 2");
}

MatrixGFp MatrixGFp::from_rows(Residue p, std::vector<std::vector<long long>> const &rows)
{
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  MatrixGFp m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, rows[r][c]);
  }
  return m;
}

MatrixGFp MatrixGFp::identity(Residue p, std::size_t n)
{
  MatrixGFp m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, 1);
  return m;
}

void MatrixGFp::set(std::size_t r, std::size_t c, long long v)
{
  a_[r * cols_ + c] = reduce(v, p_);
}

MatrixGFp MatrixGFp::submatrix(std::span<std::size_t const> rows,
                               std::span<std::size_t const> cols) const
{
  MatrixGFp out(p_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.a_[i * cols.size() + j] = (*this)(rows[i], cols[j]);
  return out;
}

MatrixGFp MatrixGFp::permute_rows(std::span<std::size_t const> order) const
{
  std::vector<std::size_t> all(cols_);
  std::iota(all.begin(), all.end(), 0);
  return submatrix(order, all);
}

MatrixGFp MatrixGFp::rref() const
{
  MatrixGFp m = *this;
  auto at = [&](std::size_t r, std::size_t c) -> Residue & { return m.a_[r * cols_ + c]; };
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    std::size_t r = pivot_row;
    while (r < rows_ && at(r, c) == 0)
      ++r;
    if (r == rows_)
      continue;
    for (std::size_t k = 0; k < cols_; ++k)
      std::swap(at(r, k), at(pivot_row, k));
    Residue s = inverse(at(pivot_row, c), p_);
    for (std::size_t k = 0; k < cols_; ++k)
      at(pivot_row, k) = static_cast<Residue>(std::uint64_t{at(pivot_row, k)} * s % p_);
    for (std::size_t rr = 0; rr < rows_; ++rr) {
      if (rr == pivot_row || at(rr, c) == 0)
        continue;
      Residue f = at(rr, c);
      for (std::size_t k = 0; k < cols_; ++k)
        at(rr, k) = static_cast<Residue>((at(rr, k) + std::uint64_t{p_ - f} * at(pivot_row, k)) % p_);
    }
    ++pivot_row;
  }
  m.rows_ = pivot_row;
  m.a_.resize(pivot_row * cols_);
  return m;
}

Residue det(MatrixGFp const &m)
{
  if (!m.is_square())
    throw DomainError("determinant of a non-square matrix");
  std::size_t const n = m.rows();
  Residue const p = m.modulus();
  std::vector<Residue> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a[r * n + c] = m(r, c);
  std::uint64_t d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r * n + c] == 0)
      ++r;
    if (r == n)
      return 0;
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k)
        std::swap(a[r * n + k], a[c * n + k]);
      d = (p - d) % p;
    }
    d = d * a[c * n + c] % p;
    Residue inv = inverse(a[c * n + c], p);
    for (std::size_t rr = c + 1; rr < n; ++rr) {
      std::uint64_t f = std::uint64_t{a[rr * n + c]} * inv % p;
      if (!f)
        continue;
      for (std::size_t k = c; k < n; ++k)
        a[rr * n + k] = static_cast<Residue>((a[rr * n + k] + (p - f) * a[c * n + k]) % p);
    }
  }
  return static_cast<Residue>(d);
}

Residue det_laplace(MatrixGFp const &m, std::span<std::size_t const> cols)
{
  if (!m.is_square())
    throw DomainError("determinant of a non-square matrix");
  std::size_t const n = m.rows();
  std::size_t const k = cols.size();
  if (k < 1 || k >= n)
    throw DomainError("Laplace column list must have 1 <= k < n entries");
  for (std::size_t i = 0; i < k; ++i)
    if (cols[i] >= n || (i && cols[i] <= cols[i - 1]))
      throw DomainError("Laplace column list must be strictly increasing and in range");

  Residue const p = m.modulus();
  auto minor_det = [&](MatrixGFp const &s) -> Residue {
    if (s.rows() == 1)
      return s(0, 0);
    std::size_t const first[] = {0};
    return det_laplace(s, first);
  };

  std::vector<std::size_t> col_list(cols.begin(), cols.end());
  auto const col_rest = complement(col_list, n);
  std::size_t const col_sum = std::accumulate(col_list.begin(), col_list.end(), std::size_t{0});

  std::vector<std::size_t> r(k);
  std::iota(r.begin(), r.end(), 0);
  std::uint64_t total = 0;
  do {
    std::size_t const row_sum = std::accumulate(r.begin(), r.end(), std::size_t{0});
    auto const row_rest = complement(r, n);
    std::uint64_t term = std::uint64_t{minor_det(m.submatrix(r, col_list))} *
                         minor_det(m.submatrix(row_rest, col_rest)) % p;
    if ((row_sum + col_sum) % 2)
      term = (p - term) % p;
    total = (total + term) % p;
  } while (next_combination(r, n));
  return static_cast<Residue>(total);
}

std::vector<std::size_t> block_row_permutation(MatrixGFp const &m, std::size_t top)
{
  if (!m.is_square())
    throw DomainError("block row permutation needs a square matrix");
  std::size_t const n = m.rows();
  if (top < 1 || top >= n)
    throw DomainError("block size must satisfy 1 <= m <= n-1");
  if (det(m) == 0)
    throw DomainError("block row permutation needs an invertible matrix");

  std::vector<std::size_t> left(top), right(n - top);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), top);

  std::vector<std::size_t> rows(top);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    if (det(m.submatrix(rows, left)) == 0)
      continue;
    auto rest = complement(rows, n);
    if (det(m.submatrix(rest, right)) == 0)
      continue;
    rows.insert(rows.end(), rest.begin(), rest.end());
    return rows;
  } while (next_combination(rows, n));
  throw InvariantViolation("no row permutation gives invertible diagonal blocks for an "
                           "invertible matrix");
}

// ---- subspaces ----

SubspaceGFp::SubspaceGFp(Residue p, std::size_t ambient_dim, std::vector<Vector> const &spanning)
  : p_(p), n_(ambient_dim)
{
  MatrixGFp m(p, spanning.size(), ambient_dim);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].size() != ambient_dim)
      throw DomainError("vector length does not match ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c)
      m.set(r, c, spanning[r][c]);
  }
  basis_ = m.rref();
}

SubspaceGFp SubspaceGFp::zero(Residue p, std::size_t ambient_dim)
{
  return SubspaceGFp(p, ambient_dim, {});
}

SubspaceGFp SubspaceGFp::full(Residue p, std::size_t ambient_dim)
{
  std::vector<Vector> e(ambient_dim, Vector(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i)
    e[i][i] = 1;
  return SubspaceGFp(p, ambient_dim, e);
}

std::vector<Vector> SubspaceGFp::basis_vectors() const
{
  std::vector<Vector> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r)
    out.push_back(basis_.row_vector(r));
  return out;
}

bool SubspaceGFp::contains(Vector const &v) const
{
  auto vs = basis_vectors();
  vs.push_back(v);
  return SubspaceGFp(p_, n_, vs).dim() == dim();
}

bool SubspaceGFp::is_subspace_of(SubspaceGFp const &other) const
{
  return sum(*this, other).dim() == other.dim();
}

SubspaceGFp sum(SubspaceGFp const &a, SubspaceGFp const &b)
{
  if (a.p_ != b.p_ || a.n_ != b.n_)
    throw DomainError("subspaces live in different ambient spaces");
  auto vs = a.basis_vectors();
  auto more = b.basis_vectors();
  vs.insert(vs.end(), more.begin(), more.end());
  return SubspaceGFp(a.p_, a.n_, vs);
}

SubspaceGFp intersect(SubspaceGFp const &a, SubspaceGFp const &b)
{
  if (a.p_ != b.p_ || a.n_ != b.n_)
    throw DomainError("subspaces live in different ambient spaces");
  // Zassenhaus: rows [u | u] and [w | 0]; the echelon rows with zero left
  // half span the intersection.
  std::size_t const n = a.n_;
  MatrixGFp z(a.p_, a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      z.set(r, c, a.basis_(r, c));
      z.set(r, n + c, a.basis_(r, c));
    }
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      z.set(a.dim() + r, c, b.basis_(r, c));
  auto e = z.rref();
  std::vector<Vector> meet;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c)
      left_zero = e(r, c) == 0;
    if (left_zero)
      meet.emplace_back(e.row(r).begin() + static_cast<std::ptrdiff_t>(n), e.row(r).end());
  }
  return SubspaceGFp(a.p_, n, meet);
}

std::vector<Vector> recover_coordinate_basis(std::vector<SubspaceGFp> const &subspaces)
{
  if (subspaces.empty())
    throw DomainError("recover_coordinate_basis needs at least one subspace");
  Residue const p = subspaces.front().modulus();
  std::size_t const d = subspaces.front().ambient_dim();
  for (auto const &v : subspaces)
    if (v.modulus() != p || v.ambient_dim() != d)
      throw DomainError("subspaces live in different ambient spaces");

  std::size_t const n = subspaces.size();
  auto meet_except = [&](std::size_t skip) {
    auto acc = SubspaceGFp::full(p, d);
    for (std::size_t j = 0; j < n; ++j)
      if (j != skip)
        acc = intersect(acc, subspaces[j]);
    return acc;
  };

  if (meet_except(n).dim() != 0)
    throw DomainError("hypothesis 1 fails: the subspaces intersect nontrivially");
  std::vector<SubspaceGFp> lines;
  for (std::size_t i = 0; i < n; ++i) {
    auto co = meet_except(i);
    if (co.dim() == 0)
      throw DomainError("hypothesis 2 fails: the intersection of all subspaces except #" +
                        std::to_string(i) + " is zero");
    lines.push_back(std::move(co));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (subspaces[i].dim() + 1 != d)
      throw DomainError("hypothesis 3 fails: subspace #" + std::to_string(i) + " has dimension " +
                        std::to_string(subspaces[i].dim()) + ", expected " +
                        std::to_string(d - 1));

  if (n != d)
    throw InvariantViolation("hyperplane family size differs from the ambient dimension");
  std::vector<Vector> out;
  for (auto const &line : lines) {
    if (line.dim() != 1)
      throw InvariantViolation("co-intersection is not a line");
    out.push_back(line.basis().row_vector(0));
  }
  return out;
}

} // namespace mindeg::gfp
