#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mindeg::gfp {

using Residue = std::uint32_t;
using Vector = std::vector<Residue>;

Residue inverse(Residue a, Residue p);

/// Dense row-major matrix over GF(p). Entries are kept reduced mod p.
class MatrixGFp
{
public:
  MatrixGFp() = default;
  MatrixGFp(Residue p, std::size_t rows, std::size_t cols);
  /// Rows are reduced mod p; all rows must have equal length.
  static MatrixGFp from_rows(Residue p, std::vector<std::vector<long long>> const &rows);
  static MatrixGFp identity(Residue p, std::size_t n);

  Residue modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v);

  std::span<Residue const> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_}; }

  /// Keeps the listed rows and columns, in the order given.
  MatrixGFp submatrix(std::span<std::size_t const> rows, std::span<std::size_t const> cols) const;
  MatrixGFp permute_rows(std::span<std::size_t const> order) const;

  /// Reduced row-echelon form with zero rows dropped.
  MatrixGFp rref() const;
  std::size_t rank() const { return rref().rows(); }

  friend bool operator==(MatrixGFp const &, MatrixGFp const &) = default;

private:
  Residue p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Residue> a_;
};

/// Determinant by Gaussian elimination. Throws DomainError if not square.
Residue det(MatrixGFp const &m);

/// Determinant by Laplace expansion along the 0-based column list `cols`
/// (strictly increasing, 1 <= |cols| < n): the signed sum over every row
/// k-tuple r of det S(r, cols) * det S'(r, cols) with sign
/// (-1)^(|cols| + |r|), |x| being the index sum. Minors are expanded the same
/// way along their first column down to 1x1.
Residue det_laplace(MatrixGFp const &m, std::span<std::size_t const> cols);

/// A row order (new row i = old row perm[i]) under which the leading m x m
/// block and the trailing (n-m) x (n-m) block are both invertible. Row
/// subsets for the top block are tried in lexicographic order; the first
/// witness wins. Throws DomainError for singular input.
std::vector<std::size_t> block_row_permutation(MatrixGFp const &m, std::size_t top);

/// Subspace of GF(p)^n held as a canonical reduced echelon basis.
class SubspaceGFp
{
public:
  SubspaceGFp() = default;
  /// Span of the given vectors (each of length ambient_dim).
  SubspaceGFp(Residue p, std::size_t ambient_dim, std::vector<Vector> const &spanning);
  static SubspaceGFp zero(Residue p, std::size_t ambient_dim);
  static SubspaceGFp full(Residue p, std::size_t ambient_dim);

  Residue modulus() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  MatrixGFp const &basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(Vector const &v) const;
  bool is_subspace_of(SubspaceGFp const &other) const;

  friend SubspaceGFp intersect(SubspaceGFp const &a, SubspaceGFp const &b);
  friend SubspaceGFp sum(SubspaceGFp const &a, SubspaceGFp const &b);
  friend bool operator==(SubspaceGFp const &, SubspaceGFp const &) = default;

private:
  Residue p_ = 2;
  std::size_t n_ = 0;
  MatrixGFp basis_;
};

SubspaceGFp intersect(SubspaceGFp const &a, SubspaceGFp const &b);
SubspaceGFp sum(SubspaceGFp const &a, SubspaceGFp const &b);

/// Given hyperplanes V_1..V_n of V = GF(p)^d with trivial total intersection
/// and nonzero co-intersections, returns v_1..v_n (n == d) with v_i the
/// canonical generator of the line meeting all V_j, j != i; then
/// V_i = span{v_j : j != i}. Throws DomainError naming the failed hypothesis.
std::vector<Vector> recover_coordinate_basis(std::vector<SubspaceGFp> const &subspaces);

} // namespace mindeg::gfp
