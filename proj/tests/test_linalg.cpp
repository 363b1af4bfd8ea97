#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mindeg/errors.hpp"
#include "mindeg/gfp.hpp"
#include "support/oracles.hpp"

using namespace mindeg::gfp;

namespace {

std::vector<std::size_t> random_columns(std::mt19937_64 &rng, std::size_t n)
{
  std::uniform_int_distribution<std::size_t> k(1, n - 1);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k(rng));
  std::sort(all.begin(), all.end());
  return all;
}

Residue block_det(MatrixGFp const &m, std::size_t from, std::size_t len)
{
  std::vector<std::size_t> idx(len);
  std::iota(idx.begin(), idx.end(), from);
  return det(m.submatrix(idx, idx));
}

std::vector<Vector> rows_of(MatrixGFp const &m)
{
  std::vector<Vector> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(m.row_vector(r));
  return out;
}

std::size_t ipow(std::size_t p, std::size_t e)
{
  std::size_t r = 1;
  while (e--)
    r *= p;
  return r;
}

} // namespace

TEST_CASE("determinant")
{
  for (Residue p : {2u, 3u, 5u, 7u})
    for (std::size_t n = 1; n <= 5; ++n)
      CHECK(det(MatrixGFp::identity(p, n)) == 1);
  CHECK(det(MatrixGFp::from_rows(5, {{1, 2}, {3, 4}})) == 3);
  CHECK(det(MatrixGFp::from_rows(7, {{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})) == 0);
  CHECK_THROWS_AS(det(MatrixGFp(3, 2, 3)), mindeg::DomainError);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Residue p = std::array<Residue, 4>{2, 3, 5, 7}[t % 4];
    std::size_t n = 1 + t % 6;
    auto m = oracle::random_matrix(rng, p, n, n);
    REQUIRE(det(m) == oracle::det_leibniz(m));
  }
}

TEST_CASE("entries are reduced")
{
  auto m = MatrixGFp::from_rows(5, {{-1, 7}, {10, 26}});
  CHECK(m(0, 0) == 4);
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 1);
}

TEST_CASE("Laplace expansion examples")
{
  std::vector<std::size_t> c0{0};
  CHECK(det_laplace(MatrixGFp::identity(3, 4), c0) == 1);
  auto m = MatrixGFp::from_rows(5, {{1, 2}, {3, 4}});
  CHECK(det_laplace(m, c0) == 3);
  CHECK(det_laplace(m, c0) == det(m));

  std::vector<std::size_t> none, all{0, 1}, unsorted{1, 0}, out_of_range{0, 5};
  auto m3 = MatrixGFp::identity(5, 3);
  CHECK_THROWS_AS(det_laplace(m3, none), mindeg::DomainError);
  CHECK_THROWS_AS(det_laplace(m, all), mindeg::DomainError);
  CHECK_THROWS_AS(det_laplace(m3, unsorted), mindeg::DomainError);
  CHECK_THROWS_AS(det_laplace(m3, out_of_range), mindeg::DomainError);
}

TEST_CASE("Laplace expansion agrees with elimination on every 3x3 matrix over GF(2)")
{
  for (std::uint32_t bits = 0; bits < 512; ++bits) {
    MatrixGFp m(2, 3, 3);
    for (std::size_t i = 0; i < 9; ++i)
      m.set(i / 3, i % 3, bits >> i & 1);
    auto d = det(m);
    REQUIRE(d == oracle::det_leibniz(m));
    for (auto cols : {std::vector<std::size_t>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}})
      REQUIRE(det_laplace(m, cols) == d);
  }
}

TEST_CASE("Laplace expansion agrees with elimination on random matrices")
{
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    Residue p = std::array<Residue, 4>{2, 3, 5, 7}[t % 4];
    std::size_t n = 2 + t % 5;
    auto m = oracle::random_matrix(rng, p, n, n);
    auto cols = random_columns(rng, n);
    CAPTURE(t);
    REQUIRE(det_laplace(m, cols) == det(m));
  }
  for (int t = 0; t < 200; ++t) {
    auto m = oracle::random_matrix(rng, 7, 5, 5);
    REQUIRE(det_laplace(m, random_columns(rng, 5)) == det(m));
  }
}

TEST_CASE("block row permutation")
{
  auto swap = block_row_permutation(MatrixGFp::from_rows(2, {{0, 1}, {1, 0}}), 1);
  CHECK(swap == std::vector<std::size_t>{1, 0});

  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      std::vector<std::size_t> id(n);
      std::iota(id.begin(), id.end(), 0);
      CHECK(block_row_permutation(MatrixGFp::identity(3, n), m) == id);
    }

  CHECK_THROWS_AS(block_row_permutation(MatrixGFp::from_rows(3, {{1, 2}, {2, 1}}), 1),
                  mindeg::DomainError);
  CHECK_THROWS_AS(block_row_permutation(MatrixGFp::identity(3, 3), 0), mindeg::DomainError);
  CHECK_THROWS_AS(block_row_permutation(MatrixGFp::identity(3, 3), 3), mindeg::DomainError);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto mat = oracle::random_invertible(rng, 3, 6);
    auto perm = block_row_permutation(mat, 2);
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    auto pm = mat.permute_rows(perm);
    CHECK(oracle::det_leibniz(pm.submatrix(std::vector<std::size_t>{0, 1},
                                           std::vector<std::size_t>{0, 1})) != 0);
    CHECK(block_det(pm, 2, 4) != 0);
  }

  for (int t = 0; t < 500; ++t) {
    Residue p = std::array<Residue, 4>{2, 3, 5, 7}[t % 4];
    std::size_t n = 2 + t % 5;
    std::size_t m = 1 + t % (n - 1);
    auto mat = oracle::random_invertible(rng, p, n);
    auto pm = mat.permute_rows(block_row_permutation(mat, m));
    REQUIRE(block_det(pm, 0, m) != 0);
    REQUIRE(block_det(pm, m, n - m) != 0);
  }

  // singular input always errors
  for (int t = 0; t < 100; ++t) {
    auto mat = oracle::random_matrix(rng, 5, 4, 4);
    for (std::size_t c = 0; c < 4; ++c)
      mat.set(3, c, 2 * mat(0, c) + mat(1, c));
    CHECK_THROWS_AS(block_row_permutation(mat, 2), mindeg::DomainError);
  }
}

TEST_CASE("subspaces")
{
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Residue p = std::array<Residue, 3>{2, 3, 5}[t % 3];
    std::size_t d = 2 + t % 4;
    auto a = oracle::random_matrix(rng, p, 1 + t % d, d);
    auto b = oracle::random_matrix(rng, p, 1 + (t / 3) % d, d);
    SubspaceGFp u(p, d, rows_of(a)), w(p, d, rows_of(b));

    CHECK(intersect(u, u) == u);
    CHECK(u.contains(Vector(d, 0)));
    CHECK(ipow(p, u.dim()) == oracle::span_size(p, rows_of(a)));
    CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
    CHECK(intersect(u, w).is_subspace_of(u));
    CHECK(u.is_subspace_of(sum(u, w)));
    for (auto const &v : rows_of(a))
      CHECK(u.contains(v));

    // a second spanning set of the same space gives the same value
    auto mix = oracle::random_invertible(rng, p, a.rows());
    std::vector<Vector> other;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Vector v(d, 0);
      for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < d; ++k)
          v[k] = static_cast<Residue>((v[k] + mix(i, j) * a(j, k)) % p);
      other.push_back(v);
    }
    CHECK(SubspaceGFp(p, d, other) == u);
  }
  CHECK(SubspaceGFp::zero(3, 4).dim() == 0);
  CHECK(SubspaceGFp::full(3, 4).dim() == 4);
}

TEST_CASE("coordinate basis recovery")
{
  SubspaceGFp v1(2, 2, {{0, 1}}), v2(2, 2, {{1, 0}});
  auto basis = recover_coordinate_basis({v1, v2});
  CHECK(basis == std::vector<Vector>{{1, 0}, {0, 1}});

  std::vector<SubspaceGFp> coords;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Vector> span;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) {
        Vector e(3, 0);
        e[j] = 1;
        span.push_back(e);
      }
    coords.emplace_back(3, 3, span);
  }
  auto std_basis = recover_coordinate_basis(coords);
  for (std::size_t i = 0; i < 3; ++i) {
    Vector e(3, 0);
    e[i] = 1;
    CHECK(std_basis[i] == e);
  }

  // failing hypotheses
  CHECK_THROWS_AS(recover_coordinate_basis({v1, v1}), mindeg::DomainError);
  CHECK_THROWS_AS(recover_coordinate_basis({SubspaceGFp::zero(2, 2), v2}), mindeg::DomainError);
  SubspaceGFp plane(3, 3, {{1, 0, 0}, {0, 1, 0}});
  CHECK_THROWS_AS(recover_coordinate_basis({plane, plane, coords[0]}), mindeg::DomainError);
  CHECK_THROWS_AS(recover_coordinate_basis({}), mindeg::DomainError);
}

TEST_CASE("coordinate basis round trip on random bases")
{
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    Residue p = std::array<Residue, 3>{2, 3, 5}[t % 3];
    std::size_t d = 1 + t % 5;
    if (d == 1)
      d = 2;
    auto b = oracle::random_invertible(rng, p, d);
    std::vector<SubspaceGFp> hyper;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Vector> span;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i)
          span.push_back(b.row_vector(j));
      hyper.emplace_back(p, d, span);
    }
    auto got = recover_coordinate_basis(hyper);
    REQUIRE(got.size() == d);
    for (std::size_t i = 0; i < d; ++i) {
      CHECK(SubspaceGFp(p, d, {got[i]}) == SubspaceGFp(p, d, {b.row_vector(i)}));
      std::vector<Vector> others;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i)
          others.push_back(got[j]);
      CHECK(SubspaceGFp(p, d, others) == hyper[i]);
    }
  }
}

TEST_CASE("rank and echelon form")
{
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    Residue p = std::array<Residue, 3>{2, 3, 7}[t % 3];
    auto m = oracle::random_matrix(rng, p, 1 + t % 4, 1 + t % 5);
    CHECK(ipow(p, m.rank()) == oracle::span_size(p, rows_of(m)));
    CHECK(m.rref() == m.rref().rref());
  }
  CHECK(inverse(3, 7) == 5);
}
