#include "hopfo/matrix.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hopfo;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng,
                     int sparsity = 0) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> val(-4, 4);
  std::uniform_int_distribution<int> keep(0, sparsity);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) == 0) m.set(i, j, val(rng));
  return m;
}

const std::vector<Field>& fields() {
  static const std::vector<Field> fs{Field::prime(2), Field::prime(3), Field::prime(5),
                                     Field::prime(7), Field::rationals()};
  return fs;
}

}  // namespace

TEST(Field, PrimeCheck) {
  EXPECT_THROW(Field::prime(4), ValidationError);
  EXPECT_THROW(Field::prime(1), ValidationError);
  EXPECT_EQ(Field::prime(7).characteristic(), 7u);
  EXPECT_EQ(Field::rationals().to_string(), "Q");
}

TEST(Field, ScalarArithmetic) {
  Field f = Field::prime(3);
  EXPECT_EQ(Scalar(f, 2).inverse(), Scalar(f, 2));
  EXPECT_EQ(Scalar(f, -1), Scalar(f, 2));
  Field q = Field::rationals();
  Scalar h = parse_scalar(q, "1/2");
  EXPECT_EQ((h + h), Scalar::one(q));
  EXPECT_EQ(parse_scalar(q, "-6/4").to_string(), "-3/2");
  EXPECT_THROW(Scalar(f, 0).inverse(), Error);
  EXPECT_THROW(Scalar(f, 1) + Scalar(q, 1), DimensionError);
}

TEST(Rref, Examples) {
  Field f5 = Field::prime(5);
  auto r = rref(Matrix::identity(f5, 3));
  EXPECT_TRUE(r.reduced.is_identity());
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));

  auto z = rref(Matrix(f5, 2, 3));
  EXPECT_TRUE(z.reduced.is_zero());
  EXPECT_TRUE(z.pivots.empty());

  Field f3 = Field::prime(3);
  auto s = rref(Matrix(f3, {{2, 1}}));
  EXPECT_EQ(s.reduced, Matrix(f3, {{1, 2}}));
  EXPECT_EQ(s.pivots, std::vector<std::size_t>{0});
}

TEST(Kernel, Examples) {
  Field f3 = Field::prime(3);
  EXPECT_EQ(kernel(Matrix(f3, 2, 3)).dim(), 3u);
  EXPECT_EQ(kernel(Matrix::identity(f3, 4)).dim(), 0u);
  // J3 sends e_i to e_{i+1}; its kernel is spanned by the last basis vector.
  Matrix j3(f3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  Subspace k = kernel(j3);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.basis_vector(0), Matrix::unit_vector(f3, 3, 2));
}

TEST(Solve, Examples) {
  Field f3 = Field::prime(3);
  auto x = solve(Matrix(f3, {{2}}), Matrix(f3, {{1}}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, Matrix(f3, {{2}}));
  Matrix b(f3, {{1}, {2}});
  EXPECT_EQ(*solve(Matrix::identity(f3, 2), b), b);
  EXPECT_FALSE(solve(Matrix(f3, {{0}}), Matrix(f3, {{1}})));
  EXPECT_THROW(solve(Matrix::identity(f3, 2), Matrix(f3, 3, 1)), DimensionError);
}

TEST(Kronecker, Examples) {
  Field f = Field::prime(7);
  EXPECT_TRUE(kronecker(Matrix::identity(f, 2), Matrix::identity(f, 3)).is_identity());
  std::mt19937_64 rng(1);
  Matrix a = random_matrix(f, 2, 3, rng);
  EXPECT_EQ(kronecker(a, Matrix(f, {{1}})), a);
  Matrix k = kronecker(a, random_matrix(f, 4, 5, rng));
  EXPECT_EQ(k.rows(), 8u);
  EXPECT_EQ(k.cols(), 15u);
  EXPECT_THROW(kronecker(a, Matrix::identity(Field::rationals(), 2)), DimensionError);
}

TEST(QuotientMap, Examples) {
  Field f = Field::prime(3);
  auto q0 = quotient_map(3, Subspace(f, 3));
  EXPECT_TRUE(q0.proj.is_identity());
  EXPECT_TRUE(q0.section.is_identity());
  auto q1 = quotient_map(3, Subspace::from_columns(Matrix::unit_vector(f, 3, 0)));
  EXPECT_EQ(q1.proj.rows(), 2u);
  EXPECT_TRUE((q1.proj * q1.section).is_identity());
  EXPECT_TRUE((q1.proj * Matrix::unit_vector(f, 3, 0)).is_zero());
  auto q3 = quotient_map(3, Subspace::full(f, 3));
  EXPECT_EQ(q3.proj.rows(), 0u);
}

// Rank-nullity, rref idempotence and pivot count, on 200 random matrices per
// field; ranks are cross-checked against the reference eliminator over GF(p).
TEST(ExactlaProperties, RankNullity) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(0, 7);
  for (const auto& f : fields()) {
    for (int t = 0; t < 200; ++t) {
      Matrix m = random_matrix(f, dim(rng), dim(rng), rng, t % 3);
      auto r = rref(m);
      EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
      EXPECT_EQ(rank(m), r.pivots.size());
      EXPECT_EQ(kernel(m).dim() + rank(m), m.cols());
      Matrix kb = kernel(m).basis_columns();
      if (kb.cols() > 0) EXPECT_TRUE((m * kb).is_zero());
      if (f.is_prime()) {
        EXPECT_EQ(rank(m), oracle::rank(oracle::from(m), f.characteristic()));
      }
    }
  }
}

TEST(ExactlaProperties, SolveIsExact) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (const auto& f : fields()) {
    for (int t = 0; t < 200; ++t) {
      Matrix m = random_matrix(f, dim(rng), dim(rng), rng, t % 2);
      Matrix b = random_matrix(f, m.rows(), 1, rng);
      auto x = solve(m, b);
      if (x) EXPECT_EQ(m * *x, b);
      // Consistency is decided by rank([m | b]) = rank(m).
      EXPECT_EQ(x.has_value(), rank(hstack({m, b})) == rank(m));
    }
  }
}

TEST(ExactlaProperties, KroneckerFunctorial) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (const auto& f : fields()) {
    for (int t = 0; t < 50; ++t) {
      std::size_t r1 = dim(rng), k1 = dim(rng), c1 = dim(rng);
      std::size_t r2 = dim(rng), k2 = dim(rng), c2 = dim(rng);
      Matrix a = random_matrix(f, r1, k1, rng), c = random_matrix(f, k1, c1, rng);
      Matrix b = random_matrix(f, r2, k2, rng), d = random_matrix(f, k2, c2, rng);
      EXPECT_EQ(kronecker(a * c, b * d), kronecker(a, b) * kronecker(c, d));
    }
  }
}

TEST(ExactlaProperties, SubspaceCanonical) {
  std::mt19937_64 rng(3);
  for (const auto& f : fields()) {
    for (int t = 0; t < 100; ++t) {
      Matrix g = random_matrix(f, 3, 6, rng);
      // Random invertible recombination of the generators spans the same space.
      Matrix mix = random_matrix(f, 3, 3, rng);
      if (rank(mix) < 3) continue;
      Subspace a = Subspace::from_rows(g);
      Subspace b = Subspace::from_rows(mix * g);
      EXPECT_EQ(a, b);
      EXPECT_EQ(a.basis(), b.basis());
      EXPECT_TRUE(a.contains(b));
    }
  }
}

TEST(ExactlaProperties, InverseRoundTrip) {
  std::mt19937_64 rng(5);
  for (const auto& f : fields()) {
    for (int t = 0; t < 100; ++t) {
      Matrix m = random_matrix(f, 4, 4, rng);
      auto inv = inverse(m);
      EXPECT_EQ(inv.has_value(), rank(m) == 4);
      if (inv) EXPECT_TRUE((m * *inv).is_identity());
    }
  }
}

TEST(Rationals, NoOverflowInKroneckerChains) {
  Field q = Field::rationals();
  Matrix a(q, {{1000000007, 3}, {5, 999999937}});
  Matrix p = a;
  for (int i = 0; i < 4; ++i) p = kronecker(p, a);
  EXPECT_EQ(p.at(0, 0).rational(), Rational(boost::multiprecision::pow(BigInt(1000000007), 5)));
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_TRUE((a * *inv).is_identity());
}
