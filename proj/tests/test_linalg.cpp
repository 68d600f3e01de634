#include <doctest.h>

#include "support.hpp"

using namespace brisk;
using namespace brisk::testing;
using F = PrimeField;
using Q = RationalField;

TEST_CASE("rank of small matrices") {
  F f(7);
  CHECK(rank(Mat<F>(f, 2, 2)) == 0);
  auto r = rref(Mat<F>::identity(f, 3));
  CHECK(r.rank == 3);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(rank(mat(f, 2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("kernel") {
  F f(7);
  CHECK(kernel(Mat<F>::identity(f, 2)).dim() == 0);
  CHECK(kernel(Mat<F>(f, 2, 3)).dim() == 3);
  auto k = kernel(mat(f, 1, 3, {1, 1, 0}));
  CHECK(k.dim() == 2);
  CHECK(contains(k, vec(f, {1, 6, 0})));
}

TEST_CASE("solve") {
  F f(7);
  auto b = vec(f, {3, 4});
  CHECK(solve(Mat<F>::identity(f, 2), b) == std::optional<Vec<F>>(b));
  CHECK_FALSE(solve(Mat<F>(f, 2, 2), b).has_value());
  auto x = solve(mat(f, 1, 1, {2}), vec(f, {3}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 5);
}

TEST_CASE("solve over the rationals") {
  Q q;
  Mat<Q> m(q, 2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 3;
  auto x = solve(m, Vec<Q>{mpq_class(1), mpq_class(0)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == mpq_class(3, 5));
  CHECK((*x)[1] == mpq_class(-1, 5));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Mat<Q>::identity(q, 2));
}

TEST_CASE("subspace sum and intersection") {
  F f(7);
  auto a = span(f, 3, {vec(f, {1, 0, 0}), vec(f, {0, 1, 0})});
  auto b = span(f, 3, {vec(f, {0, 1, 0}), vec(f, {0, 0, 1})});
  CHECK(subspace_sum(a, a) == a);
  CHECK(intersection(a, a) == a);
  auto i = intersection(a, b);
  CHECK(i == span(f, 3, {vec(f, {0, 1, 0})}));
  auto l1 = span(f, 2, {vec(f, {1, 0})}), l2 = span(f, 2, {vec(f, {1, 1})});
  CHECK(subspace_sum(l1, l2).dim() == 2);
  CHECK(intersection(l1, l2).dim() == 0);
  CHECK_THROWS_AS(subspace_sum(a, l1), PreconditionError);
}

TEST_CASE("field arithmetic") {
  CHECK_THROWS_AS(F(9), InputError);
  F f(101);
  for (long long a = 1; a < 101; ++a) CHECK(f.mul(f.from_int(a), f.inv(f.from_int(a))) == 1);
  CHECK(f.from_int(-1) == 100);
  CHECK(FieldSpec::parse("prime:7") == FieldSpec::prime(7));
  CHECK(FieldSpec::parse("rational") == FieldSpec::rational());
}

TEST_CASE("property: rank, kernel and rref on random matrices over F_7") {
  F f(7);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> d(1, 8);
  for (int t = 0; t < 200; ++t) {
    auto m = random_mat(f, d(rng), d(rng), rng);
    if (t % 3 == 0) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(m.rows() - 1, j) = m(0, j);
    }
    CHECK(rank(m) == rank(transpose(m)));
    CHECK(kernel(m).dim() + rank(m) == m.cols());
    auto r = rref(m).matrix;
    CHECK(rref(r).matrix == r);
    for (const auto& v : kernel(m).vectors()) CHECK(is_zero(f, m * v));
  }
}

TEST_CASE("property: dimension formula for sums and intersections") {
  F f(7);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> d(0, 5);
  for (int t = 0; t < 200; ++t) {
    auto a = row_space(random_mat(f, d(rng), 5, rng));
    auto b = row_space(random_mat(f, d(rng), 5, rng));
    CHECK(subspace_sum(a, b).dim() + intersection(a, b).dim() == a.dim() + b.dim());
    for (const auto& v : intersection(a, b).vectors()) {
      CHECK(contains(a, v));
      CHECK(contains(b, v));
    }
  }
}
