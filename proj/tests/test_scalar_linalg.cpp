#include <doctest.h>

#include "cellar/linalg.hpp"

using namespace cellar;

TEST_CASE("rational scalars are exact") {
  Field q{0};
  Scalar a = Scalar::from_string(q, "2/3");
  Scalar b = Scalar::from_string(q, "-1/6");
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b).str() == "-4");
  CHECK((a - a).is_zero());
  CHECK(a.inverse().str() == "3/2");
  CHECK_THROWS_AS(Scalar::from_string(q, "nonsense"), InputError);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), InputError);
}

TEST_CASE("prime field scalars reduce to canonical residues") {
  Field f3{3};
  Scalar x = Scalar::from_string(f3, "5");
  CHECK(x.str() == "2");
  CHECK((x + x).str() == "1");
  CHECK((x * x).str() == "1");
  CHECK(x.inverse().str() == "2");
  Scalar half = Scalar::from_string(f3, "1/2");  // 2^{-1} = 2 mod 3
  CHECK(half.str() == "2");
  CHECK_THROWS_AS(Scalar::from_string(f3, "1/3"), InputError);
}

TEST_CASE("odd prime detection") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(7));
  CHECK(is_odd_prime(97));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(1));
}

namespace {

Mat from_rows(const Field& f, const std::vector<std::vector<long>>& rows) {
  Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Scalar(f, rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("rank, determinant, inverse and kernel") {
  Field q{0};
  Mat m = from_rows(q, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  CHECK(rank(m) == 3);
  CHECK(det(m).str() == "4");
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((m * *inv) == Mat::identity(q, 3));

  Mat s = from_rows(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(s) == 2);
  CHECK(det(s).is_zero());
  CHECK_FALSE(inverse(s).has_value());
  auto ker = kernel_basis(s);
  REQUIRE(ker.size() == 1);
  CHECK(s.apply(ker[0]) == Vec(3, Scalar::zero(q)));

  auto sol = solve(m, {Scalar(q, 4), Scalar(q, 4), Scalar(q, 4)});
  REQUIRE(sol.has_value());
  for (const auto& x : *sol) CHECK(x.str() == "1");
}

TEST_CASE("row spaces reduce incrementally") {
  Field q{0};
  RowSpace s(q, 3);
  CHECK(s.insert({Scalar(q, 1), Scalar(q, 1), Scalar(q, 0)}));
  CHECK(s.insert({Scalar(q, 0), Scalar(q, 1), Scalar(q, 1)}));
  CHECK_FALSE(s.insert({Scalar(q, 1), Scalar(q, 2), Scalar(q, 1)}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({Scalar(q, 2), Scalar(q, 3), Scalar(q, 1)}));
  CHECK_FALSE(s.contains({Scalar(q, 1), Scalar(q, 0), Scalar(q, 0)}));
  auto c = s.coordinates({Scalar(q, 2), Scalar(q, 3), Scalar(q, 1)});
  CHECK(c.has_value());
  CHECK_FALSE(s.coordinates({Scalar(q, 1), Scalar(q, 0), Scalar(q, 0)}).has_value());
}

TEST_CASE("linear algebra over F_3") {
  Field f3{3};
  Mat m = from_rows(f3, {{1, 2}, {2, 2}});
  CHECK(det(m).str() == "1");
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((m * *inv) == Mat::identity(f3, 2));
}
