#include "liex/conic.hpp"
#include "liex/linalg.hpp"

#include <doctest.h>

using namespace liex;

namespace {

MatrixQ diag3(int a, int b, int c) {
  MatrixQ m = MatrixQ::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

bool is_frame(const MatrixQ& p, const MatrixQ& g) {
  return MatrixQ(p * g * p.transpose()) == MatrixQ::Identity(3, 3);
}

}  // namespace

TEST_CASE("squarefree decomposition") {
  CHECK(squarefree_decompose(Integer(72)) == std::array<Integer, 2>{2, 6});
  CHECK(squarefree_decompose(Integer(-45)) == std::array<Integer, 2>{-5, 3});
  // 1000003^2 * 1000033
  const Integer big = Integer(1000003) * 1000003 * 1000033;
  CHECK(squarefree_decompose(big) == std::array<Integer, 2>{1000033, 1000003});
  const Integer semi = Integer(2147483647) * Integer(4294967291ULL);
  CHECK(squarefree_decompose(semi)[0] == semi);
}

TEST_CASE("Legendre equations") {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 7}, {-1, 2}, {5, -1}, {3, 13}, {-3, 7}, {6, 10}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto s = solve_legendre(a, b);
    REQUIRE(s);
    const auto& [x, y, z] = *s;
    CHECK(z * z == Rational(a) * x * x + Rational(b) * y * y);
    CHECK_FALSE((x == 0 && y == 0 && z == 0));
  }
  CHECK_FALSE(solve_legendre(-1, -1));
  CHECK_FALSE(solve_legendre(3, 5));  // 3 is not a square mod 5
}

TEST_CASE("isotropic vectors and binary representation") {
  const MatrixQ q = diag3(1, 1, -2);
  const auto v = isotropic_vector(q);
  REQUIRE(v);
  CHECK((v->transpose() * q * *v)(0, 0) == 0);
  CHECK_FALSE(isotropic_vector(diag3(1, 1, 1)));
  MatrixQ b = MatrixQ::Zero(2, 2);
  b(0, 0) = 1;
  b(1, 1) = 1;
  const auto w = represent_binary(b, Rational(13, 4));
  REQUIRE(w);
  CHECK((w->transpose() * b * *w)(0, 0) == Rational(13, 4));
  CHECK_FALSE(represent_binary(b, Rational(3)));
}

TEST_CASE("orthonormal frames") {
  MatrixQ u(3, 3);
  u << Rational(-1, 2), 2, Rational(4, 3), Rational(-3, 4), Rational(2, 3), 0, Rational(5, 2), 2, Rational(3, 2);
  const MatrixQ g = u * u.transpose();
  const auto p = orthonormal_frame(g);
  REQUIRE(p);
  CHECK(is_frame(*p, g));

  const auto two = orthonormal_frame(diag3(1, 2, 2));
  REQUIRE(two);
  CHECK(is_frame(*two, diag3(1, 2, 2)));
  // 3 is not a sum of two rational squares, and det 3 is not a square
  CHECK_FALSE(orthonormal_frame(diag3(1, 3, 3)));
  CHECK_FALSE(orthonormal_frame(diag3(1, 1, 3)));
  CHECK_FALSE(orthonormal_frame(diag3(1, -1, 1)));
}
