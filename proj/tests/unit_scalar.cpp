#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isopar/linalg.hpp"
#include "isopar/scalar.hpp"

using namespace isopar;

static mpq_class q(long n, long d) { return mpq_class(n, d); }

TEST_CASE("rational arithmetic and normalization") {
  Scalar a(q(2, 3)), b(q(1, 6));
  CHECK((a + b) == Scalar(q(5, 6)));
  CHECK((a - b) == Scalar(q(1, 2)));
  CHECK((a * b) == Scalar(q(1, 9)));
  CHECK((a / b) == Scalar(4));
  CHECK(Scalar(q(4, 6)).str() == "2/3");
  CHECK(Scalar(q(-5, 9)).str() == "-5/9");
  CHECK(Scalar(0).str() == "0");
  CHECK(Scalar(7).str() == "7");
  CHECK(Scalar(q(2, 3)).is_rational());
  CHECK(Scalar(3).inverse() == Scalar(q(1, 3)));
}

TEST_CASE("quadratic extension arithmetic") {
  Scalar s2 = Scalar::sqrt_of(2);
  Scalar one(1);
  CHECK(s2 * s2 == Scalar(2));
  CHECK((one + s2) * (one - s2) == Scalar(-1));
  // (1 + sqrt 2)^-1 = sqrt(2) - 1
  CHECK((one + s2).inverse() == s2 - one);
  CHECK((one + s2) * (one + s2).inverse() == one);
  Scalar x(q(3, 4), q(-2, 5), 2);
  CHECK(x * x.inverse() == one);
  CHECK(x.conj().conj() == x);
  CHECK((x * x.conj()).irr() == 0);  // norm is rational
  CHECK(s2.str() == "sqrt(2)");
  CHECK(Scalar(0, q(3, 4), 2).str() == "3/4*sqrt(2)");
  CHECK(Scalar(q(1, 2), q(3, 4), 2).str() == "1/2+3/4*sqrt(2)");
  CHECK(Scalar(q(1, 2), q(-3, 4), 2).str() == "1/2-3/4*sqrt(2)");
  CHECK(Scalar(q(1, 2), q(3, 4), 2).composite());
  CHECK(!s2.composite());
  CHECK((-s2).negative_leading());
  CHECK(!Scalar(q(1, 2), q(-3, 4), 2).negative_leading());
}

TEST_CASE("rational and extension scalars interoperate") {
  Scalar s3 = Scalar::sqrt_of(3);
  CHECK((Scalar(2) + s3).ext() == 3);
  CHECK((Scalar(0) * s3) == Scalar(0));
  // b == 0 collapses back to a usable rational that mixes with any extension
  Scalar collapsed = s3 - s3;
  CHECK(collapsed.is_zero());
  CHECK((collapsed + Scalar::sqrt_of(2)) == Scalar::sqrt_of(2));
}

TEST_CASE("distinct extensions refuse to mix") {
  Scalar s2 = Scalar::sqrt_of(2), s3 = Scalar::sqrt_of(3);
  CHECK_THROWS_AS(s2 + s3, Error);
  try {
    (void)(s2 * s3);
    FAIL("expected mixed_extension");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::mixed_extension);
  }
}

TEST_CASE("inverse square roots come out exact") {
  // 1/sqrt(1/2) = sqrt(2)
  CHECK(Scalar::inv_sqrt(q(1, 2)) == Scalar::sqrt_of(2));
  // 1/sqrt(2) = (1/2) sqrt(2)
  CHECK(Scalar::inv_sqrt(2) == Scalar(0, q(1, 2), 2));
  // perfect square stays rational
  CHECK(Scalar::inv_sqrt(q(9, 4)) == Scalar(q(2, 3)));
  CHECK(Scalar::inv_sqrt(q(9, 4)).is_rational());
  CHECK(Scalar::inv_sqrt(3) == Scalar(0, q(1, 3), 3));
  // sanity: s * s == 1/r
  Scalar s = Scalar::inv_sqrt(q(3, 5));
  CHECK(s * s == Scalar(q(5, 3)));
}

TEST_CASE("square-free part extraction") {
  mpz_class s;
  CHECK(Scalar::squarefree_part(12, s) == 3);
  CHECK(s == 2);
  CHECK(Scalar::squarefree_part(1, s) == 1);
  CHECK(s == 1);
  CHECK(Scalar::squarefree_part(50, s) == 2);
  CHECK(s == 5);
  CHECK(Scalar::squarefree_part(7, s) == 7);
  CHECK(s == 1);
}

TEST_CASE("complexified scalars") {
  CScalar i(Scalar(0), Scalar(1));
  CScalar one(Scalar(1));
  CHECK(i * i == -one);
  CHECK((one + i) * (one - i) == CScalar(Scalar(2)));
  CHECK((one + i) / (one - i) == i);
  CHECK(i.str() == "i");
}

TEST_CASE("exact linear algebra: rref, rank, kernel, solve") {
  // [[1,2,3],[4,5,6],[7,8,9]] has rank 2 and kernel span{(1,-2,1)}
  Mat<Scalar> m(3, 3);
  long vals[9] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (int i = 0; i < 9; ++i) m.a[i] = Scalar(vals[i]);
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Scalar(1));
  CHECK(ker[0][1] == Scalar(-2));
  CHECK(ker[0][2] == Scalar(1));

  // consistent solve: x + 2y = 5, 3x + 4y = 11  ->  x = 1, y = 2 (unique)
  Mat<Scalar> s(2, 2);
  s.at(0, 0) = Scalar(1);
  s.at(0, 1) = Scalar(2);
  s.at(1, 0) = Scalar(3);
  s.at(1, 1) = Scalar(4);
  auto sol = solve(s, {Scalar(5), Scalar(11)});
  REQUIRE(sol.has_value());
  CHECK(sol->second == 0);
  CHECK(sol->first[0] == Scalar(1));
  CHECK(sol->first[1] == Scalar(2));

  // inconsistent system has no solution
  Mat<Scalar> bad(2, 1);
  bad.at(0, 0) = Scalar(1);
  bad.at(1, 0) = Scalar(1);
  CHECK(!solve(bad, {Scalar(0), Scalar(1)}).has_value());

  // rank over an extension field: [[1, sqrt2],[sqrt2, 2]] is rank 1
  Mat<Scalar> e(2, 2);
  e.at(0, 0) = Scalar(1);
  e.at(0, 1) = Scalar::sqrt_of(2);
  e.at(1, 0) = Scalar::sqrt_of(2);
  e.at(1, 1) = Scalar(2);
  CHECK(rank(e) == 1);

  CHECK(Mat<Scalar>::identity(3) * m == m);
  CHECK((m.transpose().transpose()) == m);
}

TEST_CASE("complex kernel used by the pencil analysis") {
  // [[1, i],[-i, 1]] has rank 1 over C; kernel span{(-i, 1)}
  CScalar i(Scalar(0), Scalar(1));
  Mat<CScalar> m(2, 2);
  m.at(0, 0) = CScalar(Scalar(1));
  m.at(0, 1) = i;
  m.at(1, 0) = -i;
  m.at(1, 1) = CScalar(Scalar(1));
  CHECK(rank(m) == 1);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == -i);
  CHECK(ker[0][1] == CScalar(Scalar(1)));
}
