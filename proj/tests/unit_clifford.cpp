#include <random>

#include "doctest.h"
#include "isopar/clifford.hpp"
#include "isopar/error.hpp"

using namespace isopar;

namespace {

Mat<Scalar> direct_sum(const Mat<Scalar>& block, int copies) {
  Mat<Scalar> r(block.rows * copies, block.cols * copies);
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < block.rows; ++i)
      for (int j = 0; j < block.cols; ++j)
        r.at(c * block.rows + i, c * block.cols + j) = block.at(i, j);
  return r;
}

}  // namespace

TEST_CASE("irreducible module dimensions follow the period-8 table") {
  CHECK(delta(1) == 1);
  CHECK(delta(2) == 2);
  CHECK(delta(3) == 4);
  CHECK(delta(4) == 4);
  CHECK(delta(5) == 8);
  CHECK(delta(6) == 8);
  CHECK(delta(7) == 8);
  CHECK(delta(8) == 8);
  CHECK(delta(9) == 16);
  CHECK(delta(10) == 32);
  CHECK(delta(11) == 64);
  CHECK(delta(12) == 64);
  CHECK(delta(16) == 128);
  CHECK(delta(17) == 256);
  CHECK_THROWS_WITH_AS(delta(0), "delta requires m >= 1", Error);
  CHECK_THROWS_AS(delta(-3), Error);
}

TEST_CASE("smallest system is the exact two-by-two block pair") {
  const CliffordSystem sys = build_clifford_system(1, 1);
  CHECK(sys.m == 1);
  CHECK(sys.l == 1);
  REQUIRE(sys.P.size() == 2);
  Mat<Scalar> p0(2, 2), p1(2, 2);
  p0.at(0, 0) = Scalar(1);
  p0.at(1, 1) = Scalar(-1);
  p1.at(0, 1) = Scalar(1);
  p1.at(1, 0) = Scalar(1);
  CHECK(sys.P[0] == p0);
  CHECK(sys.P[1] == p1);
  CHECK(verify_clifford(sys).ok);
}

TEST_CASE("three copies of the smallest system keep the block pattern") {
  const CliffordSystem sys = build_clifford_system(1, 3);
  CHECK(sys.l == 3);
  REQUIRE(sys.P.size() == 2);
  for (int i = 0; i < 3; ++i) {
    CHECK(sys.P[0].at(i, i) == Scalar(1));
    CHECK(sys.P[0].at(3 + i, 3 + i) == Scalar(-1));
    CHECK(sys.P[1].at(i, 3 + i) == Scalar(1));
    CHECK(sys.P[1].at(3 + i, i) == Scalar(1));
  }
  CHECK(verify_clifford(sys).ok);
}

TEST_CASE("constructed systems satisfy every relation exactly") {
  const std::pair<int, int> cases[] = {{1, 1}, {1, 3}, {1, 4}, {2, 1}, {2, 2},
                                       {3, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 1},
                                       {7, 1}, {8, 1}, {9, 1}, {4, 2}, {2, 5}};
  for (const auto& [m, k] : cases) {
    CAPTURE(m);
    CAPTURE(k);
    const CliffordSystem sys = build_clifford_system(m, k);
    CHECK(sys.l == k * delta(m));
    CHECK(static_cast<int>(sys.P.size()) == m + 1);
    for (const auto& p : sys.P) {
      CHECK(p.rows == 2 * sys.l);
      CHECK(p.cols == 2 * sys.l);
      CHECK(trace(p).is_zero());
    }
    const CliffordReport rep = verify_clifford(sys);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
  }
}

TEST_CASE("entries of constructed systems are 0 or +-1") {
  const CliffordSystem sys = build_clifford_system(3, 2);
  for (const auto& p : sys.P)
    for (const auto& x : p.a)
      CHECK((x.is_zero() || x == Scalar(1) || x == Scalar(-1)));
}

TEST_CASE("verification localizes forced failures") {
  SUBCASE("replacing P_1 by -P_0 breaks exactly the (0,1) anticommutator") {
    CliffordSystem sys = build_clifford_system(2, 1);
    sys.P[1] = sys.P[0].scaled(Scalar(-1));
    const CliffordReport rep = verify_clifford(sys);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0] == "anticommute:(0,1)");
  }
  SUBCASE("perturbing an off-diagonal entry reports the symmetry break") {
    CliffordSystem sys = build_clifford_system(1, 2);
    sys.P[0].at(0, 1) = sys.P[0].at(0, 1) + Scalar(1);
    const CliffordReport rep = verify_clifford(sys);
    CHECK_FALSE(rep.ok);
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures[0] == "symmetric:0");
  }
  SUBCASE("perturbing a diagonal entry reports the orthogonality break") {
    CliffordSystem sys = build_clifford_system(1, 2);
    sys.P[1].at(0, 0) = Scalar(1);  // still symmetric, no longer squares to I
    const CliffordReport rep = verify_clifford(sys);
    CHECK_FALSE(rep.ok);
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures[0] == "square:1");
    for (const auto& f : rep.failures) CHECK(f != "symmetric:1");
  }
  SUBCASE("mismatched sizes are reported before any product is formed") {
    CliffordSystem sys = build_clifford_system(1, 1);
    sys.P.push_back(Mat<Scalar>::identity(4));
    const CliffordReport rep = verify_clifford(sys);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0] == "size:2");
  }
}

TEST_CASE("rational combinations square to the expected multiple of I") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (const auto& [m, k] : {std::pair<int, int>{2, 1}, {3, 2}, {4, 1}}) {
    const CliffordSystem sys = build_clifford_system(m, k);
    for (int trial = 0; trial < 3; ++trial) {
      Mat<Scalar> comb(2 * sys.l, 2 * sys.l);
      Scalar norm2(0);
      for (const auto& p : sys.P) {
        const Scalar c = Scalar(num(rng)) / Scalar(den(rng));
        comb = comb + p.scaled(c);
        norm2 += c * c;
      }
      CHECK(comb * comb == Mat<Scalar>::identity(2 * sys.l).scaled(norm2));
    }
  }
}

TEST_CASE("the built system is the direct sum of copies, re-indexed") {
  for (const auto& [m, k] :
       {std::pair<int, int>{1, 3}, {2, 2}, {3, 2}, {4, 2}}) {
    CAPTURE(m);
    CAPTURE(k);
    const CliffordSystem one = build_clifford_system(m, 1);
    const CliffordSystem built = build_clifford_system(m, k);
    const std::vector<int> perm = copies_permutation(m, k);
    REQUIRE(static_cast<int>(perm.size()) == 2 * built.l);
    std::vector<bool> hit(perm.size(), false);
    for (int v : perm) {
      REQUIRE(v >= 0);
      REQUIRE(v < static_cast<int>(perm.size()));
      CHECK_FALSE(hit[v]);
      hit[v] = true;
    }
    for (size_t i = 0; i < one.P.size(); ++i) {
      const Mat<Scalar> sum = direct_sum(one.P[i], k);
      bool all_match = true;
      for (int r = 0; r < sum.rows; ++r)
        for (int c = 0; c < sum.cols; ++c)
          all_match =
              all_match && built.P[i].at(perm[r], perm[c]) == sum.at(r, c);
      CHECK(all_match);
    }
  }
}

TEST_CASE("unsupported sizes and generator counts are rejected") {
  CHECK_THROWS_AS(build_clifford_system(0, 1), Error);
  CHECK_THROWS_AS(build_clifford_system(1, 0), Error);
  try {
    build_clifford_system(10, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::unsupported);
  }
  try {
    build_clifford_system(9, 3);  // 2l = 96
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::unsupported);
  }
  try {
    build_clifford_system(1, 33);  // 2l = 66
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::unsupported);
  }
  // 2l = 64 is exactly at the cap and must work.
  CHECK(verify_clifford(build_clifford_system(1, 32)).ok);
}
