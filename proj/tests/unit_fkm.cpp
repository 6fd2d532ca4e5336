#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "isopar/clifford.hpp"
#include "isopar/error.hpp"
#include "isopar/fkm.hpp"

using namespace isopar;

namespace {

// Rational vector nums[i] / den.
SVec rv(const std::vector<int>& nums, int den) {
  SVec v;
  v.reserve(nums.size());
  for (int t : nums) v.push_back(Scalar(mpq_class(t, den)));
  return v;
}

const IdentityCheck* find_check(const IdentityReport& rep,
                                const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

Error::Kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return Error::Kind::internal;
}

}  // namespace

TEST_CASE("quartic families satisfy both defining identities") {
  struct Row {
    int m, k, two_l, m1, m2, phrase;
  };
  // operational m2 = l - m - 1; the headline phrase value is l - 1.
  const Row rows[] = {
      {1, 3, 6, 1, 1, 2},
      {2, 2, 8, 2, 1, 3},
      {1, 4, 8, 1, 2, 3},
      {3, 2, 16, 3, 4, 7},
  };
  for (const Row& r : rows) {
    CAPTURE(r.m);
    CAPTURE(r.k);
    CMData cm = build_fkm(build_clifford_system(r.m, r.k));
    CHECK(cm.g == 4);
    CHECK(cm.ring->n() == r.two_l);
    CHECK(cm.m1 == r.m1);
    CHECK(cm.m2 == r.m2);
    CHECK(cm.m2_phrase == r.phrase);
    CHECK(cm.multiplicity_mismatch);  // the two phrasings never agree here
    CHECK(cm.provenance == "clifford");
    MunznerReport mr = verify_munzner(cm.F, 4, cm.m1, cm.m2);
    CHECK(mr.ok());
  }
  // frozen term count for the smallest family
  CMData cm = build_fkm(build_clifford_system(1, 3));
  CHECK(cm.F.num_terms() == 24);
}

TEST_CASE("a corrupted quartic fails the gradient identity") {
  CMData cm = build_fkm(build_clifford_system(1, 3));
  Poly bad = cm.F + Poly::term(cm.ring, Monomial::var(cm.ring->n(), 0, 4),
                               Scalar(1));
  MunznerReport mr = verify_munzner(bad, 4, cm.m1, cm.m2);
  CHECK(!mr.ok());
  CHECK(!mr.grad_ok);
  CHECK(!mr.grad_residual.is_zero());
}

TEST_CASE("Hopf-degenerate families collapse to the negated norm form") {
  CMData cm = build_fkm(build_clifford_system(1, 1));
  CHECK(cm.m2 == -1);  // operational value goes negative
  CHECK(cm.multiplicity_mismatch);
  // F = -(x1^2 + x2^2)^2 exactly
  Poly n2 = Poly::zero(cm.ring);
  for (int i = 0; i < cm.ring->n(); ++i)
    n2.add_term(Monomial::var(cm.ring->n(), i, 2), Scalar(1));
  CHECK((cm.F + n2 * n2).is_zero());
  // the focal set is empty, so the deterministic search must exhaust
  CHECK(kind_of([&] { find_focal_point(cm); }) == Error::Kind::budget);
  CHECK(find_focal_points(cm, 50).empty());
}

TEST_CASE("focal search returns the frozen first hit with exact frames") {
  CMData cm = build_fkm(build_clifford_system(1, 3));
  FramedPoint fp = find_focal_point(cm);
  CHECK(fp.x == rv({1, 1, 0, 1, -1, 0}, 2));
  CHECK(fp.quadext_d == 0);
  REQUIRE(fp.n.size() == 2);
  REQUIRE(fp.X.size() == 1);
  REQUIRE(fp.Y.size() == 1);
  REQUIRE(fp.Z.size() == 1);
  CHECK(fp.n[0] == rv({1, 1, 0, -1, 1, 0}, 2));  // P_0 x
  CHECK(fp.n[1] == rv({1, -1, 0, 1, 1, 0}, 2));  // P_1 x
  CHECK(fp.X[0] == rv({0, 0, 0, 0, 0, 1}, 1));
  CHECK(fp.Y[0] == rv({0, 0, 1, 0, 0, 0}, 1));
  CHECK(fp.Z[0] == rv({1, -1, 0, -1, -1, 0}, 2));
}

TEST_CASE("search on an imported family is refused") {
  CMData cm = build_fkm(build_clifford_system(1, 3));
  cm.sys.reset();
  cm.provenance = "imported";
  CHECK_THROWS_WITH_AS(
      find_focal_point(cm),
      "focal search requires a family built from a Clifford system; frame "
      "imported points explicitly instead",
      Error);
}

TEST_CASE("(2,2) frames live in a single quadratic extension") {
  CMData cm = build_fkm(build_clifford_system(2, 2));
  FramedPoint fp = find_focal_point(cm);
  CHECK(fp.x == rv({1, 1, 0, 0, 0, 0, 1, 1}, 2));
  CHECK(fp.quadext_d == 2);
  REQUIRE(fp.n.size() == 3);
  REQUIRE(fp.X.size() == 1);
  REQUIRE(fp.Z.size() == 2);
  // shape operators exist and pass their internal structure checks
  std::vector<Mat<Scalar>> S = shape_operators(cm, fp);
  CHECK(S.size() == 3);
  // the cubic form vanishes identically on this family
  ExpansionData ed = ot_expand(cm, fp);
  for (const auto& qa : ed.q) CHECK(qa.is_zero());
  CHECK(verify_ot_identities(ed).ok());
}

TEST_CASE("shape operators at the frozen point") {
  CMData cm = build_fkm(build_clifford_system(1, 3));
  FramedPoint fp = find_focal_point(cm);
  std::vector<Mat<Scalar>> S = shape_operators(cm, fp);
  REQUIRE(S.size() == 2);
  Mat<Scalar> s0(3, 3), s1(3, 3);
  s0.at(0, 0) = Scalar(1);
  s0.at(1, 1) = Scalar(-1);
  s1.at(0, 1) = Scalar(-1);
  s1.at(1, 0) = Scalar(-1);
  CHECK(S[0] == s0);
  CHECK(S[1] == s1);
}

TEST_CASE("shape operators equal half the Hessian of the quadratic forms") {
  for (auto [m, k] : {std::pair{1, 3}, std::pair{3, 2}}) {
    CAPTURE(m);
    CMData cm = build_fkm(build_clifford_system(m, k));
    FramedPoint fp = find_focal_point(cm);
    std::vector<Mat<Scalar>> S = shape_operators(cm, fp);
    ExpansionData ed = ot_expand(cm, fp);
    const int T = ed.yring->n();
    const Monomial one = Monomial::one(T);
    for (size_t a = 0; a < S.size(); ++a)
      for (int i = 0; i < T; ++i)
        for (int j = 0; j < T; ++j) {
          Scalar h = ed.p[a].diff(i).diff(j).coeff(one);
          CHECK(S[a].at(i, j) == h / Scalar(2));
        }
  }
}

TEST_CASE("expansion matches the frozen quadratic and cubic forms") {
  CMData cm = build_fkm(build_clifford_system(1, 3));
  FramedPoint fp = find_focal_point(cm);
  ExpansionData ed = ot_expand(cm, fp);
  CHECK(ed.m1 == 1);
  CHECK(ed.m2 == 1);
  REQUIRE(ed.yring->n() == 3);  // u1, v1, z1
  Poly u = Poly::variable(ed.yring, 0);
  Poly v = Poly::variable(ed.yring, 1);
  Poly z = Poly::variable(ed.yring, 2);
  CHECK((ed.p[0] - (u * u - v * v)).is_zero());
  CHECK((ed.p[1] + u * v * Poly::constant(ed.yring, Scalar(2))).is_zero());
  CHECK((ed.q[0] + u * v * z * Poly::constant(ed.yring, Scalar(2))).is_zero());
  CHECK((ed.q[1] + (u * u - v * v) * z).is_zero());
}

TEST_CASE("the identity suite holds across families") {
  for (auto [m, k, count] : {std::tuple{1, 3, 8}, std::tuple{1, 4, 8},
                             std::tuple{3, 2, 26}}) {
    CAPTURE(m);
    CAPTURE(k);
    CMData cm = build_fkm(build_clifford_system(m, k));
    FramedPoint fp = find_focal_point(cm);
    ExpansionData ed = ot_expand(cm, fp);
    IdentityReport rep = verify_ot_identities(ed);
    CHECK(static_cast<int>(rep.checks.size()) == count);
    CHECK(rep.ok());
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("corrupting the cubic form fails exactly the touched identities") {
  CMData cm = build_fkm(build_clifford_system(1, 3));
  FramedPoint fp = find_focal_point(cm);
  ExpansionData ed = ot_expand(cm, fp);
  ed.q[0] = ed.q[0] + Poly::term(ed.yring, Monomial::var(3, 0, 3), Scalar(1));
  IdentityReport rep = verify_ot_identities(ed);
  CHECK(!rep.ok());
  REQUIRE(find_check(rep, "syzygy") != nullptr);
  CHECK(!find_check(rep, "syzygy")->ok);
  // identities that never touch q_0 still pass
  REQUIRE(find_check(rep, "grad-pair(1,1)") != nullptr);
  CHECK(find_check(rep, "grad-pair(1,1)")->ok);
  REQUIRE(find_check(rep, "q-grad(1,1)") != nullptr);
  CHECK(find_check(rep, "q-grad(1,1)")->ok);
}

TEST_CASE("the coefficient matrix is the frozen kernel field") {
  CMData cm = build_fkm(build_clifford_system(1, 3));
  FramedPoint fp = find_focal_point(cm);
  ExpansionData ed = ot_expand(cm, fp);
  RabData rab = extract_rab(ed);
  CHECK(rab.solution_space_dim == 0);
  CHECK(rab.z_only_ok);
  CHECK(rab.f_orthogonal);
  CHECK(rab.orthogonality_ok);
  REQUIRE(rab.r.size() == 2);
  Poly z = Poly::variable(ed.yring, 2);
  CHECK((rab.r[0][1] - z).is_zero());
  CHECK((rab.r[1][0] + z).is_zero());
  CHECK(rab.r[0][0].is_zero());
  CHECK(rab.f == Mat<Scalar>::identity(1));

  CliffordLikeReport cl = check_cliffordlike(ed, rab);
  CHECK(cl.identity_frame);
  CHECK(cl.relation1);
  CHECK(cl.relation2);
  CHECK(cl.relation3);
  CHECK(cl.ok());
}

TEST_CASE("the (3,2) kernel field carries the quaternionic table") {
  CMData cm = build_fkm(build_clifford_system(3, 2));
  FramedPoint fp = find_focal_point(cm);
  ExpansionData ed = ot_expand(cm, fp);
  RabData rab = extract_rab(ed);
  CHECK(rab.solution_space_dim == 0);
  CHECK(rab.z_only_ok);
  CHECK(rab.f_orthogonal);
  CHECK(rab.orthogonality_ok);
  CHECK(rab.f == Mat<Scalar>::identity(3));
  Poly z1 = Poly::variable(ed.yring, 8);
  Poly z2 = Poly::variable(ed.yring, 9);
  Poly z3 = Poly::variable(ed.yring, 10);
  CHECK((rab.r[0][1] - z1).is_zero());
  CHECK((rab.r[0][2] - z2).is_zero());
  CHECK((rab.r[0][3] - z3).is_zero());
  CHECK((rab.r[1][2] + z3).is_zero());
  CHECK((rab.r[1][3] - z2).is_zero());
  CHECK((rab.r[2][3] + z1).is_zero());
  // antisymmetry of the remaining block
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK((rab.r[a][b] + rab.r[b][a]).is_zero());

  CliffordLikeReport cl = check_cliffordlike(ed, rab);
  CHECK(cl.identity_frame);
  CHECK(cl.ok());
}

TEST_CASE("a vanishing cubic form leaves no usable kernel field") {
  CMData cm = build_fkm(build_clifford_system(2, 2));
  FramedPoint fp = find_focal_point(cm);
  ExpansionData ed = ot_expand(cm, fp);
  RabData rab = extract_rab(ed);
  for (const auto& row : rab.r)
    for (const auto& e : row) CHECK(e.is_zero());
  CHECK(rab.solution_space_dim == 1);  // a genuine homogeneous syzygy exists
  CHECK(rab.z_only_ok);                // vacuously
  CHECK(!rab.f_orthogonal);
  CHECK(!rab.orthogonality_ok);
  CHECK(kind_of([&] { check_cliffordlike(ed, rab); }) ==
        Error::Kind::precondition);
}

TEST_CASE("the common-kernel scan flags the special points") {
  CMData cm = build_fkm(build_clifford_system(3, 2));
  std::vector<FramedPoint> pts = find_focal_points(cm, 40);
  REQUIRE(pts.size() == 40);
  ConditionAReport rep = condition_a_scan(cm, pts);
  CHECK(rep.hits == 4);  // frozen for the deterministic enumeration order
  CHECK(rep.hits >= 1);
  for (const auto& p : rep.points) {
    CHECK((p.common_kernel_dim == 0 || p.common_kernel_dim == 3));
    CHECK(p.condition_a == (p.common_kernel_dim == cm.m1));
  }
}

TEST_CASE("pencil kernels follow the three-branch formula") {
  CMData cm = build_fkm(build_clifford_system(1, 4));
  FramedPoint fp = find_focal_point(cm);
  std::vector<Mat<Scalar>> S = shape_operators(cm, fp);

  SUBCASE("real coefficients") {
    std::vector<CScalar> lam{CScalar(Scalar(3)), CScalar(Scalar(4))};
    PencilStratum st = pencil_analyze(S, lam, cm.m1, cm.m2);
    CHECK(st.kernel_dim == 1);
    CHECK(st.r_lambda == 0);
    CHECK(!st.hyperquadric_member);
    CHECK(st.real_or_imaginary);
    CHECK(!st.mu_lambda.has_value());
    CHECK(st.branch_formula_ok);
  }
  SUBCASE("purely imaginary coefficients are projectively real") {
    std::vector<CScalar> lam{CScalar(Scalar(0), Scalar(2)),
                             CScalar(Scalar(0), Scalar(-1))};
    PencilStratum st = pencil_analyze(S, lam, cm.m1, cm.m2);
    CHECK(st.kernel_dim == 1);
    CHECK(!st.hyperquadric_member);
    CHECK(st.real_or_imaginary);
    CHECK(st.branch_formula_ok);
  }
  SUBCASE("hyperquadric members grow the kernel") {
    std::vector<CScalar> lam{CScalar(Scalar(1)),
                             CScalar(Scalar(0), Scalar(1))};
    PencilStratum st = pencil_analyze(S, lam, cm.m1, cm.m2);
    CHECK(st.hyperquadric_member);
    CHECK(!st.real_or_imaginary);
    CHECK(st.r_lambda == 0);
    CHECK(st.kernel_dim == cm.m1 + cm.m2 - st.r_lambda);  // 1 + 2 - 0
    REQUIRE(st.mu_lambda.has_value());
    CHECK(*st.mu_lambda == CScalar(Scalar(0), Scalar(1)));
    CHECK(st.branch_formula_ok);
  }
  SUBCASE("generic complex coefficients stay at the real dimension") {
    std::vector<CScalar> lam{CScalar(Scalar(1)),
                             CScalar(Scalar(1), Scalar(1))};
    PencilStratum st = pencil_analyze(S, lam, cm.m1, cm.m2);
    CHECK(st.kernel_dim == 1);
    CHECK(!st.hyperquadric_member);
    CHECK(!st.real_or_imaginary);
    CHECK(!st.mu_lambda.has_value());
    CHECK(st.branch_formula_ok);
  }
  SUBCASE("degenerate inputs are refused") {
    std::vector<CScalar> zero{CScalar(), CScalar()};
    CHECK(kind_of([&] { pencil_analyze(S, zero, cm.m1, cm.m2); }) ==
          Error::Kind::precondition);
    std::vector<CScalar> short_lam{CScalar(Scalar(1))};
    CHECK(kind_of([&] { pencil_analyze(S, short_lam, cm.m1, cm.m2); }) ==
          Error::Kind::precondition);
  }
}

TEST_CASE("codimension reports carry the frozen exact dimensions") {
  SUBCASE("(1,4): every bound holds") {
    CMData cm = build_fkm(build_clifford_system(1, 4));
    FramedPoint fp = find_focal_point(cm);
    ExpansionData ed = ot_expand(cm, fp);
    CodimReport cr = codim_report(ed, 0);
    REQUIRE(cr.dim_v.has_value());
    REQUIRE(cr.dim_j.has_value());
    CHECK(*cr.dim_v == 4);
    CHECK(*cr.dim_j == 1);
    CHECK(cr.lower_bound_ok);
    CHECK(cr.crucial_ok);
    CHECK(cr.cod2_ok);
    CHECK(cr.hyp_m2_ge_2);
    CHECK(cr.hyp_m2_ge_2m1_minus_1);
    CHECK(kind_of([&] { codim_report(ed, 1); }) == Error::Kind::precondition);
    CHECK(kind_of([&] { codim_report(ed, -1); }) == Error::Kind::precondition);
  }
  SUBCASE("(1,3): the upper bounds genuinely fail at m2 = 1") {
    CMData cm = build_fkm(build_clifford_system(1, 3));
    FramedPoint fp = find_focal_point(cm);
    ExpansionData ed = ot_expand(cm, fp);
    CodimReport cr = codim_report(ed, 0);
    REQUIRE(cr.dim_v.has_value());
    REQUIRE(cr.dim_j.has_value());
    CHECK(*cr.dim_v == 2);
    CHECK(*cr.dim_j == 1);
    CHECK(cr.lower_bound_ok);
    CHECK(!cr.crucial_ok);  // 1 > m1 + m2 + k - 2 = 0
    CHECK(!cr.cod2_ok);     // 1 > dim V - 2 = 0
    CHECK(!cr.hyp_m2_ge_2);
    CHECK(cr.hyp_m2_ge_2m1_minus_1);
  }
}

TEST_CASE("imported quartics frame and reproduce the structured path") {
  CMData cm = build_fkm(build_clifford_system(1, 3));
  FramedPoint fp = find_focal_point(cm);

  CMData imp = cm;
  imp.sys.reset();
  imp.provenance = "imported";

  FramedPoint fp2 = frame_imported_point(imp, fp.x);
  CHECK(fp2.x == fp.x);
  CHECK(fp2.n == fp.n);
  CHECK(fp2.X == fp.X);
  CHECK(fp2.Y == fp.Y);
  CHECK(fp2.Z == fp.Z);
  CHECK(fp2.quadext_d == fp.quadext_d);

  std::vector<Mat<Scalar>> Sa = shape_operators(cm, fp);
  std::vector<Mat<Scalar>> Sb = shape_operators(imp, fp2);
  REQUIRE(Sa.size() == Sb.size());
  for (size_t a = 0; a < Sa.size(); ++a) CHECK(Sa[a] == Sb[a]);

  ExpansionData ed = ot_expand(imp, fp2);
  CHECK(verify_ot_identities(ed).ok());

  SUBCASE("non-unit and non-focal imports are refused") {
    SVec twice = fp.x;
    for (auto& c : twice) c = c * Scalar(2);
    CHECK(kind_of([&] { frame_imported_point(imp, twice); }) ==
          Error::Kind::precondition);
    SVec e1(cm.ring->n(), Scalar(0));
    e1[0] = Scalar(1);  // unit, but F(e1) = -1 != 1
    CHECK(kind_of([&] { frame_imported_point(imp, e1); }) ==
          Error::Kind::precondition);
  }
}
