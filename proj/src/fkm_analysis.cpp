// Structural analysis of the expansion data: the antisymmetric coefficient
// matrix r_ab, the Clifford-like relations after normalizing the kernel
// frame, the common-kernel scan, complex pencils of shape operators, and the
// exact codimension estimates.

#include <cstddef>
#include <utility>
#include <vector>

#include "isopar/error.hpp"
#include "isopar/fkm.hpp"
#include "isopar/ideal.hpp"
#include "isopar/linalg.hpp"
#include "isopar/poly.hpp"
#include "isopar/regseq.hpp"

namespace isopar {

namespace {

// Total degree of `m` over the half-open variable range [lo, hi).
int block_deg(const Monomial& m, int lo, int hi) {
  int d = 0;
  for (int i = lo; i < hi; ++i) d += m[i];
  return d;
}

// The terms of `p` whose (u, v, z) multidegree is exactly (du, dv, dz),
// where the ring is u_1..u_{m2} v_1..v_{m2} z_1..z_{m1}.
Poly block_part(const Poly& p, int m2, int du, int dv, int dz) {
  Poly out = Poly::zero(p.ring());
  for (const auto& [mon, c] : p.terms()) {
    if (block_deg(mon, 0, m2) != du) continue;
    if (block_deg(mon, m2, 2 * m2) != dv) continue;
    if (block_deg(mon, 2 * m2, 2 * m2 + p.ring()->n() - 2 * m2) != dz) continue;
    out.add_term(mon, c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- r_ab ----

RabData extract_rab(const ExpansionData& ed) {
  const int m1 = ed.m1;
  const int m2 = ed.m2;
  const int nv = ed.yring->n();  // 2*m2 + m1

  Poly syz = Poly::zero(ed.yring);
  for (std::size_t a = 0; a < ed.p.size(); ++a) syz = syz + ed.p[a] * ed.q[a];
  if (!syz.is_zero())
    fail(Error::Kind::precondition,
         "q is not a syzygy of p (sum p_a q_a != 0); the expansion data is "
         "inconsistent");

  SyzygySolution sol = syzygy_solve(ed.p, ed.q);

  RabData out;
  out.r = std::move(sol.r);
  out.solution_space_dim = sol.solution_space_dim;

  // r_{0b} must involve only the kernel variables z_1..z_{m1}.
  out.z_only_ok = true;
  for (int b = 1; b <= m1; ++b)
    for (const auto& [mon, c] : out.r[0][b].terms())
      if (block_deg(mon, 0, 2 * m2) != 0) out.z_only_ok = false;

  // f[p][b]: the coefficient of z_{p+1} in r_{0,b+1}.  Well defined even when
  // z_only_ok failed (the u, v coefficients are simply ignored there).
  out.f = Mat<Scalar>(m1, m1);
  for (int b = 0; b < m1; ++b)
    for (int p = 0; p < m1; ++p)
      out.f.at(p, b) = out.r[0][b + 1].coeff(Monomial::var(nv, 2 * m2 + p));
  out.f_orthogonal = (out.f.transpose() * out.f == Mat<Scalar>::identity(m1));

  // The top row of r is a unit vector field: sum_a r_{0a}^2 = sum_p z_p^2.
  Poly lhs = Poly::zero(ed.yring);
  for (int a = 0; a <= m1; ++a) lhs = lhs + out.r[0][a] * out.r[0][a];
  Poly rhs = Poly::zero(ed.yring);
  for (int p = 0; p < m1; ++p)
    rhs.add_term(Monomial::var(nv, 2 * m2 + p, 2), Scalar(1));
  out.orthogonality_ok = (lhs - rhs).is_zero();

  return out;
}

// -------------------------------------------------- Clifford-like form ----

CliffordLikeReport check_cliffordlike(const ExpansionData& ed,
                                      const RabData& rab) {
  const int m1 = ed.m1;
  const int m2 = ed.m2;
  const int nv = ed.yring->n();

  if (!rab.f_orthogonal)
    fail(Error::Kind::precondition,
         "normalizing the kernel frame requires an orthogonal coefficient "
         "matrix f");

  CliffordLikeReport rep;
  rep.frame_change = rab.f;
  rep.identity_frame = (rab.f == Mat<Scalar>::identity(m1));

  // Rotate the kernel block: z_p -> sum_b f[p][b] z_b, so that in the new
  // frame the top row of r becomes r_{0b} = z_b exactly.
  std::vector<Poly> images;
  images.reserve(nv);
  for (int i = 0; i < 2 * m2; ++i)
    images.push_back(Poly::variable(ed.yring, i));
  for (int p = 0; p < m1; ++p) {
    Poly img = Poly::zero(ed.yring);
    for (int b = 0; b < m1; ++b)
      img.add_term(Monomial::var(nv, 2 * m2 + b), rab.f.at(p, b));
    images.push_back(img);
  }

  Poly q0 = ed.q[0].substitute(images);
  std::vector<Poly> p;
  p.reserve(ed.p.size());
  for (const auto& pa : ed.p) p.push_back(pa.substitute(images));

  // Relation 1: coeff(q_0, u_al v_mu z_a) = coeff(p_a, u_al v_mu) for every
  // al, mu, a.  Since q_0 is trilinear, d q_0 / d z_a is exactly its
  // coefficient form on u x v, so compare it with the uv block of p_a.
  rep.relation1 = true;
  for (int a = 1; a <= m1; ++a) {
    Poly lhs = q0.diff(2 * m2 + (a - 1));
    Poly rhs = block_part(p[a], m2, 1, 1, 0);
    if (!(lhs - rhs).is_zero()) rep.relation1 = false;
  }

  // Relation 2: coeff(p_a, u_al z_c) = -coeff(p_c, u_al z_a); the diagonal
  // a = c forces those coefficients to vanish.  Relation 3 is the same with
  // v in place of u.
  rep.relation2 = true;
  rep.relation3 = true;
  for (int a = 1; a <= m1; ++a) {
    for (int c = 1; c <= m1; ++c) {
      for (int al = 0; al < m2; ++al) {
        Monomial uzc = Monomial::var(nv, al)
                           .mul(Monomial::var(nv, 2 * m2 + (c - 1)));
        Monomial uza = Monomial::var(nv, al)
                           .mul(Monomial::var(nv, 2 * m2 + (a - 1)));
        if (!(p[a].coeff(uzc) + p[c].coeff(uza)).is_zero())
          rep.relation2 = false;
        Monomial vzc = Monomial::var(nv, m2 + al)
                           .mul(Monomial::var(nv, 2 * m2 + (c - 1)));
        Monomial vza = Monomial::var(nv, m2 + al)
                           .mul(Monomial::var(nv, 2 * m2 + (a - 1)));
        if (!(p[a].coeff(vzc) + p[c].coeff(vza)).is_zero())
          rep.relation3 = false;
      }
    }
  }
  return rep;
}

// --------------------------------------------------- common-kernel scan ----

ConditionAReport condition_a_scan(const CMData& cm,
                                  const std::vector<FramedPoint>& pts) {
  ConditionAReport rep;
  for (const auto& fp : pts) {
    std::vector<Mat<Scalar>> S = shape_operators(cm, fp);
    const int T = S[0].rows;
    Mat<Scalar> stack(static_cast<int>(S.size()) * T, T);
    for (std::size_t a = 0; a < S.size(); ++a)
      for (int i = 0; i < T; ++i)
        for (int j = 0; j < T; ++j)
          stack.at(static_cast<int>(a) * T + i, j) = S[a].at(i, j);
    ConditionAPoint pt;
    pt.fp = fp;
    pt.common_kernel_dim = T - rank(stack);
    pt.condition_a = (pt.common_kernel_dim == cm.m1);
    if (pt.condition_a) ++rep.hits;
    rep.points.push_back(std::move(pt));
  }
  return rep;
}

// ------------------------------------------------------- complex pencil ----

PencilStratum pencil_analyze(const std::vector<Mat<Scalar>>& S,
                             const std::vector<CScalar>& lambda, int m1,
                             int m2) {
  if (S.empty() || lambda.size() != S.size())
    fail(Error::Kind::precondition,
         "pencil analysis needs one coefficient per shape operator");
  bool all_zero = true;
  for (const auto& l : lambda)
    if (!l.is_zero()) all_zero = false;
  if (all_zero)
    fail(Error::Kind::precondition,
         "pencil coefficients must not all vanish");

  const int T = S[0].rows;
  PencilStratum st;
  st.lambda = lambda;

  Mat<CScalar> cs(T, T);
  for (std::size_t a = 0; a < S.size(); ++a)
    for (int i = 0; i < T; ++i)
      for (int j = 0; j < T; ++j)
        cs.at(i, j) = cs.at(i, j) + lambda[a] * CScalar(S[a].at(i, j));
  st.kernel_dim = T - rank(cs);

  // Common kernel of the real and imaginary parts of the pencil member.
  Mat<Scalar> stack(2 * T, T);
  for (std::size_t a = 0; a < S.size(); ++a)
    for (int i = 0; i < T; ++i)
      for (int j = 0; j < T; ++j) {
        stack.at(i, j) = stack.at(i, j) + lambda[a].re * S[a].at(i, j);
        stack.at(T + i, j) = stack.at(T + i, j) + lambda[a].im * S[a].at(i, j);
      }
  st.r_lambda = m1 - (T - rank(stack));

  CScalar s2;
  for (const auto& l : lambda) s2 = s2 + l * l;
  st.hyperquadric_member = s2.is_zero();

  Mat<Scalar> ab(2, static_cast<int>(lambda.size()));
  for (std::size_t a = 0; a < lambda.size(); ++a) {
    ab.at(0, static_cast<int>(a)) = lambda[a].re;
    ab.at(1, static_cast<int>(a)) = lambda[a].im;
  }
  st.real_or_imaginary = (rank(ab) <= 1);

  if (st.hyperquadric_member && !st.real_or_imaginary)
    st.mu_lambda = CScalar(Scalar(0), Scalar(1));

  const int predicted = (st.hyperquadric_member && !st.real_or_imaginary)
                            ? (m1 + m2 - st.r_lambda)
                            : m1;
  st.branch_formula_ok = (st.kernel_dim == predicted);
  return st;
}

// ------------------------------------------------- codimension estimates ----

CodimReport codim_report(const ExpansionData& ed, int k, const Budget& b) {
  if (k < 0 || k > ed.m1 - 1)
    fail(Error::Kind::precondition,
         "codimension stage k must lie in [0, m1 - 1]");

  CodimReport rep;
  rep.k = k;

  std::vector<Poly> gens(ed.p.begin(), ed.p.begin() + (k + 1));
  Ideal I(ed.yring, gens);
  rep.dim_v = dimension(I, b);

  Ideal J = singular_locus(I, k + 1, b);
  rep.dim_j = dimension(J, b);

  const int m1 = ed.m1;
  const int m2 = ed.m2;
  rep.lower_bound_ok = rep.dim_v && *rep.dim_v >= m1 + 2 * m2 - k - 1;
  // An empty singular locus satisfies every upper bound vacuously.
  rep.crucial_ok = !rep.dim_j || *rep.dim_j <= m1 + m2 + k - 2;
  rep.cod2_ok =
      !rep.dim_j || (rep.dim_v && *rep.dim_j <= *rep.dim_v - 2);
  rep.hyp_m2_ge_2 = (m2 >= 2);
  rep.hyp_m2_ge_2m1_minus_1 = (m2 >= 2 * m1 - 1);
  return rep;
}

}  // namespace isopar
