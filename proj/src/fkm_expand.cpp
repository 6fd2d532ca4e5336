#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "isopar/fkm.hpp"

namespace isopar {
namespace {

int block_deg(const Monomial& m, int lo, int hi) {
  int d = 0;
  for (int i = lo; i < hi; ++i) d += m[i];
  return d;
}

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

ExpansionData ot_expand(const CMData& cm, const FramedPoint& fp) {
  const int N = cm.ring->n();
  const int m1 = static_cast<int>(fp.Z.size());
  const int m2 = static_cast<int>(fp.X.size());
  if (static_cast<int>(fp.n.size()) != m1 + 1 ||
      static_cast<int>(fp.Y.size()) != m2)
    fail(Error::Kind::precondition, "framed point has inconsistent frame sizes");
  if (static_cast<int>(fp.x.size()) != N)
    fail(Error::Kind::precondition, "framed point does not match the ring");
  if (cm.m1 != m1 || cm.m2 != m2)
    fail(Error::Kind::precondition,
         "frame multiplicities do not match the family data");
  if (cm.g != 4)
    fail(Error::Kind::precondition, "expansion requires a quartic family");

  // Expansion ring: t | u1..u{m2} | v1..v{m2} | z1..z{m1} | w0..w{m1}.
  const int nY = 2 * m2 + m1;
  const int nE = 2 + nY + m1;
  if (nE > kMaxVars)
    fail(Error::Kind::unsupported,
         "expansion needs " + std::to_string(nE) +
             " variables, above the desk-scale cap of " +
             std::to_string(kMaxVars));
  std::vector<std::string> names{"t"};
  for (int i = 1; i <= m2; ++i) names.push_back("u" + std::to_string(i));
  for (int i = 1; i <= m2; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 1; i <= m1; ++i) names.push_back("z" + std::to_string(i));
  for (int a = 0; a <= m1; ++a) names.push_back("w" + std::to_string(a));
  RingPtr E = Ring::make(names);
  RingPtr yring =
      Ring::make(std::vector<std::string>(names.begin() + 1, names.begin() + 1 + nY));
  const int iw = 1 + nY;  // first w index in E

  // Substitute x_i -> t x[i] + sum u X[i] + sum v Y[i] + sum z Z[i] + sum w n[i].
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) {
    Poly im(E);
    auto add = [&](int var, const Scalar& c) {
      if (!c.is_zero()) im += Poly::variable(E, var).scaled(c);
    };
    add(0, fp.x[static_cast<size_t>(i)]);
    for (int k = 0; k < m2; ++k) add(1 + k, fp.X[static_cast<size_t>(k)][static_cast<size_t>(i)]);
    for (int k = 0; k < m2; ++k) add(1 + m2 + k, fp.Y[static_cast<size_t>(k)][static_cast<size_t>(i)]);
    for (int k = 0; k < m1; ++k) add(1 + 2 * m2 + k, fp.Z[static_cast<size_t>(k)][static_cast<size_t>(i)]);
    for (int a = 0; a <= m1; ++a) add(iw + a, fp.n[static_cast<size_t>(a)][static_cast<size_t>(i)]);
    images.push_back(std::move(im));
  }
  Poly G = cm.F.substitute(images);

  // Extract the second and third fundamental form components from the
  // t^1 w_a^1 and t^0 w_a^1 blocks.
  std::vector<Poly> p(static_cast<size_t>(m1 + 1), Poly::zero(yring));
  std::vector<Poly> q(static_cast<size_t>(m1 + 1), Poly::zero(yring));
  for (const auto& [mon, c] : G.terms()) {
    int dw = block_deg(mon, iw, nE);
    if (dw != 1) continue;
    int dt = mon[0];
    if (dt > 1) continue;
    int a = -1;
    for (int k = 0; k <= m1; ++k)
      if (mon[iw + k] == 1) {
        a = k;
        break;
      }
    Monomial ym = Monomial::one(nY);
    int deg = 0;
    for (int k = 0; k < nY; ++k) {
      ym.e[static_cast<size_t>(k)] = mon[1 + k];
      deg += mon[1 + k];
    }
    ym.deg = static_cast<uint16_t>(deg);
    if (dt == 1)
      p[static_cast<size_t>(a)].add_term(ym, c / Scalar(8));
    else
      q[static_cast<size_t>(a)].add_term(ym, c / Scalar(-8));
  }

  // Rebuild the full template and demand an exactly zero residual.
  Poly t = Poly::variable(E, 0);
  Poly y2 = Poly::zero(E), w2 = Poly::zero(E);
  for (int k = 0; k < nY; ++k) {
    Poly xv = Poly::variable(E, 1 + k);
    y2 += xv * xv;
  }
  for (int a = 0; a <= m1; ++a) {
    Poly wv = Poly::variable(E, iw + a);
    w2 += wv * wv;
  }
  Poly pw = Poly::zero(E), qw = Poly::zero(E), p2 = Poly::zero(yring);
  for (int a = 0; a <= m1; ++a) {
    pw += p[static_cast<size_t>(a)].promoted(E) * Poly::variable(E, iw + a);
    qw += q[static_cast<size_t>(a)].promoted(E) * Poly::variable(E, iw + a);
    p2 += p[static_cast<size_t>(a)] * p[static_cast<size_t>(a)];
  }
  Poly cross = Poly::zero(E);
  for (int a = 0; a <= m1; ++a)
    for (int b = 0; b <= m1; ++b) {
      Poly gab = grad_pair(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]);
      if (gab.is_zero()) continue;
      cross += gab.promoted(E) * Poly::variable(E, iw + a) * Poly::variable(E, iw + b);
    }
  Poly T = t.pow(4) + (y2.scaled(Scalar(2)) - w2.scaled(Scalar(6))) * t.pow(2) +
           pw.scaled(Scalar(8)) * t + y2 * y2 - y2 * w2.scaled(Scalar(6)) +
           w2 * w2 - p2.promoted(E).scaled(Scalar(2)) - qw.scaled(Scalar(8)) +
           cross.scaled(Scalar(2));
  Poly residual = G - T;
  if (!residual.is_zero()) {
    auto lead = residual.leading(MonomialOrder::grevlex());
    fail(Error::Kind::precondition,
         "expansion does not match the focal template; first offending "
         "monomial " +
             Poly::term(E, lead.first, Scalar(1)).str());
  }

  ExpansionData ed;
  ed.yring = yring;
  ed.m1 = m1;
  ed.m2 = m2;
  ed.p = std::move(p);
  ed.q = std::move(q);
  ed.fp = fp;

  // Structural facts.  p_0 = |u|^2 - |v|^2 is forced by the shape operator
  // along n_0; q_0 must be (u,v,z)-trilinear.  The multidegree support of
  // every other component is recorded as a note.
  {
    Poly want = Poly::zero(yring);
    for (int k = 0; k < m2; ++k) {
      Poly xv = Poly::variable(yring, k);
      want += xv * xv;
    }
    for (int k = 0; k < m2; ++k) {
      Poly xv = Poly::variable(yring, m2 + k);
      want -= xv * xv;
    }
    if (!(ed.p[0] == want))
      fail(Error::Kind::precondition,
           "p_0 is not |u|^2 - |v|^2 in the adapted frame");
  }
  for (int a = 0; a <= m1; ++a) {
    const Poly& pa = ed.p[static_cast<size_t>(a)];
    const Poly& qa = ed.q[static_cast<size_t>(a)];
    if (!pa.is_zero() && !(pa.is_homogeneous() && pa.degree() == 2))
      fail(Error::Kind::precondition,
           "p_" + std::to_string(a) + " is not a quadratic form");
    if (!qa.is_zero() && !(qa.is_homogeneous() && qa.degree() == 3))
      fail(Error::Kind::precondition,
           "q_" + std::to_string(a) + " is not a cubic form");
  }
  for (const auto& [mon, c] : ed.q[0].terms()) {
    (void)c;
    int du = block_deg(mon, 0, m2);
    int dv = block_deg(mon, m2, 2 * m2);
    int dz = block_deg(mon, 2 * m2, nY);
    if (du != 1 || dv != 1 || dz != 1)
      fail(Error::Kind::precondition,
           "q_0 has a non-trilinear monomial of multidegree " +
               triple_str(du, dv, dz));
  }
  auto grading_note = [&](const std::string& label, const Poly& f) {
    std::set<std::tuple<int, int, int>> degs;
    for (const auto& [mon, c] : f.terms()) {
      (void)c;
      degs.insert({block_deg(mon, 0, m2), block_deg(mon, m2, 2 * m2),
                   block_deg(mon, 2 * m2, nY)});
    }
    std::string s = label + " (u,v,z)-multidegrees:";
    if (degs.empty()) s += " none (zero)";
    for (const auto& [a_, b_, c_] : degs) s += " " + triple_str(a_, b_, c_);
    ed.notes.push_back(s);
  };
  for (int a = 0; a <= m1; ++a)
    grading_note("p_" + std::to_string(a), ed.p[static_cast<size_t>(a)]);
  for (int a = 0; a <= m1; ++a)
    grading_note("q_" + std::to_string(a), ed.q[static_cast<size_t>(a)]);
  ed.notes.push_back(
      fp.quadext_d == 0
          ? "frames are rational"
          : "frames live in Q(sqrt(" + std::to_string(fp.quadext_d) + "))");
  return ed;
}

IdentityReport verify_ot_identities(const ExpansionData& ed) {
  const int m1 = ed.m1;
  IdentityReport rep;
  auto push = [&](std::string name, Poly residual) {
    IdentityCheck c;
    c.name = std::move(name);
    c.ok = residual.is_zero();
    c.residual = std::move(residual);
    rep.checks.push_back(std::move(c));
  };
  const auto& p = ed.p;
  const auto& q = ed.q;
  const RingPtr& R = ed.yring;

  Poly y2 = Poly::zero(R);
  for (int k = 0; k < R->n(); ++k) {
    Poly xv = Poly::variable(R, k);
    y2 += xv * xv;
  }
  Poly G = Poly::zero(R);
  for (int a = 0; a <= m1; ++a) G += p[static_cast<size_t>(a)] * p[static_cast<size_t>(a)];

  // (a) the syzygy sum p_a q_a = 0
  {
    Poly s = Poly::zero(R);
    for (int a = 0; a <= m1; ++a) s += p[static_cast<size_t>(a)] * q[static_cast<size_t>(a)];
    push("syzygy", std::move(s));
  }
  // (b) <grad p_a, grad q_b> + <grad p_b, grad q_a> = 0
  for (int a = 0; a <= m1; ++a)
    for (int b = a; b <= m1; ++b)
      push("grad-pair(" + std::to_string(a) + "," + std::to_string(b) + ")",
           grad_pair(p[static_cast<size_t>(a)], q[static_cast<size_t>(b)]) +
               grad_pair(p[static_cast<size_t>(b)], q[static_cast<size_t>(a)]));
  // (c) cyclic sums over distinct triples
  for (int a = 0; a <= m1; ++a)
    for (int b = a + 1; b <= m1; ++b)
      for (int c = b + 1; c <= m1; ++c) {
        Poly s = grad_pair(grad_pair(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]),
                           q[static_cast<size_t>(c)]) +
                 grad_pair(grad_pair(p[static_cast<size_t>(c)], p[static_cast<size_t>(a)]),
                           q[static_cast<size_t>(b)]) +
                 grad_pair(grad_pair(p[static_cast<size_t>(b)], p[static_cast<size_t>(c)]),
                           q[static_cast<size_t>(a)]);
        push("cyclic(" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")",
             std::move(s));
      }
  // (d) 16 sum q_a^2 = 16 G |y|^2 - <grad G, grad G>
  {
    Poly lhs = Poly::zero(R);
    for (int a = 0; a <= m1; ++a) lhs += q[static_cast<size_t>(a)] * q[static_cast<size_t>(a)];
    push("q-norm", lhs.scaled(Scalar(16)) -
                       (G * y2).scaled(Scalar(16)) + grad_pair(G, G));
  }
  // (e)/(f) 8 <grad q_a, grad q_b> identities
  for (int a = 0; a <= m1; ++a)
    for (int b = a; b <= m1; ++b) {
      Poly pab = grad_pair(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]);
      Poly rhs = (pab * y2 - p[static_cast<size_t>(a)] * p[static_cast<size_t>(b)]).scaled(Scalar(8)) +
                 grad_pair(pab, G);
      Poly corr = Poly::zero(R);
      for (int c = 0; c <= m1; ++c)
        corr += grad_pair(p[static_cast<size_t>(a)], p[static_cast<size_t>(c)]) *
                grad_pair(p[static_cast<size_t>(b)], p[static_cast<size_t>(c)]);
      rhs -= corr.scaled(Scalar(2));
      if (a == b) rhs -= G.scaled(Scalar(24));
      push("q-grad(" + std::to_string(a) + "," + std::to_string(b) + ")",
           grad_pair(q[static_cast<size_t>(a)], q[static_cast<size_t>(b)]).scaled(Scalar(8)) - rhs);
    }
  return rep;
}

}  // namespace isopar
