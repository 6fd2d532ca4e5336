#include "isopar/fkm.hpp"

#include "isopar/error.hpp"

namespace isopar {

namespace {

Poly norm_squared(const RingPtr& ring) {
  Poly s = Poly::zero(ring);
  for (int i = 0; i < ring->n(); ++i) {
    const Poly xi = Poly::variable(ring, i);
    s = s + xi * xi;
  }
  return s;
}

// <M x, x> as an exact quadratic form.
Poly matrix_form(const RingPtr& ring, const Mat<Scalar>& m) {
  Poly s = Poly::zero(ring);
  const int n = m.rows;
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      Scalar coeff = r == c ? m.at(r, r) : m.at(r, c) + m.at(c, r);
      if (coeff.is_zero()) continue;
      Monomial mono =
          r == c ? Monomial::var(n, r, 2)
                 : Monomial::var(n, r).mul(Monomial::var(n, c));
      s = s + Poly::term(ring, mono, coeff);
    }
  return s;
}

}  // namespace

MunznerReport verify_munzner(const Poly& F, int g, int m1, int m2) {
  if (g < 2 || g % 2 != 0)
    fail(Error::Kind::precondition,
         "the differential identities are polynomial only for even degree g >= 2");
  const auto comps = F.homogeneous_components();
  if (comps.size() != 1 || comps.begin()->first != g)
    fail(Error::Kind::precondition,
         "F must be homogeneous of degree " + std::to_string(g));

  const RingPtr& ring = F.ring();
  const Poly r2 = norm_squared(ring);

  MunznerReport rep;

  // |grad F|^2 - g^2 |x|^(2g-2)
  Poly grad2 = Poly::zero(ring);
  for (const Poly& d : F.gradient()) grad2 = grad2 + d * d;
  rep.grad_residual =
      grad2 - Poly::constant(ring, Scalar(static_cast<long>(g) * g)) *
                  r2.pow(g - 1);
  rep.grad_ok = rep.grad_residual.is_zero();

  // Laplacian F - (m2 - m1) g^2 |x|^(g-2) / 2
  const Poly lap = F.laplacian();
  const Poly rpow = r2.pow((g - 2) / 2);
  const Scalar target(mpq_class(static_cast<long>(m2 - m1) * g * g, 2));
  rep.laplace_residual = lap - Poly::constant(ring, target) * rpow;
  rep.laplace_ok = rep.laplace_residual.is_zero();

  // The m2 that would make the Laplacian identity exact, if any: solve
  // lap = c * |x|^(g-2) for a constant c, then m2 = m1 + 2c/g^2.
  if (lap.is_zero()) {
    rep.m2_operational = mpq_class(m1);
  } else {
    const Scalar lc = lap.coeff(rpow.leading(MonomialOrder::grevlex()).first);
    if (!lc.is_zero() && lc.is_rational() &&
        (lap - Poly::constant(ring, lc) * rpow).is_zero()) {
      mpq_class c = lc.rat();
      rep.m2_operational = mpq_class(m1) + 2 * c / (static_cast<long>(g) * g);
    }
  }
  return rep;
}

CMData build_fkm(const CliffordSystem& sys) {
  const CliffordReport check = verify_clifford(sys);
  if (!check.ok)
    fail(Error::Kind::precondition,
         "input system fails verification: " + check.failures.front());
  const int n = 2 * sys.l;
  if (n > kMaxVars)
    fail(Error::Kind::unsupported,
         "ambient dimension " + std::to_string(n) +
             " exceeds the polynomial variable cap of " +
             std::to_string(kMaxVars));

  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  RingPtr ring = Ring::make(std::move(names));

  CMData cm;
  cm.ring = ring;
  cm.g = 4;
  cm.m1 = sys.m;
  cm.provenance = "clifford";
  cm.sys = sys;

  const Poly r2 = norm_squared(ring);
  Poly F = r2 * r2;
  const Poly two = Poly::constant(ring, Scalar(2));
  for (const auto& P : sys.P) {
    const Poly form = matrix_form(ring, P);
    F = F - two * form * form;
  }
  cm.F = F;

  // Read m2 off the Laplacian, then confirm both identities with it.
  MunznerReport probe = verify_munzner(F, 4, cm.m1, 0);
  if (!probe.m2_operational.has_value())
    fail(Error::Kind::internal,
         "Laplacian of the constructed quartic is not a multiple of |x|^2");
  const mpq_class m2q = *probe.m2_operational;
  if (m2q.get_den() != 1)
    fail(Error::Kind::internal, "operational m2 is not an integer");
  cm.m2 = static_cast<int>(m2q.get_num().get_si());

  const MunznerReport rep = verify_munzner(F, 4, cm.m1, cm.m2);
  if (!rep.ok())
    fail(Error::Kind::internal,
         "constructed quartic fails the differential identities");

  cm.m2_phrase = sys.l - 1;
  cm.multiplicity_mismatch = cm.m2 != cm.m2_phrase;
  return cm;
}

}  // namespace isopar
