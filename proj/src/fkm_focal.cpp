#include <bit>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isopar/fkm.hpp"

namespace isopar {
namespace {

// ---------------------------------------------------------------------------
// Exact vector utilities
// ---------------------------------------------------------------------------

Scalar norm2(const SVec& v) { return dot(v, v); }

bool vec_is_zero(const SVec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

SVec scaled_vec(SVec v, const Scalar& c) {
  for (auto& e : v) e = e * c;
  return v;
}

// First nonzero extension among the entries (0 when all are rational).
long vec_ext(const SVec& v) {
  for (const auto& e : v)
    if (e.ext() != 0) return e.ext();
  return 0;
}

// Rescale a vector with rational entries to integer entries with gcd 1 and a
// positive first nonzero entry; vectors with irrational entries pass through.
SVec primitive(SVec v) {
  mpz_class den_lcm = 1;
  for (const auto& e : v) {
    if (!e.is_rational()) return v;
    den_lcm = lcm(den_lcm, e.rat().get_den());
  }
  mpz_class num_gcd = 0;
  for (const auto& e : v)
    num_gcd = gcd(num_gcd, mpz_class(e.rat().get_num() * (den_lcm / e.rat().get_den())));
  if (num_gcd == 0) return v;
  mpq_class f(den_lcm, num_gcd);
  f.canonicalize();
  v = scaled_vec(std::move(v), Scalar(f));
  bool flip = false;
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    flip = e.rat() < 0;
    break;
  }
  if (flip)
    for (auto& e : v) e = -e;
  return v;
}

// Exact Gram-Schmidt without normalization; entries stay in the coefficient
// field of the input, and rational vectors are kept primitive.
std::vector<SVec> orthogonalize(const std::vector<SVec>& in) {
  std::vector<SVec> out;
  for (SVec v : in) {
    for (const SVec& b : out) {
      Scalar c = dot(v, b) / norm2(b);
      if (c.is_zero()) continue;
      for (size_t i = 0; i < v.size(); ++i) v[i] = v[i] - c * b[i];
    }
    if (vec_is_zero(v))
      fail(Error::Kind::internal, "orthogonalize: dependent input basis");
    out.push_back(primitive(std::move(v)));
  }
  return out;
}

// Exact square root of a rational that is promised to be a perfect square.
mpq_class exact_sqrt(const mpq_class& q) {
  if (mpz_perfect_square_p(q.get_num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den().get_mpz_t()) == 0)
    fail(Error::Kind::internal, "exact_sqrt: argument is not a square");
  return mpq_class(sqrt(q.get_num()), sqrt(q.get_den()));
}

// Within a family of mutually orthogonal vectors (a basis of one eigenspace,
// where recombination is legal), rotate pairs sharing the same square-free
// norm part d into rational-norm pairs whenever alpha^2 + beta^2 = d t^2 has
// a small solution.  This leaves at most one irrational normalizer per
// square-free class and rescues frames that a raw kernel basis would spoil.
void harmonize_extensions(std::vector<SVec>& family) {
  std::map<long, std::vector<size_t>> groups;
  for (size_t i = 0; i < family.size(); ++i) {
    Scalar n2 = norm2(family[i]);
    if (!n2.is_rational()) return;  // nested radical; nothing to do here
    Scalar u = Scalar::inv_sqrt(n2.rat());
    if (!u.is_rational()) groups[u.ext()].push_back(i);
  }
  for (auto& [d, idx] : groups) {
    if (idx.size() < 2) continue;
    long alpha = 0, beta = 0;
    for (long t = 1; t <= 12 && alpha == 0; ++t) {
      mpz_class target = mpz_class(d) * t * t;
      for (long a = 1; mpz_class(a) * a * 2 <= target; ++a) {
        mpz_class b2 = target - mpz_class(a) * a;
        if (mpz_perfect_square_p(b2.get_mpz_t()) != 0) {
          alpha = a;
          beta = mpz_class(sqrt(b2)).get_si();
          break;
        }
      }
    }
    if (alpha == 0) continue;  // d is not a sum of two squares
    for (size_t k = 0; k + 1 < idx.size(); k += 2) {
      SVec& v1 = family[idx[k]];
      SVec& v2 = family[idx[k + 1]];
      // Scale both to norm^2 = d exactly, then rotate by the (alpha, beta)
      // pair; the results have square norm d^2 t^2 and stay orthogonal.
      v1 = scaled_vec(std::move(v1), Scalar(exact_sqrt(mpq_class(d) / norm2(v1).rat())));
      v2 = scaled_vec(std::move(v2), Scalar(exact_sqrt(mpq_class(d) / norm2(v2).rat())));
      SVec u1(v1.size()), u2(v1.size());
      for (size_t i = 0; i < v1.size(); ++i) {
        u1[i] = Scalar(alpha) * v1[i] + Scalar(beta) * v2[i];
        u2[i] = Scalar(-beta) * v1[i] + Scalar(alpha) * v2[i];
      }
      v1 = primitive(std::move(u1));
      v2 = primitive(std::move(u2));
    }
  }
}

// Normalize every vector to unit length.  All irrational data (entries and
// normalizers alike) must share a single square-free extension, seeded and
// returned through *d (0 = purely rational so far).  Returns false when a
// second extension or a nested radical would be required.
bool normalize_single_ext(std::vector<SVec>& vecs, long* d) {
  std::vector<Scalar> units;
  units.reserve(vecs.size());
  for (const auto& v : vecs) {
    long ve = vec_ext(v);
    if (ve != 0) {
      if (*d != 0 && ve != *d) return false;
      *d = ve;
    }
    Scalar n2 = norm2(v);
    if (n2.is_zero()) fail(Error::Kind::internal, "normalize: zero vector");
    if (!n2.is_rational()) return false;  // would need a nested radical
    Scalar u = Scalar::inv_sqrt(n2.rat());
    if (!u.is_rational()) {
      if (*d != 0 && u.ext() != *d) return false;
      *d = u.ext();
    }
    units.push_back(u);
  }
  for (size_t i = 0; i < vecs.size(); ++i)
    vecs[i] = scaled_vec(std::move(vecs[i]), units[i]);
  return true;
}

// Paranoid completeness check: x, the normals and the three tangent frames
// together form an exact orthonormal basis of the ambient space.
void check_orthonormal_frame(const FramedPoint& fp, int ambient_dim) {
  std::vector<const SVec*> all;
  all.push_back(&fp.x);
  for (const auto& v : fp.n) all.push_back(&v);
  for (const auto& v : fp.X) all.push_back(&v);
  for (const auto& v : fp.Y) all.push_back(&v);
  for (const auto& v : fp.Z) all.push_back(&v);
  if (static_cast<int>(all.size()) != ambient_dim)
    fail(Error::Kind::internal, "frame does not span the ambient space");
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i; j < all.size(); ++j) {
      Scalar want(i == j ? 1 : 0);
      if (!(dot(*all[i], *all[j]) == want))
        fail(Error::Kind::internal, "frame is not orthonormal");
    }
}

// ---------------------------------------------------------------------------
// Half-block focal search
// ---------------------------------------------------------------------------

struct HalfBlock {
  int i, j, sign;  // the vector (e_i + sign * e_j) / 2
};

std::vector<HalfBlock> half_blocks(int l) {
  std::vector<HalfBlock> out;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int s : {1, -1}) out.push_back({i, j, s});
  return out;
}

SVec half_block_vec(const HalfBlock& h, int l) {
  SVec v(static_cast<size_t>(l), Scalar(0));
  v[static_cast<size_t>(h.i)] = Scalar(mpq_class(1, 2));
  v[static_cast<size_t>(h.j)] = Scalar(mpq_class(h.sign, 2));
  return v;
}

SVec join_halves(const SVec& top, const SVec& bottom) {
  SVec x;
  x.reserve(top.size() + bottom.size());
  x.insert(x.end(), top.begin(), top.end());
  x.insert(x.end(), bottom.begin(), bottom.end());
  return x;
}

SVec embed_lower(const SVec& v, int l) {
  return join_halves(SVec(static_cast<size_t>(l), Scalar(0)), v);
}

SVec embed_upper(const SVec& v, int l) {
  return join_halves(v, SVec(static_cast<size_t>(l), Scalar(0)));
}

// Frames at an accepted focal point x = x_+ + x_- of a built system:
// normals n_a = P_a x, the kernel frame Z_p = P_0 P_p x, and X / Y as the
// orthonormalized solution spaces of the linear frame conditions inside the
// two P_0 eigenhalves.  Returns nullopt when unit normalization would need
// more than one square-free extension.
std::optional<FramedPoint> frames_at(const CliffordSystem& sys, SVec x) {
  const int l = sys.l, m = sys.m;
  const int m2 = l - m - 1;
  FramedPoint fp;
  fp.x = std::move(x);
  for (int a = 0; a <= m; ++a) fp.n.push_back(mat_vec(sys.P[a], fp.x));
  for (int p = 1; p <= m; ++p) fp.Z.push_back(mat_vec(sys.P[0], fp.n[p]));
  for (const auto& v : fp.n)
    if (!(norm2(v) == Scalar(1)))
      fail(Error::Kind::internal, "normal frame is not unit");

  // X: lower-half vectors orthogonal to x and to every normal.  The binding
  // rows are the lower halves of x and of n_1..n_m; orthogonality to n_0 and
  // to the kernel frame then follows and is re-checked below.
  {
    Mat<Scalar> rows(m + 1, l);
    for (int j = 0; j < l; ++j) rows.at(0, j) = fp.x[static_cast<size_t>(l + j)];
    for (int a = 1; a <= m; ++a)
      for (int j = 0; j < l; ++j)
        rows.at(a, j) = fp.n[static_cast<size_t>(a)][static_cast<size_t>(l + j)];
    auto kb = kernel_basis(rows);
    if (static_cast<int>(kb.size()) != m2)
      fail(Error::Kind::internal, "focal frame: wrong X dimension");
    for (auto& v : orthogonalize(kb)) fp.X.push_back(embed_lower(v, l));
  }
  // Y: the mirrored construction in the upper half.
  {
    Mat<Scalar> rows(m + 1, l);
    for (int j = 0; j < l; ++j) rows.at(0, j) = fp.x[static_cast<size_t>(j)];
    for (int a = 1; a <= m; ++a)
      for (int j = 0; j < l; ++j)
        rows.at(a, j) = fp.n[static_cast<size_t>(a)][static_cast<size_t>(j)];
    auto kb = kernel_basis(rows);
    if (static_cast<int>(kb.size()) != m2)
      fail(Error::Kind::internal, "focal frame: wrong Y dimension");
    for (auto& v : orthogonalize(kb)) fp.Y.push_back(embed_upper(v, l));
  }

  harmonize_extensions(fp.X);
  harmonize_extensions(fp.Y);
  long d = 0;
  std::vector<SVec> xy;
  xy.insert(xy.end(), fp.X.begin(), fp.X.end());
  xy.insert(xy.end(), fp.Y.begin(), fp.Y.end());
  if (!normalize_single_ext(xy, &d)) return std::nullopt;
  for (int i = 0; i < m2; ++i) fp.X[static_cast<size_t>(i)] = xy[static_cast<size_t>(i)];
  for (int i = 0; i < m2; ++i) fp.Y[static_cast<size_t>(i)] = xy[static_cast<size_t>(m2 + i)];
  fp.quadext_d = d;

  check_orthonormal_frame(fp, 2 * l);
  return fp;
}

// ---------------------------------------------------------------------------
// Quadruple polarization of the quartic
// ---------------------------------------------------------------------------

// B(v1,v2,v3,v4) = (1/24) sum over nonempty S of (-1)^(4-|S|) F(sum_S v_k);
// the unique symmetric 4-linear form with B(v,v,v,v) = F(v).
Scalar polarize4(const Poly& F, const SVec& v1, const SVec& v2, const SVec& v3,
                 const SVec& v4) {
  const SVec* v[4] = {&v1, &v2, &v3, &v4};
  const size_t n = v1.size();
  Scalar acc(0);
  for (unsigned mask = 1; mask < 16; ++mask) {
    SVec s(n, Scalar(0));
    for (int k = 0; k < 4; ++k)
      if (mask & (1u << k))
        for (size_t i = 0; i < n; ++i) s[i] += (*v[k])[i];
    Scalar val = F.evaluate(s);
    if ((4 - std::popcount(mask)) % 2 != 0)
      acc -= val;
    else
      acc += val;
  }
  return acc / Scalar(24);
}

}  // namespace

// ---------------------------------------------------------------------------
// Focal search API
// ---------------------------------------------------------------------------

std::vector<FramedPoint> find_focal_points(const CMData& cm, int max_points) {
  if (!cm.sys)
    fail(Error::Kind::precondition,
         "focal search requires a family built from a Clifford system; "
         "frame imported points explicitly instead");
  if (cm.g != 4)
    fail(Error::Kind::precondition, "focal search requires a quartic family");
  const CliffordSystem& sys = *cm.sys;
  const int l = sys.l, m = sys.m;

  std::vector<FramedPoint> out;
  if (max_points <= 0) return out;

  auto halves = half_blocks(l);
  for (const auto& hp : halves) {
    SVec xp = half_block_vec(hp, l);
    // Lower halves of P_a x_+ for a = 1..m: the vectors x_- must annihilate.
    std::vector<SVec> conds;
    SVec xp_full = join_halves(xp, SVec(static_cast<size_t>(l), Scalar(0)));
    for (int a = 1; a <= m; ++a) {
      SVec w = mat_vec(sys.P[a], xp_full);
      conds.emplace_back(w.begin() + l, w.end());
    }
    for (const auto& hm : halves) {
      SVec xm = half_block_vec(hm, l);
      bool ok = true;
      for (const auto& c : conds)
        if (!dot(xm, c).is_zero()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      SVec x = join_halves(xp, xm);
      if (!(cm.F.evaluate(x) == Scalar(1)))
        fail(Error::Kind::internal, "accepted focal candidate has F != 1");
      auto fp = frames_at(sys, std::move(x));
      if (!fp) continue;  // frames would need two extensions
      out.push_back(std::move(*fp));
      if (static_cast<int>(out.size()) >= max_points) return out;
    }
  }
  return out;
}

FramedPoint find_focal_point(const CMData& cm) {
  auto pts = find_focal_points(cm, 1);
  if (pts.empty())
    fail(Error::Kind::budget,
         "focal search exhausted the half-block candidate set without a hit");
  return std::move(pts[0]);
}

// ---------------------------------------------------------------------------
// Imported-point framing
// ---------------------------------------------------------------------------

FramedPoint frame_imported_point(const CMData& cm, const SVec& x) {
  const int N = cm.ring->n();
  if (static_cast<int>(x.size()) != N)
    fail(Error::Kind::precondition, "point dimension does not match the ring");
  if (cm.g != 4)
    fail(Error::Kind::precondition, "framing requires a quartic family");
  if (!(norm2(x) == Scalar(1)))
    fail(Error::Kind::precondition, "point must lie on the unit sphere");
  if (!(cm.F.evaluate(x) == Scalar(1)))
    fail(Error::Kind::precondition, "point must satisfy F = 1");

  // Focal points maximize F on the sphere, so grad F = 4x there.
  auto grads = cm.F.gradient();
  for (int i = 0; i < N; ++i)
    if (!(grads[static_cast<size_t>(i)].evaluate(x) == Scalar(4) * x[static_cast<size_t>(i)]))
      fail(Error::Kind::precondition, "point is not focal: grad F != 4x");

  // Half the Hessian at x has exact spectrum {6, 2, -6} at a focal point.
  Mat<Scalar> M(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      Scalar h = grads[static_cast<size_t>(i)].diff(j).evaluate(x) / Scalar(2);
      M.at(i, j) = h;
      M.at(j, i) = h;
    }
  auto shifted = [&](long c) {
    Mat<Scalar> s = M;
    for (int i = 0; i < N; ++i) s.at(i, i) = s.at(i, i) - Scalar(c);
    return s;
  };
  Mat<Scalar> m6 = shifted(6), m2m = shifted(2), p6 = shifted(-6);
  if (!(m6 * m2m * p6).is_zero())
    fail(Error::Kind::precondition,
         "half-Hessian spectrum at the point is not {6, 2, -6}");
  if (rank(m6) != N - 1)
    fail(Error::Kind::precondition,
         "eigenvalue 6 of the half-Hessian is not simple at the point");

  auto raw_normals = kernel_basis(p6);
  const int m1 = static_cast<int>(raw_normals.size()) - 1;
  if (m1 < 0)
    fail(Error::Kind::precondition, "no normal directions at the point");
  auto raw_tangent = kernel_basis(m2m);
  const int T = static_cast<int>(raw_tangent.size());
  if (T != N - 1 - (m1 + 1) || (T - m1) % 2 != 0 || T < m1)
    fail(Error::Kind::precondition,
         "half-Hessian eigenspace dimensions do not fit the focal pattern");
  const int m2 = (T - m1) / 2;
  if (cm.m1 != m1 || cm.m2 != m2)
    fail(Error::Kind::precondition,
         "declared multiplicities (" + std::to_string(cm.m1) + "," +
             std::to_string(cm.m2) + ") do not match the eigenstructure (" +
             std::to_string(m1) + "," + std::to_string(m2) + ")");

  long d = vec_ext(x);
  FramedPoint fp;
  fp.x = x;
  fp.n = orthogonalize(raw_normals);
  harmonize_extensions(fp.n);
  if (!normalize_single_ext(fp.n, &d))
    fail(Error::Kind::unsupported,
         "normal frame needs more than one quadratic extension");

  // Shape operator along n_0 as an operator matrix in an orthogonal (not yet
  // normalized) tangent basis: A = D^-1 Shat with Shat the bilinear form
  // (3/2) B(x, n_0, b_i, b_j) and D the diagonal of squared lengths.
  auto tb = orthogonalize(raw_tangent);
  Mat<Scalar> A(T, T);
  for (int i = 0; i < T; ++i) {
    Scalar qi = norm2(tb[static_cast<size_t>(i)]);
    for (int j = 0; j < T; ++j) {
      Scalar s = polarize4(cm.F, fp.x, fp.n[0], tb[static_cast<size_t>(i)],
                           tb[static_cast<size_t>(j)]) *
                 Scalar(mpq_class(3, 2));
      A.at(i, j) = s / qi;
    }
  }
  auto eig_vectors = [&](long eigval) {
    Mat<Scalar> s = A;
    for (int i = 0; i < T; ++i) s.at(i, i) = s.at(i, i) - Scalar(eigval);
    auto coords = kernel_basis(s);
    std::vector<SVec> amb;
    for (const auto& c : coords) {
      SVec v(static_cast<size_t>(N), Scalar(0));
      for (int k = 0; k < T; ++k) {
        if (c[static_cast<size_t>(k)].is_zero()) continue;
        for (int idx = 0; idx < N; ++idx)
          v[static_cast<size_t>(idx)] +=
              c[static_cast<size_t>(k)] * tb[static_cast<size_t>(k)][static_cast<size_t>(idx)];
      }
      amb.push_back(std::move(v));
    }
    return amb;
  };
  auto xs = eig_vectors(1), ys = eig_vectors(-1), zs = eig_vectors(0);
  if (static_cast<int>(xs.size()) != m2 || static_cast<int>(ys.size()) != m2 ||
      static_cast<int>(zs.size()) != m1)
    fail(Error::Kind::precondition,
         "shape operator along n_0 lacks the focal (+1,-1,0) eigenstructure");
  fp.X = orthogonalize(xs);
  fp.Y = orthogonalize(ys);
  fp.Z = orthogonalize(zs);
  harmonize_extensions(fp.X);
  harmonize_extensions(fp.Y);
  harmonize_extensions(fp.Z);
  if (!normalize_single_ext(fp.X, &d) || !normalize_single_ext(fp.Y, &d) ||
      !normalize_single_ext(fp.Z, &d))
    fail(Error::Kind::unsupported,
         "tangent frame needs more than one quadratic extension");
  fp.quadext_d = d;
  check_orthonormal_frame(fp, N);
  return fp;
}

// ---------------------------------------------------------------------------
// Shape operators in the frame order (X | Y | Z)
// ---------------------------------------------------------------------------

std::vector<Mat<Scalar>> shape_operators(const CMData& cm,
                                         const FramedPoint& fp) {
  const int m1 = static_cast<int>(fp.Z.size());
  const int m2 = static_cast<int>(fp.X.size());
  const int T = 2 * m2 + m1;
  if (static_cast<int>(fp.n.size()) != m1 + 1 ||
      static_cast<int>(fp.Y.size()) != m2)
    fail(Error::Kind::precondition, "framed point has inconsistent frame sizes");
  const Error::Kind bad =
      cm.sys ? Error::Kind::internal : Error::Kind::precondition;

  std::vector<const SVec*> E;
  for (const auto& v : fp.X) E.push_back(&v);
  for (const auto& v : fp.Y) E.push_back(&v);
  for (const auto& v : fp.Z) E.push_back(&v);

  std::vector<Mat<Scalar>> S;
  for (int a = 0; a <= m1; ++a) {
    Mat<Scalar> Sa(T, T);
    if (cm.sys) {
      for (int j = 0; j < T; ++j) {
        SVec w = mat_vec(cm.sys->P[static_cast<size_t>(a)], *E[static_cast<size_t>(j)]);
        for (int i = 0; i < T; ++i)
          Sa.at(i, j) = -dot(*E[static_cast<size_t>(i)], w);
      }
    } else {
      for (int i = 0; i < T; ++i)
        for (int j = i; j < T; ++j) {
          Scalar b = polarize4(cm.F, fp.x, fp.n[static_cast<size_t>(a)],
                               *E[static_cast<size_t>(i)], *E[static_cast<size_t>(j)]) *
                     Scalar(mpq_class(3, 2));
          Sa.at(i, j) = b;
          Sa.at(j, i) = b;
        }
    }
    if (!Sa.is_symmetric())
      fail(bad, "shape operator " + std::to_string(a) + " is not symmetric");
    if (!trace(Sa).is_zero())
      fail(bad, "shape operator " + std::to_string(a) + " has nonzero trace");
    S.push_back(std::move(Sa));
  }

  // S_0 must be diag(+1 on X, -1 on Y, 0 on Z) in this frame.
  {
    Mat<Scalar> want(T, T);
    for (int i = 0; i < m2; ++i) want.at(i, i) = Scalar(1);
    for (int i = 0; i < m2; ++i) want.at(m2 + i, m2 + i) = Scalar(-1);
    if (!(S[0] == want))
      fail(bad, "shape operator 0 is not diag(I, -I, 0) in the frame");
  }

  // Symbolic spectrum checks for every unit normal at once: with
  // M(n) = sum n_a S_a, both M^3 - M and trace M^2 - 2 m2 must vanish
  // modulo (sum n_a^2 - 1).
  RingPtr Rn;
  {
    std::vector<std::string> names;
    for (int a = 0; a <= m1; ++a) names.push_back("n" + std::to_string(a));
    Rn = Ring::make(names);
  }
  Poly rel = Poly::zero(Rn);
  for (int a = 0; a <= m1; ++a) {
    Poly na = Poly::variable(Rn, a);
    rel += na * na;
  }
  rel -= Poly::constant(Rn, Scalar(1));
  std::vector<Poly> rels{rel};

  std::vector<std::vector<Poly>> Mp(static_cast<size_t>(T),
                                    std::vector<Poly>(static_cast<size_t>(T), Poly::zero(Rn)));
  for (int i = 0; i < T; ++i)
    for (int j = 0; j < T; ++j)
      for (int a = 0; a <= m1; ++a) {
        const Scalar& c = S[static_cast<size_t>(a)].at(i, j);
        if (!c.is_zero()) Mp[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            Poly::variable(Rn, a).scaled(c);
      }
  auto pmul = [&](const std::vector<std::vector<Poly>>& A_,
                  const std::vector<std::vector<Poly>>& B_) {
    std::vector<std::vector<Poly>> R(static_cast<size_t>(T),
                                     std::vector<Poly>(static_cast<size_t>(T), Poly::zero(Rn)));
    for (int i = 0; i < T; ++i)
      for (int k = 0; k < T; ++k) {
        const Poly& x_ = A_[static_cast<size_t>(i)][static_cast<size_t>(k)];
        if (x_.is_zero()) continue;
        for (int j = 0; j < T; ++j) {
          const Poly& y_ = B_[static_cast<size_t>(k)][static_cast<size_t>(j)];
          if (!y_.is_zero()) R[static_cast<size_t>(i)][static_cast<size_t>(j)] += x_ * y_;
        }
      }
    return R;
  };
  auto M2p = pmul(Mp, Mp);
  auto M3p = pmul(M2p, Mp);
  const auto& grevlex = MonomialOrder::grevlex();
  for (int i = 0; i < T; ++i)
    for (int j = 0; j < T; ++j) {
      Poly r = normal_form(M3p[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                               Mp[static_cast<size_t>(i)][static_cast<size_t>(j)],
                           rels, grevlex);
      if (!r.is_zero())
        fail(bad, "shape operator family violates M^3 = M on the unit normal sphere");
    }
  Poly tr2 = Poly::zero(Rn);
  for (int i = 0; i < T; ++i) tr2 += M2p[static_cast<size_t>(i)][static_cast<size_t>(i)];
  tr2 -= Poly::constant(Rn, Scalar(2L * m2));
  if (!normal_form(tr2, rels, grevlex).is_zero())
    fail(bad, "shape operator family violates trace M^2 = 2 m2");
  Poly tr1 = Poly::zero(Rn);
  for (int i = 0; i < T; ++i) tr1 += Mp[static_cast<size_t>(i)][static_cast<size_t>(i)];
  if (!tr1.is_zero())
    fail(bad, "shape operator family has a nonzero symbolic trace");

  return S;
}

}  // namespace isopar
