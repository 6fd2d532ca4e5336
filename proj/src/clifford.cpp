#include "isopar/clifford.hpp"

#include <array>
#include <climits>
#include <mutex>

#include "isopar/error.hpp"

namespace isopar {

namespace {

// ---------------------------------------------------------------------------
// Octonion arithmetic on the basis e_0 (unit), e_1..e_7.
//
// Products of imaginary units follow the seven cyclic triples
//   (1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1) (6,7,2) (7,1,3),
// each meaning e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b, with reversed
// order giving the negative, and e_a^2 = -1.  Left multiplication by an
// imaginary unit is then a skew matrix squaring to -I, and for two distinct
// units the operators anticommute; the build re-checks all of this exactly.
// ---------------------------------------------------------------------------

struct OctEntry {
  int sign = 0;
  int idx = 0;
};

using OctTable = std::array<std::array<OctEntry, 8>, 8>;

OctTable make_octonion_table() {
  OctTable t{};
  for (int b = 0; b < 8; ++b) t[0][b] = {1, b};
  for (int a = 1; a < 8; ++a) {
    t[a][0] = {1, a};
    t[a][a] = {-1, 0};
  }
  constexpr int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                 {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
  for (const auto& tr : triples) {
    const int a = tr[0], b = tr[1], c = tr[2];
    t[a][b] = {1, c};
    t[b][c] = {1, a};
    t[c][a] = {1, b};
    t[b][a] = {-1, c};
    t[c][b] = {-1, a};
    t[a][c] = {-1, b};
  }
  return t;
}

const OctTable& octonion_table() {
  static const OctTable t = make_octonion_table();
  return t;
}

// Matrix of x -> e_g * x restricted to span{e_i : i in subset}.  The subset
// must be closed under that action (guarded below).
Mat<Scalar> left_mult(int g, const std::vector<int>& subset) {
  const OctTable& t = octonion_table();
  const int n = static_cast<int>(subset.size());
  Mat<Scalar> e(n, n);
  for (int c = 0; c < n; ++c) {
    const OctEntry& prod = t[g][subset[c]];
    int r = -1;
    for (int j = 0; j < n; ++j)
      if (subset[j] == prod.idx) {
        r = j;
        break;
      }
    if (r < 0)
      fail(Error::Kind::internal,
           "octonion subspace is not invariant under the chosen unit");
    e.at(r, c) = Scalar(prod.sign);
  }
  return e;
}

// Skew matrices E_1..E_{m-1} of size delta(m) with E_i^2 = -I and
// E_i E_j = -E_j E_i.  m = 2..4 live on quaternion-like invariant subspaces
// of the octonions, m = 5..8 on the full octonions, and m = 9 doubles the
// m = 8 family to dimension 16.
std::vector<Mat<Scalar>> irreducible_generators(int m) {
  const std::vector<int> quat = {0, 1, 2, 4};
  const std::vector<int> oct = {0, 1, 2, 3, 4, 5, 6, 7};
  switch (m) {
    case 1:
      return {};
    case 2:
      return {left_mult(1, {0, 1})};
    case 3:
      return {left_mult(1, quat), left_mult(2, quat)};
    case 4:
      return {left_mult(1, quat), left_mult(2, quat), left_mult(4, quat)};
    case 5:
    case 6:
    case 7:
    case 8: {
      std::vector<Mat<Scalar>> gens;
      for (int g = 1; g <= m - 1; ++g) gens.push_back(left_mult(g, oct));
      return gens;
    }
    case 9: {
      // Doubling: with D = diag(1,-1) and the rotation J = [[0,-1],[1,0]],
      // the operators E_i ⊗ D (i = 1..7) and I ⊗ J are eight anticommuting
      // complex structures on a 16-dimensional space.
      Mat<Scalar> d(2, 2), j(2, 2);
      d.at(0, 0) = Scalar(1);
      d.at(1, 1) = Scalar(-1);
      j.at(0, 1) = Scalar(-1);
      j.at(1, 0) = Scalar(1);
      std::vector<Mat<Scalar>> gens;
      for (const auto& e : irreducible_generators(8)) gens.push_back(kron(e, d));
      gens.push_back(kron(Mat<Scalar>::identity(8), j));
      return gens;
    }
    default:
      fail(Error::Kind::unsupported,
           "matrix construction is implemented for m <= 9");
  }
}

int delta_raw(int m) {
  if (m < 1) fail(Error::Kind::precondition, "delta requires m >= 1");
  static constexpr int base[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  long long mult = 1;
  int mm = m;
  while (mm > 8) {
    mm -= 8;
    mult *= 16;
    if (mult > INT_MAX) fail(Error::Kind::unsupported, "delta overflows int");
  }
  const long long v = mult * base[mm - 1];
  if (v > INT_MAX) fail(Error::Kind::unsupported, "delta overflows int");
  return static_cast<int>(v);
}

CliffordSystem build_unvalidated(int m, int k) {
  if (m < 1) fail(Error::Kind::precondition, "m must be at least 1");
  if (k < 1) fail(Error::Kind::precondition, "k must be at least 1");
  if (m > 9)
    fail(Error::Kind::unsupported,
         "matrix construction is implemented for m <= 9");
  const int d = delta_raw(m);
  const long long ll = static_cast<long long>(k) * d;
  if (2 * ll > 64)
    fail(Error::Kind::unsupported,
         "system size 2l = " + std::to_string(2 * ll) +
             " exceeds the desk-scale cap of 64");
  const int l = static_cast<int>(ll);

  CliffordSystem sys;
  sys.m = m;
  sys.k = k;
  sys.l = l;

  // P_0 = diag(I_l, -I_l), P_1 = antidiag(I_l, I_l),
  // P_{1+i} = [[0, E_i], [-E_i, 0]] with E_i the k-fold copy of the
  // irreducible generator (block diagonal, k blocks of size delta).
  Mat<Scalar> p0(2 * l, 2 * l), p1(2 * l, 2 * l);
  for (int i = 0; i < l; ++i) {
    p0.at(i, i) = Scalar(1);
    p0.at(l + i, l + i) = Scalar(-1);
    p1.at(i, l + i) = Scalar(1);
    p1.at(l + i, i) = Scalar(1);
  }
  sys.P.push_back(std::move(p0));
  sys.P.push_back(std::move(p1));

  const auto gens = irreducible_generators(m);
  const Mat<Scalar> ik = Mat<Scalar>::identity(k);
  for (const auto& g : gens) {
    const Mat<Scalar> e = kron(ik, g);
    Mat<Scalar> p(2 * l, 2 * l);
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < l; ++c) {
        if (e.at(r, c).is_zero()) continue;
        p.at(r, l + c) = e.at(r, c);
        p.at(l + r, c) = -e.at(r, c);
      }
    sys.P.push_back(std::move(p));
  }
  return sys;
}

// One-time constructive validation of the dimension table: build the
// irreducible system for every base case (and the first doubled case) and
// check all relations exactly.
void validate_table_once() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (int m = 1; m <= 9; ++m) {
      const CliffordSystem sys = build_unvalidated(m, 1);
      const CliffordReport rep = verify_clifford(sys);
      if (!rep.ok)
        fail(Error::Kind::internal,
             "dimension-table validation failed at m = " + std::to_string(m) +
                 ": " + rep.failures.front());
      if (sys.l != delta_raw(m))
        fail(Error::Kind::internal, "dimension-table validation size mismatch");
    }
  });
}

}  // namespace

int delta(int m) {
  const int v = delta_raw(m);  // argument check before the heavier validation
  validate_table_once();
  return v;
}

CliffordSystem build_clifford_system(int m, int k) {
  CliffordSystem sys = build_unvalidated(m, k);
  const CliffordReport rep = verify_clifford(sys);
  if (!rep.ok)
    fail(Error::Kind::internal,
         "constructed system failed verification: " + rep.failures.front());
  return sys;
}

CliffordReport verify_clifford(const CliffordSystem& sys) {
  CliffordReport rep;
  const int n = sys.P.empty() ? 0 : sys.P.front().rows;
  for (size_t i = 0; i < sys.P.size(); ++i)
    if (sys.P[i].rows != n || sys.P[i].cols != n)
      rep.failures.push_back("size:" + std::to_string(i));
  if (!rep.failures.empty()) {
    rep.ok = false;  // products below would be ill-shaped
    return rep;
  }
  const Mat<Scalar> id = Mat<Scalar>::identity(n);
  for (size_t i = 0; i < sys.P.size(); ++i)
    if (!sys.P[i].is_symmetric())
      rep.failures.push_back("symmetric:" + std::to_string(i));
  for (size_t i = 0; i < sys.P.size(); ++i)
    if (!(sys.P[i] * sys.P[i] == id))
      rep.failures.push_back("square:" + std::to_string(i));
  for (size_t i = 0; i < sys.P.size(); ++i)
    for (size_t j = i + 1; j < sys.P.size(); ++j)
      if (!(sys.P[i] * sys.P[j] + sys.P[j] * sys.P[i]).is_zero())
        rep.failures.push_back("anticommute:(" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
  rep.ok = rep.failures.empty();
  return rep;
}

std::vector<int> copies_permutation(int m, int k) {
  if (m < 1) fail(Error::Kind::precondition, "m must be at least 1");
  if (k < 1) fail(Error::Kind::precondition, "k must be at least 1");
  const int d = delta_raw(m);
  const int l = k * d;
  // Copy c occupies indices c*2d .. c*2d + 2d - 1 of the direct sum; its top
  // half interleaves into the built system's first l coordinates, its bottom
  // half into the last l.
  std::vector<int> perm(static_cast<size_t>(2) * l);
  for (int c = 0; c < k; ++c)
    for (int pos = 0; pos < 2 * d; ++pos)
      perm[static_cast<size_t>(c) * 2 * d + pos] =
          pos < d ? c * d + pos : l + c * d + (pos - d);
  return perm;
}

}  // namespace isopar
