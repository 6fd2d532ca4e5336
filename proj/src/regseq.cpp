#include <algorithm>
#include <functional>
#include <set>

#include "isopar/regseq.hpp"

namespace isopar {

namespace {

RingPtr common_ring(const std::vector<Poly>& ps) {
  if (ps.empty())
    fail(Error::Kind::precondition, "empty polynomial sequence");
  for (const auto& p : ps) Poly::check_same_ring(ps[0], p);
  return ps[0].ring();
}

}  // namespace

RegSeqCertificate is_regular_direct(const std::vector<Poly>& ps,
                                    const Budget& budget) {
  RingPtr ring = common_ring(ps);
  RegSeqCertificate cert;
  cert.pipeline = "direct";

  std::vector<Poly> acc;
  Ideal prev(ring, {});
  try {
    for (int k = 0; k < static_cast<int>(ps.size()); ++k) {
      StageRecord rec;
      rec.stage = k;

      Ideal colon = ideal_quotient(prev, ps[k], budget);
      rec.colon_stable = ideal_equal(colon, prev, budget);
      acc.push_back(ps[k]);
      Ideal cur(ring, acc);
      rec.proper = !is_unit_ideal(cur, budget);
      cert.stages.push_back(rec);

      if (!rec.colon_stable) {
        // some basis element of the colon multiplies p_k into the previous
        // ideal without lying there itself
        Witness w;
        w.stage = k;
        w.kind = Witness::Kind::zero_divisor;
        bool found = false;
        for (const auto& f : colon.groebner(MonomialOrder::grevlex(), budget).g) {
          if (member(prev, f, budget)) continue;
          if (!member(prev, f * ps[k], budget))
            fail(Error::Kind::internal, "colon witness fails replay");
          w.factor = f;
          found = true;
          break;
        }
        if (!found)
          fail(Error::Kind::internal, "unstable colon without witness");
        cert.witness = w;
        cert.verdict = Verdict::not_regular;
        return cert;
      }
      if (!rec.proper) {
        Witness w;
        w.stage = k;
        w.kind = Witness::Kind::empty_variety;
        cert.witness = w;
        cert.verdict = Verdict::not_regular;
        cert.note = "ideal reaches the whole ring at stage " +
                    std::to_string(k);
        return cert;
      }
      prev = cur;
    }
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::budget) throw;
    cert.verdict = Verdict::inconclusive;
    cert.note = e.what();
    return cert;
  }
  cert.verdict = Verdict::regular;
  return cert;
}

namespace {

// Exact linear independence of the generators as vectors of coefficients.
bool linearly_independent(const std::vector<Poly>& ps) {
  std::set<Monomial, GrevlexLess> mons;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) mons.insert(m);
  std::vector<Monomial> cols(mons.begin(), mons.end());
  Mat<Scalar> a(static_cast<int>(ps.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      a.at(static_cast<int>(i), static_cast<int>(j)) = ps[i].coeff(cols[j]);
  return rank(a) == static_cast<int>(ps.size());
}

}  // namespace

RegSeqCertificate certify_generatereg(const std::vector<Poly>& ps,
                                      const Budget& budget) {
  RingPtr ring = common_ring(ps);
  for (const auto& p : ps) {
    if (!p.is_homogeneous() || p.degree() < 1)
      fail(Error::Kind::precondition,
           "codimension pipeline needs homogeneous generators of degree >= 1");
    if (p.degree() != ps[0].degree())
      fail(Error::Kind::precondition,
           "codimension pipeline needs equal-degree generators");
  }
  if (!linearly_independent(ps))
    fail(Error::Kind::precondition, "generators are linearly dependent");

  RegSeqCertificate cert;
  cert.pipeline = "generatereg";
  bool all_ok = true;
  try {
    std::vector<Poly> acc;
    const int last = static_cast<int>(ps.size()) - 1;
    for (int k = 0; k < static_cast<int>(ps.size()); ++k) {
      acc.push_back(ps[k]);
      Ideal v(ring, acc);
      Ideal j = singular_locus(v, k + 1, budget);
      StageRecord rec;
      rec.stage = k;
      rec.dim_v = dimension(v, budget);
      rec.dim_j = dimension(j, budget);
      rec.proper = rec.dim_v.has_value();
      if (!rec.dim_v) {
        rec.prime_certified = false;  // variety collapsed: hypothesis broken
      } else if (!rec.dim_j) {
        rec.prime_certified = true;  // empty singular locus
      } else {
        rec.prime_certified = *rec.dim_j <= *rec.dim_v - 2;
      }
      // The criterion asks for the codimension-2 margin at every stage
      // EXCEPT the last: primeness of I_{k} makes the next generator a
      // non-zerodivisor once it avoids I_{k}, which the equal-degree
      // linear-independence precheck already guarantees, and no generator
      // follows the last stage.  The final record is reported as observed
      // but does not gate the verdict.
      if (!rec.prime_certified && k < last) {
        all_ok = false;
        if (cert.note.empty())
          cert.note = "codimension margin below 2 at stage " +
                      std::to_string(k) + "; criterion is one-directional";
      }
      if (!rec.proper) all_ok = false;
      cert.stages.push_back(rec);
    }
    if (all_ok && last >= 1 && !cert.stages[last].prime_certified)
      cert.note =
          "final-stage margin reported only; the criterion does not need it";
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::budget) throw;
    cert.verdict = Verdict::inconclusive;
    cert.note = e.what();
    return cert;
  }
  cert.verdict = all_ok ? Verdict::regular : Verdict::inconclusive;
  return cert;
}

namespace {

bool serre_core(const std::vector<Poly>& ps, const Budget& budget, int slack,
                SerreDetail* detail) {
  RingPtr ring = common_ring(ps);
  Ideal v(ring, ps);
  Ideal j = singular_locus(v, static_cast<int>(ps.size()), budget);
  SerreDetail d;
  d.dim_v = dimension(v, budget);
  d.dim_j = dimension(j, budget);
  bool ok;
  if (!d.dim_v) {
    ok = false;
    d.note = "variety is empty";
  } else if (!d.dim_j) {
    ok = true;
    d.note = "singular locus is empty";
  } else {
    ok = *d.dim_j <= *d.dim_v - slack;
  }
  if (detail) *detail = d;
  return ok;
}

}  // namespace

bool serre_reduced(const std::vector<Poly>& ps, const Budget& budget,
                   SerreDetail* detail) {
  return serre_core(ps, budget, 1, detail);
}

bool serre_prime_homogeneous(const std::vector<Poly>& ps, const Budget& budget,
                             SerreDetail* detail) {
  for (const auto& p : ps)
    if (!p.is_homogeneous() || p.degree() < 1)
      fail(Error::Kind::precondition,
           "primeness criterion needs homogeneous generators of degree >= 1");
  bool ok = serre_core(ps, budget, 2, detail);
  if (detail && ok)
    detail->note += (detail->note.empty() ? "" : "; ") +
                    std::string("cone through the origin: connected");
  return ok;
}

// ------------------------------------------------------- syzygy solvers ----

namespace {

// All monomials of total degree <= maxdeg, ascending (degree, then grevlex).
std::vector<Monomial> monomials_up_to(int n, int maxdeg) {
  std::vector<Monomial> out;
  Monomial m = Monomial::one(n);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.e[var] = static_cast<uint16_t>(e);
      m.deg = static_cast<uint16_t>(m.deg + e);
      self(self, var + 1, left - e);
      m.deg = static_cast<uint16_t>(m.deg - e);
      m.e[var] = 0;
    }
  };
  if (maxdeg >= 0) rec(rec, 0, maxdeg);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

struct RowKeyLess {
  bool operator()(const std::pair<int, Monomial>& x,
                  const std::pair<int, Monomial>& y) const {
    if (x.first != y.first) return x.first < y.first;
    return GrevlexLess{}(x.second, y.second);
  }
};

// Find antisymmetric r with q_a = sum_b r_ab p_b, where r_ab (a < b) ranges
// over the span of `allowed(a, b)`.  Returns nullopt when inconsistent.
std::optional<std::pair<PolyMatrix, int>> solve_antisym(
    const std::vector<Poly>& ps, const std::vector<Poly>& qs,
    const std::function<std::vector<Monomial>(int, int)>& allowed) {
  const int m = static_cast<int>(ps.size());
  RingPtr ring = ps[0].ring();
  const int n = ring->n();

  struct Col {
    int a, b;
    Monomial mon;
  };
  std::vector<Col> cols;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (const Monomial& mon : allowed(a, b)) cols.push_back({a, b, mon});

  // rows: (equation index, monomial) for every monomial that can appear
  std::map<std::pair<int, Monomial>, int, RowKeyLess> row_of;
  auto touch = [&](int eq, const Monomial& mon) {
    row_of.emplace(std::make_pair(eq, mon), 0);
  };
  for (int a = 0; a < m; ++a)
    for (const auto& [mon, c] : qs[a].terms()) touch(a, mon);
  for (const auto& col : cols) {
    for (const auto& [mon, c] : ps[col.b].terms())
      touch(col.a, col.mon.mul(mon));
    for (const auto& [mon, c] : ps[col.a].terms())
      touch(col.b, col.mon.mul(mon));
  }
  int nrows = 0;
  for (auto& [key, idx] : row_of) idx = nrows++;

  Mat<Scalar> a(nrows, static_cast<int>(cols.size()));
  std::vector<Scalar> rhs(static_cast<size_t>(nrows), Scalar(0));
  for (int e = 0; e < m; ++e)
    for (const auto& [mon, c] : qs[e].terms())
      rhs[static_cast<size_t>(row_of.at({e, mon}))] = c;
  for (size_t j = 0; j < cols.size(); ++j) {
    const Col& col = cols[j];
    // contribution of r_{ab} = x^mon to equation a: + x^mon * p_b
    for (const auto& [mon, c] : ps[col.b].terms()) {
      int row = row_of.at({col.a, col.mon.mul(mon)});
      a.at(row, static_cast<int>(j)) += c;
    }
    // and to equation b via r_{ba} = -r_{ab}: - x^mon * p_a
    for (const auto& [mon, c] : ps[col.a].terms()) {
      int row = row_of.at({col.b, col.mon.mul(mon)});
      a.at(row, static_cast<int>(j)) -= c;
    }
  }

  auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;

  PolyMatrix r(static_cast<size_t>(m),
               std::vector<Poly>(static_cast<size_t>(m), Poly::zero(ring)));
  for (size_t j = 0; j < cols.size(); ++j) {
    const Scalar& c = sol->first[j];
    if (c.is_zero()) continue;
    const Col& col = cols[j];
    r[col.a][col.b].add_term(col.mon, c);
    r[col.b][col.a].add_term(col.mon, -c);
  }
  (void)n;
  return std::make_pair(std::move(r), sol->second);
}

void check_syzygy(const std::vector<Poly>& ps, const std::vector<Poly>& qs) {
  if (ps.size() != qs.size())
    fail(Error::Kind::precondition, "sequence and syzygy sizes differ");
  Poly sum = Poly::zero(ps[0].ring());
  for (size_t i = 0; i < ps.size(); ++i) sum += ps[i] * qs[i];
  if (!sum.is_zero())
    fail(Error::Kind::precondition,
         "not a syzygy: sum p_a q_a is " + sum.str());
}

}  // namespace

KoszulResult koszul_decompose(const std::vector<Poly>& ps,
                              const std::vector<Poly>& qs, int degree_bound,
                              const Budget& budget) {
  (void)budget;
  RingPtr ring = common_ring(ps);
  for (const auto& q : qs) Poly::check_same_ring(ps[0], q);
  check_syzygy(ps, qs);

  int maxq = 0;
  for (const auto& q : qs) maxq = std::max(maxq, q.degree());
  if (degree_bound < maxq)
    fail(Error::Kind::precondition,
         "degree bound below the largest syzygy component degree");
  int cap = std::max(degree_bound, maxq + 2);

  for (int bound = degree_bound; bound <= cap; ++bound) {
    auto allowed = [&](int a, int b) {
      int d = bound - std::max(std::max(ps[a].degree(), ps[b].degree()), 0);
      return monomials_up_to(ring->n(), d);
    };
    auto sol = solve_antisym(ps, qs, allowed);
    if (sol) {
      KoszulResult out;
      out.r = std::move(sol->first);
      out.solution_space_dim = sol->second;
      out.degree_bound_used = bound;
      return out;
    }
  }
  fail(Error::Kind::budget,
       "no antisymmetric decomposition up to degree cap " +
           std::to_string(cap));
}

SyzygySolution syzygy_solve(const std::vector<Poly>& ps,
                            const std::vector<Poly>& qs) {
  RingPtr ring = common_ring(ps);
  for (const auto& q : qs) Poly::check_same_ring(ps[0], q);
  check_syzygy(ps, qs);

  std::vector<Monomial> linear;
  for (int i = 0; i < ring->n(); ++i)
    linear.push_back(Monomial::var(ring->n(), i));
  auto sol = solve_antisym(ps, qs, [&](int, int) { return linear; });
  if (!sol)
    fail(Error::Kind::precondition,
         "no degree-1 antisymmetric solution: sequence not regular or data "
         "corrupted");
  return {std::move(sol->first), sol->second};
}

}  // namespace isopar
