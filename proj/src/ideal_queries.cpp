#include <algorithm>
#include <functional>
#include <set>

#include "isopar/ideal.hpp"

namespace isopar {

namespace {

// Fresh helper variable prepended to the ring (first position = eliminated
// block for MonomialOrder::elim_first).
RingPtr extend_front(const Ring& base, const std::string& stem,
                     std::string* chosen = nullptr) {
  std::string name = stem;
  int counter = 0;
  while (base.index_of(name) >= 0) name = stem + std::to_string(counter++);
  if (chosen) *chosen = name;
  std::vector<std::string> vars;
  vars.reserve(base.vars.size() + 1);
  vars.push_back(name);
  vars.insert(vars.end(), base.vars.begin(), base.vars.end());
  return Ring::make(vars);
}

bool uses_first_var(const Poly& p) {
  for (const auto& [m, c] : p.terms())
    if (m.e[0]) return true;
  return false;
}

}  // namespace

Poly restrict_poly(const Poly& p, const RingPtr& target) {
  const Ring& src = *p.ring();
  std::vector<int> map(static_cast<size_t>(src.n()), -2);  // -2 = unresolved
  Poly r = Poly::zero(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = Monomial::one(target->n());
    for (int i = 0; i < m.n; ++i) {
      if (!m.e[i]) continue;
      if (map[i] == -2) map[i] = target->index_of(src.vars[i]);
      if (map[i] < 0)
        fail(Error::Kind::ring_mismatch,
             "cannot restrict: variable '" + src.vars[i] + "' is used");
      mm.e[map[i]] = m.e[i];
    }
    mm.deg = m.deg;
    r.add_term(mm, c);
  }
  return r;
}

bool member(const Ideal& I, const Poly& p, const Budget& budget) {
  if (!p.ring()->same(*I.ring()))
    fail(Error::Kind::ring_mismatch, "membership test across rings");
  if (p.is_zero()) return true;
  const GroebnerBasis& gb = I.groebner(MonomialOrder::grevlex(), budget);
  return normal_form(p, gb).is_zero();
}

bool is_unit_ideal(const Ideal& I, const Budget& budget) {
  const GroebnerBasis& gb = I.groebner(MonomialOrder::grevlex(), budget);
  return gb.g.size() == 1 && gb.g[0].is_constant() && !gb.g[0].is_zero();
}

bool radical_member(const Ideal& I, const Poly& p, const Budget& budget) {
  if (!p.ring()->same(*I.ring()))
    fail(Error::Kind::ring_mismatch, "membership test across rings");
  if (p.is_zero()) return true;
  // p vanishes on V(I) iff adjoining the inverse of p (fresh variable w with
  // relation w p = 1) makes the ideal collapse to the whole ring.
  RingPtr ext = extend_front(*I.ring(), "w");
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.promoted(ext));
  Poly rel = Poly::constant(ext, Scalar(1)) -
             Poly::variable(ext, 0) * p.promoted(ext);
  gens.push_back(rel);
  return is_unit_ideal(Ideal(ext, std::move(gens)), budget);
}

Ideal ideal_quotient(const Ideal& I, const Poly& f, const Budget& budget) {
  if (!f.ring()->same(*I.ring()))
    fail(Error::Kind::ring_mismatch, "quotient by polynomial in another ring");
  if (f.is_zero())  // I : 0 is the whole ring
    return Ideal(I.ring(), {Poly::constant(I.ring(), Scalar(1))});

  // I : f = (I ∩ (f)) / f, and the intersection comes from eliminating t
  // out of  t I + (1-t) (f).
  RingPtr ext = extend_front(*I.ring(), "t");
  Poly t = Poly::variable(ext, 0);
  Poly one = Poly::constant(ext, Scalar(1));
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(t * g.promoted(ext));
  gens.push_back((one - t) * f.promoted(ext));

  Ideal J(ext, std::move(gens));
  const GroebnerBasis& gb = J.groebner(MonomialOrder::elim_first(1), budget);

  std::vector<Poly> quot;
  for (const auto& g : gb.g) {
    if (uses_first_var(g)) continue;
    Poly h = restrict_poly(g, I.ring());
    DivisionResult d = divide(h, {f}, MonomialOrder::grevlex(),
                              budget.max_degree);
    if (!d.r.is_zero())
      fail(Error::Kind::internal, "intersection element not divisible");
    quot.push_back(d.q[0]);
  }
  return Ideal(I.ring(), std::move(quot));
}

namespace {

// Minimum number of variables meeting every leading-term support; the
// complement of such a set is a maximal independent set of variables, whose
// size is the dimension.  Plain branch-and-bound, fine at desk scale.
int min_hitting_set(const std::vector<std::vector<int>>& supports, int nvars) {
  int best = nvars;
  std::vector<char> chosen(static_cast<size_t>(nvars), 0);
  auto rec = [&](auto&& self, size_t from, int size) -> void {
    if (size >= best) return;
    const std::vector<int>* unhit = nullptr;
    for (size_t s = from; s < supports.size(); ++s) {
      bool hit = false;
      for (int v : supports[s])
        if (chosen[v]) {
          hit = true;
          break;
        }
      if (!hit) {
        unhit = &supports[s];
        break;
      }
    }
    if (!unhit) {
      best = size;
      return;
    }
    for (int v : *unhit) {
      chosen[v] = 1;
      self(self, from, size + 1);
      chosen[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

std::optional<int> dimension(const Ideal& I, const Budget& budget) {
  const GroebnerBasis& gb = I.groebner(MonomialOrder::grevlex(), budget);
  if (gb.g.empty()) return I.ring()->n();
  if (is_unit_ideal(I, budget)) return std::nullopt;

  std::set<std::vector<int>> seen;
  for (const auto& g : gb.g) {
    Monomial lt = g.leading(gb.order).first;
    std::vector<int> sup;
    for (int i = 0; i < lt.n; ++i)
      if (lt.e[i]) sup.push_back(i);
    seen.insert(std::move(sup));
  }
  std::vector<std::vector<int>> supports(seen.begin(), seen.end());
  return I.ring()->n() - min_hitting_set(supports, I.ring()->n());
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& gens) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& g : gens) rows.push_back(g.gradient());
  return rows;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  size_t n = m.size();
  if (n == 0) fail(Error::Kind::internal, "determinant of empty matrix");
  if (n == 1) return m[0][0];
  RingPtr ring = m[0][0].ring();
  Poly det = Poly::zero(ring);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Poly cof = m[0][j] * poly_det(sub);
    if (j % 2) det -= cof;
    else det += cof;
  }
  return det;
}

namespace {

void combinations(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<size_t>(r));
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == r) {
      fn(idx);
      return;
    }
    for (int v = from; v <= n - (r - pos); ++v) {
      idx[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<Poly> minors_of(const std::vector<std::vector<Poly>>& m, int r) {
  std::vector<Poly> out;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (r <= 0 || r > rows || r > cols) return out;
  combinations(rows, r, [&](const std::vector<int>& ri) {
    combinations(cols, r, [&](const std::vector<int>& ci) {
      std::vector<std::vector<Poly>> sub;
      for (int i : ri) {
        std::vector<Poly> row;
        for (int j : ci) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
      }
      out.push_back(poly_det(sub));
    });
  });
  return out;
}

Ideal singular_locus(const Ideal& I, int r, const Budget& budget) {
  (void)budget;
  std::vector<Poly> gens = I.gens();
  for (Poly& mn : minors_of(jacobian(I.gens()), r)) gens.push_back(std::move(mn));
  return Ideal(I.ring(), std::move(gens));
}

int edim(const Ideal& I, const std::vector<Scalar>& z) {
  int n = I.ring()->n();
  if (static_cast<int>(z.size()) != n)
    fail(Error::Kind::precondition, "point size does not match ring");
  Mat<Scalar> jac(static_cast<int>(I.gens().size()), n);
  for (size_t i = 0; i < I.gens().size(); ++i)
    for (int j = 0; j < n; ++j)
      jac.at(static_cast<int>(i), j) = I.gens()[i].diff(j).evaluate(z);
  return n - rank(jac);
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget) {
  if (!a.ring()->same(*b.ring()))
    fail(Error::Kind::ring_mismatch, "comparing ideals across rings");
  const auto& ga = a.groebner(MonomialOrder::grevlex(), budget).g;
  const auto& gb = b.groebner(MonomialOrder::grevlex(), budget).g;
  return ga == gb;
}

}  // namespace isopar
