#include <algorithm>
#include <set>

#include "isopar/ideal.hpp"

namespace isopar {

namespace {

// Largest term of p under ord.  Grevlex is the intrinsic map order, so that
// case is O(1); other orders scan.
std::pair<Monomial, Scalar> leading_under(const Poly& p,
                                          const MonomialOrder& ord) {
  return p.leading(ord);
}

void check_degree(const Poly& p, long max_degree) {
  if (p.degree() > max_degree)
    fail(Error::Kind::budget,
         "degree budget exceeded during reduction (max_degree=" +
             std::to_string(max_degree) + ")");
}

}  // namespace

DivisionResult divide(const Poly& p, const std::vector<Poly>& ds,
                      const MonomialOrder& ord, long max_degree) {
  for (const auto& d : ds) {
    Poly::check_same_ring(p, d);
    if (d.is_zero())
      fail(Error::Kind::precondition, "division by a zero polynomial");
  }
  std::vector<std::pair<Monomial, Scalar>> lts;
  lts.reserve(ds.size());
  for (const auto& d : ds) lts.push_back(leading_under(d, ord));

  DivisionResult out;
  out.q.assign(ds.size(), Poly::zero(p.ring()));
  out.r = Poly::zero(p.ring());
  Poly work = p;
  while (!work.is_zero()) {
    check_degree(work, max_degree);
    auto [m, c] = leading_under(work, ord);
    bool reduced = false;
    for (size_t k = 0; k < ds.size(); ++k) {
      if (!lts[k].first.divides(m)) continue;
      Monomial shift = m.div(lts[k].first);
      Scalar factor = c / lts[k].second;
      work.sub_mul_term(factor, shift, ds[k]);
      out.q[k].add_term(shift, factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.r.add_term(m, c);
      work.add_term(m, -c);  // removes the term exactly
    }
  }
  return out;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& basis,
                 const MonomialOrder& ord, long max_degree) {
  // Same loop as divide() without quotient bookkeeping.
  for (const auto& d : basis) Poly::check_same_ring(p, d);
  std::vector<std::pair<Monomial, Scalar>> lts;
  lts.reserve(basis.size());
  for (const auto& d : basis) lts.push_back(leading_under(d, ord));

  Poly r = Poly::zero(p.ring());
  Poly work = p;
  while (!work.is_zero()) {
    check_degree(work, max_degree);
    auto [m, c] = leading_under(work, ord);
    bool reduced = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (!lts[k].first.divides(m)) continue;
      work.sub_mul_term(c / lts[k].second, m.div(lts[k].first), basis[k]);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return r;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.g, gb.order);
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  auto [mf, cf] = f.leading(ord);
  auto [mg, cg] = g.leading(ord);
  Monomial l = mf.lcm(mg);
  Poly a = Poly::zero(f.ring());
  a.add_term(l.div(mf), Scalar(1) / cf);
  Poly b = Poly::zero(g.ring());
  b.add_term(l.div(mg), Scalar(1) / cg);
  return a * f - b * g;
}

namespace {

// Interreduce to a fixpoint, make monic, sort descending by leading term.
// Every replacement g_i <- nf(g_i, rest) preserves the generated ideal, so
// this is safe on raw generators; applied to a completed Buchberger basis it
// yields the unique reduced basis (redundant elements reduce to zero).
std::vector<Poly> reduce_basis(std::vector<Poly> g, const MonomialOrder& ord,
                               long max_degree) {
  g.erase(std::remove_if(g.begin(), g.end(),
                         [](const Poly& p) { return p.is_zero(); }),
          g.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      std::vector<Poly> others;
      for (size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      Poly nf = normal_form(g[i], others, ord, max_degree);
      if (nf == g[i]) continue;
      changed = true;
      if (nf.is_zero()) {
        g.erase(g.begin() + static_cast<long>(i));
        --i;
      } else {
        g[i] = std::move(nf);
      }
    }
  }
  for (auto& p : g) {
    Scalar lc = p.leading(ord).second;
    if (!lc.is_one()) p = p.scaled(lc.inverse());
  }
  std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
    return ord.less(b.leading(ord).first, a.leading(ord).first);
  });
  return g;
}

struct Pair {
  int deg;  // total degree of lcm(LT_i, LT_j): selection key
  int i, j;
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->same(*ring_))
      fail(Error::Kind::ring_mismatch, "generator lives in a different ring");
    gens_.push_back(std::move(g));
  }
  cache_ = std::make_shared<CacheBox>();
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord,
                                     const Budget& budget) const {
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->by_order.find(ord.key());
    if (it != cache_->by_order.end()) return *it->second;
  }

  auto gb = std::make_shared<GroebnerBasis>();
  gb->order = ord;
  std::vector<Poly> basis = reduce_basis(gens_, ord, budget.max_degree);

  std::set<Pair> queue;
  std::set<std::pair<int, int>> done;  // treated or criterion-eliminated
  auto push_pairs_with = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = basis[i].leading(ord).first.lcm(basis[j].leading(ord).first);
      queue.insert({l.deg, i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_with(j);

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    done.insert({pr.i, pr.j});
    if (++gb->pairs_processed > budget.max_pairs)
      fail(Error::Kind::budget, "pair budget exceeded (max_pairs=" +
                                    std::to_string(budget.max_pairs) + ")");

    const Monomial mi = basis[pr.i].leading(ord).first;
    const Monomial mj = basis[pr.j].leading(ord).first;
    // product criterion: coprime leading monomials always reduce to zero
    if (mi.coprime(mj)) continue;
    // chain criterion: some k with LT_k | lcm and both (i,k), (j,k) treated
    Monomial l = mi.lcm(mj);
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading(ord).first.divides(l)) continue;
      auto key = [&](int a, int b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
    }
    if (skip) continue;

    Poly s = spoly(basis[pr.i], basis[pr.j], ord);
    ++gb->reductions;
    Poly nf = normal_form(s, basis, ord, budget.max_degree);
    if (nf.is_zero()) continue;
    Scalar lc = nf.leading(ord).second;
    if (!lc.is_one()) nf = nf.scaled(lc.inverse());
    gb->max_degree_seen = std::max(gb->max_degree_seen, nf.degree());
    basis.push_back(std::move(nf));
    if (static_cast<long>(basis.size()) > budget.max_basis)
      fail(Error::Kind::budget, "basis budget exceeded (max_basis=" +
                                    std::to_string(budget.max_basis) + ")");
    push_pairs_with(static_cast<int>(basis.size()) - 1);
  }

  gb->g = reduce_basis(std::move(basis), ord, budget.max_degree);
  for (const auto& p : gb->g)
    gb->max_degree_seen = std::max(gb->max_degree_seen, p.degree());

  std::lock_guard<std::mutex> lk(cache_->mu);
  auto [it, fresh] =
      cache_->by_order.emplace(ord.key(), std::move(gb));
  return *it->second;  // if another thread won the race, keep its result
}

bool is_groebner_basis(const std::vector<Poly>& g, const MonomialOrder& ord) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) {
      Poly s = spoly(g[i], g[j], ord);
      if (!normal_form(s, g, ord, Budget{}.max_degree * 4).is_zero())
        return false;
    }
  return true;
}

}  // namespace isopar
