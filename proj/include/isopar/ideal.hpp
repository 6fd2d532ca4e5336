#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "isopar/linalg.hpp"
#include "isopar/poly.hpp"

namespace isopar {

// Result of a Buchberger run: the reduced monic basis (sorted descending by
// leading term under `order`) plus bookkeeping for reports.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly> g;
  long pairs_processed = 0;
  long reductions = 0;
  int max_degree_seen = 0;
};

// Immutable generator list with a per-order Groebner cache.  Copies share the
// cache (generators never change after construction, so this is sound).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // Reduced Groebner basis under `ord`; computed once per order and cached.
  const GroebnerBasis& groebner(const MonomialOrder& ord = MonomialOrder::grevlex(),
                                const Budget& budget = Budget{}) const;

 private:
  struct CacheBox {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> by_order;
  };
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<CacheBox> cache_;
};

// ------------------------------------------------------------ division ----

struct DivisionResult {
  std::vector<Poly> q;  // parallel to the divisor list
  Poly r;
};

// Multivariate division of p by the ordered list ds: p = sum q_i ds_i + r,
// where no term of r is divisible by any LT(ds_i).  Deterministic: always
// reduces the largest reducible term by the first matching divisor.
DivisionResult divide(const Poly& p, const std::vector<Poly>& ds,
                      const MonomialOrder& ord,
                      long max_degree = Budget{}.max_degree);

Poly normal_form(const Poly& p, const std::vector<Poly>& basis,
                 const MonomialOrder& ord,
                 long max_degree = Budget{}.max_degree);
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Definitive certificate: every S-polynomial of the list reduces to zero.
bool is_groebner_basis(const std::vector<Poly>& g, const MonomialOrder& ord);

// --------------------------------------------------------- ideal queries ----

bool member(const Ideal& I, const Poly& p, const Budget& budget = Budget{});

// p vanishes on V(I), i.e. some power of p lies in I.
bool radical_member(const Ideal& I, const Poly& p,
                    const Budget& budget = Budget{});

// The colon ideal I : f = {g : g f in I}.
Ideal ideal_quotient(const Ideal& I, const Poly& f,
                     const Budget& budget = Budget{});

// Krull dimension of the quotient ring; nullopt when V(I) is empty (unit
// ideal).  The zero ideal has dimension n.
std::optional<int> dimension(const Ideal& I, const Budget& budget = Budget{});

bool is_unit_ideal(const Ideal& I, const Budget& budget = Budget{});

// Generators plus all r x r minors of their Jacobian.
Ideal singular_locus(const Ideal& I, int r, const Budget& budget = Budget{});

// Embedded tangent-space dimension at a point: n - rank Jac(z).
int edim(const Ideal& I, const std::vector<Scalar>& z);

// Same ideal as sets, decided by comparing reduced bases.
bool ideal_equal(const Ideal& a, const Ideal& b,
                 const Budget& budget = Budget{});

// ---------------------------------------------------- polynomial matrices ----

// Rows indexed by generators, columns by ring variables.
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& gens);

// Laplace expansion along the first row; fine at desk scale (r <= 5 or so).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

// All r x r minors (row and column subsets in lexicographic subset order).
std::vector<Poly> minors_of(const std::vector<std::vector<Poly>>& m, int r);

// Rebuild p in `target`, which must contain every variable p actually uses
// (unused source variables may be absent — this is how elimination results
// drop their helper variable).
Poly restrict_poly(const Poly& p, const RingPtr& target);

}  // namespace isopar
