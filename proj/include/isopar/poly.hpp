#pragma once

#include <climits>
#include <map>
#include <optional>
#include <vector>

#include "isopar/monomial.hpp"
#include "isopar/scalar.hpp"

namespace isopar {

// Degree of the zero polynomial (printed as "-inf" in reports).
inline constexpr int kDegNegInf = INT_MIN;

// Sparse multivariate polynomial with exact scalar coefficients.  The term
// map is keyed grevlex-ascending; no zero coefficients are ever stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrevlexLess>;

  Poly() = default;  // zero in a null ring; usable only as assignment target
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, Scalar c);
  static Poly variable(RingPtr ring, int i);
  static Poly term(RingPtr ring, Monomial m, Scalar c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return t_; }
  int num_terms() const { return static_cast<int>(t_.size()); }
  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? kDegNegInf : t_.rbegin()->first.deg; }
  bool is_homogeneous() const;
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
  }
  // Largest extension d among coefficients (0 = rational); throws on mixes.
  long ext() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Scalar& c) const;
  // this -= c * m * g   (the inner loop of polynomial reduction)
  void sub_mul_term(const Scalar& c, const Monomial& m, const Poly& g);
  void add_term(const Monomial& m, const Scalar& c);
  Poly pow(int k) const;

  Poly diff(int var) const;
  std::vector<Poly> gradient() const;
  Poly laplacian() const;

  // Simultaneous substitution x_i -> images[i]; all images share one target
  // ring (which may differ from this poly's ring).
  Poly substitute(const std::vector<Poly>& images) const;
  // Reinterpret in `target` by variable name lookup (every variable of the
  // source ring must exist in the target).
  Poly promoted(const RingPtr& target) const;

  std::map<int, Poly> homogeneous_components() const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  Scalar coeff(const Monomial& m) const;

  // Leading data with respect to an arbitrary order (O(1) for default
  // grevlex, a scan otherwise).
  std::pair<Monomial, Scalar> leading(const MonomialOrder& ord) const;

  std::string str(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  static void check_same_ring(const Poly& a, const Poly& b);

 private:
  RingPtr ring_;
  Terms t_;
};

// <p, q> := sum_i dp/dx_i * dq/dx_i  (Euclidean gradient pairing)
Poly grad_pair(const Poly& p, const Poly& q);

}  // namespace isopar
