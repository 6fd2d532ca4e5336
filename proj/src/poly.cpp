#include "isopar/poly.hpp"

#include <algorithm>
#include <sstream>

namespace isopar {

void Poly::check_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring_ || !b.ring_)
    fail(Error::Kind::internal, "operation on ring-less polynomial");
  if (a.ring_ != b.ring_ && !a.ring_->same(*b.ring_))
    fail(Error::Kind::ring_mismatch,
         "polynomials live in different rings: (" + a.ring_->header() +
             ") vs (" + b.ring_->header() + ")");
}

Poly Poly::constant(RingPtr ring, Scalar c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.t_.emplace(Monomial::one(p.ring_->n()), std::move(c));
  return p;
}

Poly Poly::variable(RingPtr ring, int i) {
  Poly p(std::move(ring));
  if (i < 0 || i >= p.ring_->n())
    fail(Error::Kind::internal, "variable index out of range");
  p.t_.emplace(Monomial::var(p.ring_->n(), i), Scalar(1));
  return p;
}

Poly Poly::term(RingPtr ring, Monomial m, Scalar c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.t_.emplace(m, std::move(c));
  return p;
}

bool Poly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = t_.begin()->first.deg;
  return t_.rbegin()->first.deg == d;
}

long Poly::ext() const {
  long d = 0;
  for (const auto& [m, c] : t_) {
    if (c.ext() != 0) {
      if (d != 0 && d != c.ext())
        fail(Error::Kind::mixed_extension, "mixed extensions inside one polynomial");
      d = c.ext();
    }
  }
  return d;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_ring(*this, o);
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_ring(*this, o);
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::operator*(const Poly& o) const {
  check_same_ring(*this, o);
  Poly r(ring_);
  // iterate the smaller operand outside
  const Poly& a = t_.size() <= o.t_.size() ? *this : o;
  const Poly& b = t_.size() <= o.t_.size() ? o : *this;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(ma.mul(mb), ca * cb);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_same_ring(*this, o);
  return t_ == o.t_;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
  return r;
}

void Poly::sub_mul_term(const Scalar& c, const Monomial& m, const Poly& g) {
  for (const auto& [mg, cg] : g.t_) add_term(m.mul(mg), -(c * cg));
}

Poly Poly::pow(int k) const {
  if (k < 0) fail(Error::Kind::precondition, "negative power");
  Poly r = Poly::constant(ring_, Scalar(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Poly Poly::diff(int var) const {
  Poly r(ring_);
  for (const auto& [m, c] : t_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] -= 1;
    d.deg -= 1;
    r.add_term(d, c * Scalar(static_cast<long>(m.e[var])));
  }
  return r;
}

std::vector<Poly> Poly::gradient() const {
  std::vector<Poly> g;
  g.reserve(ring_->n());
  for (int i = 0; i < ring_->n(); ++i) g.push_back(diff(i));
  return g;
}

Poly Poly::laplacian() const {
  Poly r(ring_);
  for (int i = 0; i < ring_->n(); ++i) r += diff(i).diff(i);
  return r;
}

Poly grad_pair(const Poly& p, const Poly& q) {
  Poly::check_same_ring(p, q);
  Poly r(p.ring());
  for (int i = 0; i < p.ring()->n(); ++i) r += p.diff(i) * q.diff(i);
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != ring_->n())
    fail(Error::Kind::precondition, "substitute needs one image per variable");
  if (images.empty()) fail(Error::Kind::internal, "empty substitution");
  RingPtr target = images[0].ring();
  for (const auto& im : images) check_same_ring(images[0], im);
  // power cache per variable: images[i]^k computed once
  std::vector<std::vector<Poly>> pows(images.size());
  auto power = [&](int i, int k) -> const Poly& {
    auto& cache = pows[i];
    if (cache.empty()) {
      cache.push_back(Poly::constant(target, Scalar(1)));
      cache.push_back(images[i]);
    }
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Poly r(target);
  for (const auto& [m, c] : t_) {
    Poly acc = Poly::constant(target, c);
    for (int i = 0; i < m.n; ++i)
      if (m.e[i]) acc = acc * power(i, m.e[i]);
    r += acc;
  }
  return r;
}

Poly Poly::promoted(const RingPtr& target) const {
  std::vector<int> map(ring_->n());
  for (int i = 0; i < ring_->n(); ++i) {
    map[i] = target->index_of(ring_->vars[i]);
    if (map[i] < 0)
      fail(Error::Kind::ring_mismatch,
           "target ring lacks variable '" + ring_->vars[i] + "'");
  }
  Poly r(target);
  for (const auto& [m, c] : t_) {
    Monomial mm = Monomial::one(target->n());
    for (int i = 0; i < m.n; ++i) mm.e[map[i]] = m.e[i];
    mm.deg = m.deg;
    r.t_.emplace(mm, c);
  }
  return r;
}

std::map<int, Poly> Poly::homogeneous_components() const {
  std::map<int, Poly> comps;
  for (const auto& [m, c] : t_) {
    auto it = comps.find(m.deg);
    if (it == comps.end()) it = comps.emplace(m.deg, Poly(ring_)).first;
    it->second.t_.emplace(m, c);
  }
  return comps;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != ring_->n())
    fail(Error::Kind::precondition, "evaluation point has wrong dimension");
  Scalar total(0);
  for (const auto& [m, c] : t_) {
    Scalar v = c;
    for (int i = 0; i < m.n; ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

Scalar Poly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Scalar(0) : it->second;
}

std::pair<Monomial, Scalar> Poly::leading(const MonomialOrder& ord) const {
  if (t_.empty()) fail(Error::Kind::internal, "leading term of zero");
  if (ord.kind == MonomialOrder::Kind::grevlex && ord.perm.empty()) {
    auto it = t_.rbegin();
    return {it->first, it->second};
  }
  auto best = t_.begin();
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
    if (ord.cmp(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

std::string Poly::str(const MonomialOrder& ord) const {
  if (t_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Scalar>*> terms;
  terms.reserve(t_.size());
  for (const auto& t : t_) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* a, auto* b) { return ord.cmp(a->first, b->first) > 0; });
  std::ostringstream out;
  bool first = true;
  for (auto* t : terms) {
    const Monomial& m = t->first;
    Scalar c = t->second;
    std::string sep;
    if (c.composite()) {
      sep = first ? "" : " + ";
    } else if (c.negative_leading()) {
      sep = first ? "-" : " - ";
      c = -c;
    } else {
      sep = first ? "" : " + ";
    }
    out << sep;
    std::string cs = c.composite() ? "(" + c.str() + ")" : c.str();
    if (m.is_one()) {
      out << cs;
    } else {
      if (cs != "1") out << cs << "*";
      bool firstv = true;
      for (int i = 0; i < m.n; ++i) {
        if (!m.e[i]) continue;
        if (!firstv) out << "*";
        firstv = false;
        out << ring_->vars[i];
        if (m.e[i] > 1) out << "^" << m.e[i];
      }
    }
    first = false;
  }
  return out.str();
}

}  // namespace isopar
