#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isopar/error.hpp"

namespace isopar {

// Desk-scale caps: fixed-size exponent storage keeps monomials trivially
// copyable and cheap to compare, which dominates exact-arithmetic runtimes.
inline constexpr int kMaxVars = 24;
inline constexpr int kMaxExp = 65535;

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
  std::vector<std::string> vars;

  int n() const { return static_cast<int>(vars.size()); }
  int index_of(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }
  bool same(const Ring& o) const { return vars == o.vars; }
  std::string header() const {
    std::string s;
    for (int i = 0; i < n(); ++i) {
      if (i) s += ",";
      s += vars[i];
    }
    return s;
  }

  static RingPtr make(std::vector<std::string> names);
  // names plus `count` fresh variables derived from `stem` that do not clash.
  static RingPtr extend(const Ring& base, const std::string& stem, int count);
};

struct Monomial {
  uint16_t n = 0;    // ring size
  uint16_t deg = 0;  // cached total degree
  std::array<uint16_t, kMaxVars> e{};

  static Monomial one(int nvars) {
    Monomial m;
    m.n = static_cast<uint16_t>(nvars);
    return m;
  }
  static Monomial var(int nvars, int i, int exp = 1) {
    Monomial m = one(nvars);
    m.e[i] = static_cast<uint16_t>(exp);
    m.deg = static_cast<uint16_t>(exp);
    return m;
  }

  uint16_t operator[](int i) const { return e[i]; }
  bool is_one() const { return deg == 0; }

  Monomial mul(const Monomial& o) const {
    Monomial r = *this;
    long total = static_cast<long>(deg) + o.deg;
    if (total > kMaxExp)
      fail(Error::Kind::unsupported, "monomial degree exceeds desk-scale cap");
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
    r.deg = static_cast<uint16_t>(total);
    return r;
  }
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < n; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial div(const Monomial& o) const {  // assumes o | *this
    Monomial r = *this;
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
    r.deg = static_cast<uint16_t>(deg - o.deg);
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r = one(n);
    int d = 0;
    for (int i = 0; i < n; ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = static_cast<uint16_t>(d);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < n; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const {
    return n == o.n && deg == o.deg && e == o.e;
  }
};

// Graded reverse lexicographic comparison with identity variable order; this
// is the intrinsic order of every Poly term map.
inline int cmp_grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = a.n - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_grevlex(a, b) < 0;
  }
};

// Term orders selectable per operation.  `perm` (optional) lists variable
// indices from most to least significant.  `elim` is an internal block order:
// the first `block` permuted variables dominate, which makes lex-free
// elimination possible.
struct MonomialOrder {
  enum class Kind { lex, grevlex, elim };
  Kind kind = Kind::grevlex;
  std::vector<int> perm;  // empty = identity
  int block = 0;          // used by elim only

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::lex, {}, 0}; }
  static MonomialOrder elim_first(int nblock) {
    return {Kind::elim, {}, nblock};
  }

  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) < 0;
  }
  // Stable identity used as the per-ideal Groebner cache key.
  std::string key() const;
};

}  // namespace isopar
