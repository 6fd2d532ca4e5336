#include "isopar/monomial.hpp"

#include <algorithm>
#include <set>

namespace isopar {

static bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

RingPtr Ring::make(std::vector<std::string> names) {
  if (names.empty())
    fail(Error::Kind::precondition, "ring needs at least one variable");
  if (static_cast<int>(names.size()) > kMaxVars)
    fail(Error::Kind::unsupported,
         "ring exceeds desk-scale cap of " + std::to_string(kMaxVars) +
             " variables");
  std::set<std::string> seen;
  for (const auto& v : names) {
    if (!valid_ident(v))
      fail(Error::Kind::parse, "invalid variable name '" + v + "'");
    if (v == "sqrt")
      fail(Error::Kind::parse, "'sqrt' is reserved and cannot name a variable");
    if (!seen.insert(v).second)
      fail(Error::Kind::parse, "duplicate variable name '" + v + "'");
  }
  auto r = std::make_shared<Ring>();
  r->vars = std::move(names);
  return r;
}

RingPtr Ring::extend(const Ring& base, const std::string& stem, int count) {
  std::vector<std::string> names = base.vars;
  int suffix = 0;
  for (int c = 0; c < count; ++c) {
    std::string cand;
    do {
      cand = stem + std::to_string(suffix++);
    } while (base.index_of(cand) >= 0);
    names.push_back(cand);
  }
  return make(std::move(names));
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  auto at = [&](const Monomial& m, int pos) {
    return perm.empty() ? m.e[pos] : m.e[perm[pos]];
  };
  switch (kind) {
    case Kind::grevlex: {
      if (perm.empty()) return cmp_grevlex(a, b);
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = a.n - 1; i >= 0; --i)
        if (at(a, i) != at(b, i)) return at(a, i) > at(b, i) ? -1 : 1;
      return 0;
    }
    case Kind::lex: {
      for (int i = 0; i < a.n; ++i)
        if (at(a, i) != at(b, i)) return at(a, i) < at(b, i) ? -1 : 1;
      return 0;
    }
    case Kind::elim: {
      long da = 0, db = 0;
      for (int i = 0; i < block; ++i) {
        da += at(a, i);
        db += at(b, i);
      }
      if (da != db) return da < db ? -1 : 1;
      for (int i = block - 1; i >= 0; --i)
        if (at(a, i) != at(b, i)) return at(a, i) > at(b, i) ? -1 : 1;
      long ra = a.deg - da, rb = b.deg - db;
      if (ra != rb) return ra < rb ? -1 : 1;
      for (int i = a.n - 1; i >= block; --i)
        if (at(a, i) != at(b, i)) return at(a, i) > at(b, i) ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::string s;
  switch (kind) {
    case Kind::lex: s = "lex"; break;
    case Kind::grevlex: s = "grevlex"; break;
    case Kind::elim: s = "elim" + std::to_string(block); break;
  }
  if (!perm.empty()) {
    s += ":";
    for (size_t i = 0; i < perm.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(perm[i]);
    }
  }
  return s;
}

}  // namespace isopar
