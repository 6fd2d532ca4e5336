#pragma once

#include <string>
#include <vector>

#include "isopar/clifford.hpp"
#include "isopar/fkm.hpp"
#include "isopar/poly.hpp"

namespace isopar {

// Ideal file: a `ring x, y, z` header line, an optional `scalar quadext:d`
// line, then one generator per line in the polynomial grammar.  `#` starts a
// comment; blank lines are skipped.  Parse failures carry the line number.
struct IdealFile {
  RingPtr ring;
  long quadext_d = 0;  // 0 = rational coefficients only
  std::vector<Poly> gens;
};

IdealFile load_ideal_file(const std::string& path);

// Clifford-system file: a `system <count> <rows> <cols>` header, then the
// matrices concatenated, one row per line, entries as reduced fractions.
std::vector<Mat<Scalar>> load_system_file(const std::string& path);
void save_system_file(const std::string& path,
                      const std::vector<Mat<Scalar>>& ps);

// Quartic-family file: ring header, optional `scalar quadext:d`, metadata
// lines (`g`, `m1`, `m2`, `provenance`), and the quartic itself as the single
// remaining expression line.  Loaded families carry no structured system, so
// downstream operations treat them as imported data.
CMData load_cm_file(const std::string& path);
void save_cm_file(const std::string& path, const CMData& cm);

// Comma-separated rational vector, e.g. "1,0,-1/2".
SVec parse_rational_vector(const std::string& text);

}  // namespace isopar
