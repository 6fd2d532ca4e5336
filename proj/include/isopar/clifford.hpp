#pragma once

#include <string>
#include <vector>

#include "isopar/linalg.hpp"

namespace isopar {

// A family P_0,...,P_m of symmetric orthogonal matrices on a 2l-dimensional
// space satisfying P_i P_j + P_j P_i = 2 delta_ij I, with exact entries.
struct CliffordSystem {
  int m = 0;
  int k = 0;  // number of irreducible copies (0 when unknown, e.g. imported)
  int l = 0;  // half the ambient dimension
  std::vector<Mat<Scalar>> P;  // m+1 matrices, each (2l) x (2l)
};

struct CliffordReport {
  bool ok = true;
  // One entry per failed relation: "size:i", "symmetric:i", "square:i",
  // "anticommute:(i,j)".
  std::vector<std::string> failures;
};

// Dimension of an irreducible module of the Clifford algebra on m-1
// generators: 1,2,4,4,8,8,8,8 for m = 1..8, then delta(m+8) = 16*delta(m).
// The table is re-validated once per process by building the irreducible
// systems for m = 1..9 and checking every relation exactly.
int delta(int m);

// Build the standard system with l = k*delta(m): k copies of the irreducible
// representation, assembled in block form.  Self-validates before returning.
// Supported for m <= 9 and 2l <= 64.
CliffordSystem build_clifford_system(int m, int k);

// Check symmetry, orthogonality, and anticommutation exactly.
CliffordReport verify_clifford(const CliffordSystem& sys);

// Permutation sigma with the property that the block-diagonal direct sum of k
// irreducible systems, conjugated by sigma (row/column index r of the sum
// lands at sigma[r] in the built basis), equals build_clifford_system(m, k).
std::vector<int> copies_permutation(int m, int k);

}  // namespace isopar
