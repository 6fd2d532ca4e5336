#pragma once

#include <optional>

#include "isopar/ideal.hpp"

namespace isopar {

using PolyMatrix = std::vector<std::vector<Poly>>;

enum class Verdict { regular, not_regular, inconclusive };

// Concrete refutation: at `stage`, either `factor` multiplies the stage
// polynomial into the previous ideal without lying there itself, or the
// accumulated ideal has become the whole ring.
struct Witness {
  enum class Kind { zero_divisor, empty_variety };
  int stage = -1;
  Kind kind = Kind::zero_divisor;
  Poly factor;
};

struct StageRecord {
  int stage = 0;
  bool proper = true;         // 1 not in (p_0..p_stage)
  bool colon_stable = false;  // direct pipeline: I_{k-1} : p_k == I_{k-1}
  std::optional<int> dim_v;   // codimension pipeline bookkeeping
  std::optional<int> dim_j;
  bool prime_certified = false;  // dim_j <= dim_v - 2 (empty J counts)
};

struct RegSeqCertificate {
  Verdict verdict = Verdict::inconclusive;
  std::string pipeline;  // "direct" or "generatereg"
  std::vector<StageRecord> stages;
  std::optional<Witness> witness;
  std::string note;
};

// Definition-level check: stage k passes iff the colon ideal is stable and
// the variety stays nonempty.  Complete (up to budget) and witness-producing.
RegSeqCertificate is_regular_direct(const std::vector<Poly>& ps,
                                    const Budget& budget = Budget{});

// Sufficient criterion for homogeneous equal-degree linearly independent
// generators: if at every stage the rank-drop locus J_k has codimension >= 2
// inside V_k, the sequence is regular (and every intermediate ideal prime).
// A failed margin is only ever "inconclusive" — the implication is one-way.
RegSeqCertificate certify_generatereg(const std::vector<Poly>& ps,
                                      const Budget& budget = Budget{});

struct SerreDetail {
  std::optional<int> dim_v, dim_j;
  std::string note;
};

// Reducedness criterion for a complete intersection cut out by `ps` (caller
// certifies regularity): the singular locus must have codimension >= 1.
bool serre_reduced(const std::vector<Poly>& ps,
                   const Budget& budget = Budget{},
                   SerreDetail* detail = nullptr);

// Primeness criterion for homogeneous `ps`: singular locus codimension >= 2.
// Connectedness comes free (the zero set is a cone through the origin).
bool serre_prime_homogeneous(const std::vector<Poly>& ps,
                             const Budget& budget = Budget{},
                             SerreDetail* detail = nullptr);

struct KoszulResult {
  PolyMatrix r;  // antisymmetric; q_a = sum_b r[a][b] p_b
  int solution_space_dim = 0;
  int degree_bound_used = 0;
};

// Decompose the syzygy q of ps into Koszul form by exact linear solve over
// all coefficient monomials of degree <= degree_bound - deg p; retries at
// higher bounds up to max component degree + 2 before giving up.
KoszulResult koszul_decompose(const std::vector<Poly>& ps,
                              const std::vector<Poly>& qs, int degree_bound,
                              const Budget& budget = Budget{});

struct SyzygySolution {
  PolyMatrix r;  // entries homogeneous of degree exactly one
  int solution_space_dim = 0;
};

// Specialized solver for quadric ps / cubic qs with degree-1 unknowns.
SyzygySolution syzygy_solve(const std::vector<Poly>& ps,
                            const std::vector<Poly>& qs);

}  // namespace isopar
