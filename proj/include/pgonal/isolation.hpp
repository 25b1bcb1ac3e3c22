#pragma once

// Isolation of an equisymmetric stratum of cyclic p-gonal surfaces.
//
// Any automorphism b outside C_p = <alpha> normalizes C_p and descends to a
// rotation b^ of the branch sphere. b^ permutes the branch set S, sending a
// point with monodromy alpha^j to one with alpha^{u j} for a fixed unit u.
// Passing to a prime-order power, b^ has prime order q. A rotation fixes
// exactly two points of the sphere, so:
//   u != 1: no branch point is fixed, and the profile must satisfy
//           m_{u j} = m_j for all j;
//   u == 1: every profile class is permuted in q-cycles plus fixed points,
//           and at most two branch points in total can be fixed.
// A class admitting no such (q, u) is isolated.

#include <cstdint>
#include <vector>

#include "pgonal/monodromy.hpp"

namespace pgonal {

struct RotationCandidate {
  Int q;
  Unit u;
  Int min_fixed_in_s;
  bool has_cycle;

  friend bool operator==(const RotationCandidate&, const RotationCandidate&) = default;
};

class IsolationVerdict {
 public:
  explicit IsolationVerdict(std::vector<RotationCandidate> candidates) : candidates_(std::move(candidates)) {}

  bool isolated() const { return candidates_.empty(); }
  const std::vector<RotationCandidate>& candidates() const { return candidates_; }
  /// "Isolated" or "HasCandidates".
  const char* name() const { return isolated() ? "Isolated" : "HasCandidates"; }

  friend bool operator==(const IsolationVerdict&, const IsolationVerdict&) = default;

 private:
  std::vector<RotationCandidate> candidates_;
};

/// All feasible (q, u) pairs, sorted by (q, u).
std::vector<RotationCandidate> rotation_candidates(const StratumClass& cls);

IsolationVerdict isolation_verdict(const StratumClass& cls);

inline IsolationVerdict isolation_verdict(const BranchData& bd) { return isolation_verdict(canonical_form(bd)); }

/// Branch data for an isolated stratum of dimension d, following the
/// explicit constructions:
///   p >= 7, d >= 2: the (1^d, a, b, c) case construction, returned as is;
///   p = 5: d = 4 -> (1^3, 2, 3^2, 4) and d = 6 -> (1^6, 2, 3, 4);
///   d in {0, 1}: the first isolated class of census(p, d + 3);
///   remaining p = 5 dimensions: the isolated search of isolated_witness.
/// Throws NoIsolatedClass when a complete census finds no isolated class.
BranchData paper_witness(PrimeModulus p, Int d, std::uint64_t budget = kDefaultBudget);

/// Like paper_witness but the result is verified isolated. When the explicit
/// construction is not isolated, searches (1^{k-t}, tail) vectors with short
/// tails and then, if affordable, the full census.
BranchData isolated_witness(PrimeModulus p, Int d, std::uint64_t budget = kDefaultBudget);

}  // namespace pgonal
