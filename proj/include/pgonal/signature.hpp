#pragma once

// Fuchsian signatures (h; m_1, ..., m_k), their normalized hyperbolic areas
// and Teichmuller dimensions, and the subgroup signature induced by a finite
// transitive permutation representation.

#include <stdexcept>
#include <string>
#include <vector>

#include "pgonal/arith.hpp"

namespace pgonal {

class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Orbit genus plus an ascending multiset of periods, each >= 2.
class Signature {
 public:
  Signature(Int orbit_genus, std::vector<Int> periods);

  Int orbit_genus() const { return genus_; }
  const std::vector<Int>& periods() const { return periods_; }
  Int period_count() const { return static_cast<Int>(periods_.size()); }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

  /// "(0; 5,5,10)" or "(10; -)".
  std::string to_string() const;

 private:
  Int genus_;
  std::vector<Int> periods_;
};

/// Hyperbolic area divided by 2*pi: 2h - 2 + sum(1 - 1/m_i).
Rational normalized_area(const Signature& sig);

bool is_hyperbolic(const Signature& sig);

/// Complex dimension 3h - 3 + k of the Teichmuller space.
Int teichmuller_dim(const Signature& sig);

/// (0; p, ..., p) with k periods; k < 3 is rejected as non-hyperbolic.
Signature pgonal_signature(PrimeModulus p, Int k);

struct GenusDim {
  Int genus;
  Int dim;
  friend bool operator==(const GenusDim&, const GenusDim&) = default;
};

/// Genus (k-2)(p-1)/2 of the cyclic p-gonal cover and stratum dimension k-3.
GenusDim genus_and_dim(PrimeModulus p, Int k);

/// Genus from which the p-gonal morphism is unique: (p-1)^2 + 1.
Int uniqueness_bound(PrimeModulus p);

/// 0-based permutation of {0..N-1}; entry i is the image of point i.
using Permutation = std::vector<Int>;

/// Permutation images of the canonical generators, acting on the right.
/// `elliptic[i]` is the image of x_i, aligned with the sorted periods of the
/// source signature. Hyperbolic images are only supported for genus 0
/// sources, where they must be empty.
struct PermutationRep {
  Int degree = 1;
  std::vector<Permutation> hyperbolic;
  std::vector<Permutation> elliptic;
};

/// Signature of the index-N subgroup fixing a point of `rep`.
/// Every cycle of length l < m_i in the image of x_i contributes a period
/// m_i / l; the orbit genus is solved exactly from the area relation.
Signature induced_subgroup_signature(const Signature& sig, const PermutationRep& rep);

/// Degree-p representation of (0; p^k) where x_i acts as translation by r_i.
PermutationRep regular_cyclic_rep(PrimeModulus p, const std::vector<Int>& exponents);

}  // namespace pgonal
