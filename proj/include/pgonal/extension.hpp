#pragma once

// Explicit one-step extensions C_p -> G -> C_n certifying that a cyclic
// p-gonal action extends to a larger group, hence the stratum is not
// isolated.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgonal/monodromy.hpp"
#include "pgonal/signature.hpp"

namespace pgonal {

/// (a, b) in Z_p x Z_n. Ordered by (b, a), the witness search order.
struct GroupElement {
  Int a = 0;
  Int b = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& x, const GroupElement& y) {
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.a <=> y.a;
  }
};

/// Z_p x| Z_n with (a, b)(a', b') = (a + u^b a', b + b'). Requires u^n = 1.
class MetacyclicGroup {
 public:
  MetacyclicGroup(PrimeModulus p, Int n, Unit u);

  PrimeModulus p() const { return p_; }
  Int n() const { return n_; }
  Unit u() const { return u_; }
  Int order() const { return p_.value() * n_; }

  GroupElement identity() const { return {}; }
  GroupElement multiply(GroupElement x, GroupElement y) const;
  GroupElement inverse(GroupElement x) const;
  GroupElement power(GroupElement x, Int e) const;

  /// All elements in (b, a) order.
  std::vector<GroupElement> elements() const;

  /// Order of the subgroup generated by `gens`.
  Int generated_order(std::span<const GroupElement> gens) const;

  /// "C10", "D5", "C5:C4", or "C5:C4[u=4]" when u acts with smaller order.
  std::string name() const;

  /// u^b.
  Int twist(Int b) const { return twist_[static_cast<std::size_t>(mod(b, n_))]; }

  friend bool operator==(const MetacyclicGroup& x, const MetacyclicGroup& y) {
    return x.p_ == y.p_ && x.n_ == y.n_ && x.u_ == y.u_;
  }

 private:
  PrimeModulus p_;
  Int n_;
  Unit u_;
  std::vector<Int> twist_;
};

Int element_order(GroupElement g, const MetacyclicGroup& group);

/// Genus-0 signatures with periods dividing p*n whose area is area((0; p^k))/n,
/// fewest periods first, then lexicographic.
std::vector<Signature> quotient_signatures(PrimeModulus p, Int k, Int n);

struct ExtensionWitness {
  MetacyclicGroup group;
  Signature quotient_signature;
  std::vector<GroupElement> images;  // aligned with quotient_signature.periods()
  StratumClass induced_class;
};

/// First witness in deterministic search order, or nullopt.
std::optional<ExtensionWitness> find_witness(const StratumClass& cls, Int n, Unit u);

/// One witness per (n, u, quotient signature) that admits one, n in [2, n_max].
std::vector<ExtensionWitness> prove_extension(const StratumClass& cls, Int n_max);

/// Independent re-check of every witness invariant through group
/// multiplication and the signature kit.
struct WitnessCheck {
  bool generates = false;
  bool product_one = false;
  bool orders_match = false;
  bool area_matches = false;
  bool induced_signature_matches = false;
  bool class_matches = false;

  bool ok() const {
    return generates && product_one && orders_match && area_matches && induced_signature_matches && class_matches;
  }
};

WitnessCheck verify_witness(const ExtensionWitness& w);

/// Degree-n action of the images on the cosets of the normal C_p.
PermutationRep coset_action(const ExtensionWitness& w);

}  // namespace pgonal
