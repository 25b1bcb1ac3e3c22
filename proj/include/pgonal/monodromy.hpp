#pragma once

// Branch data theta(x_i) = alpha^{r_i} of cyclic p-gonal covers of the sphere,
// canonical forms up to topological equivalence, and the exhaustive census of
// equivalence classes.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgonal/arith.hpp"

namespace pgonal {

enum class BranchDataErrorCode { ExponentOutOfRange, SumNotZero, TooFewPoints };

std::string to_string(BranchDataErrorCode code);

class BranchDataError : public std::invalid_argument {
 public:
  BranchDataError(BranchDataErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  BranchDataErrorCode code() const { return code_; }

 private:
  BranchDataErrorCode code_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("enumeration exceeded budget of " + std::to_string(budget) + " nodes"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

class NoIsolatedClass : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Validated exponent vector: k >= 3, every r_i in [1, p-1], sum = 0 mod p.
class BranchData {
 public:
  static BranchData validate(PrimeModulus p, std::vector<Int> exponents);

  PrimeModulus p() const { return p_; }
  const std::vector<Int>& exponents() const { return exponents_; }
  Int k() const { return static_cast<Int>(exponents_.size()); }
  Int genus() const;
  Int dim() const { return k() - 3; }

  std::string to_string() const;

  friend bool operator==(const BranchData&, const BranchData&) = default;

 private:
  BranchData(PrimeModulus p, std::vector<Int> exponents) : p_(p), exponents_(std::move(exponents)) {}
  PrimeModulus p_;
  std::vector<Int> exponents_;
};

inline BranchData validate(PrimeModulus p, std::vector<Int> exponents) {
  return BranchData::validate(p, std::move(exponents));
}

/// Multiplicities m_j of each exponent j; counts[0] is always 0.
struct Profile {
  Int p = 0;
  Int k = 0;
  std::vector<Int> counts;

  Int at(Int j) const { return counts[static_cast<std::size_t>(mod(j, p))]; }
  Int max_multiplicity() const;
  /// "(m_1,...,m_{p-1})".
  std::string to_string() const;
  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile(const BranchData& bd);

/// Canonical representative of a topological-equivalence class: the
/// lexicographically least sorted multiset among all unit multiples u*R.
class StratumClass {
 public:
  PrimeModulus p() const { return p_; }
  const std::vector<Int>& canonical() const { return canonical_; }
  Int k() const { return static_cast<Int>(canonical_.size()); }
  Int genus() const { return genus_; }
  Int dim() const { return dim_; }
  BranchData branch_data() const { return BranchData::validate(p_, canonical_); }

  std::string to_string() const;

  friend bool operator==(const StratumClass& a, const StratumClass& b) {
    return a.p_ == b.p_ && a.canonical_ == b.canonical_;
  }
  friend auto operator<=>(const StratumClass& a, const StratumClass& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.canonical_ <=> b.canonical_;
  }

 private:
  friend StratumClass canonical_form(const BranchData& bd);
  StratumClass(PrimeModulus p, std::vector<Int> canonical);

  PrimeModulus p_;
  std::vector<Int> canonical_;
  Int genus_;
  Int dim_;
};

StratumClass canonical_form(const BranchData& bd);
Profile profile(const StratumClass& cls);

/// True iff both vectors define the same class. Throws on modulus mismatch.
bool equivalent(const BranchData& a, const BranchData& b);

/// Every equivalence class of branch data with k points exactly once, sorted
/// by canonical multiset. `jobs` > 1 splits the enumeration tree across
/// threads; the result does not depend on it.
std::vector<StratumClass> census(PrimeModulus p, Int k, std::uint64_t budget = kDefaultBudget,
                                 unsigned jobs = 1);

/// Number of classes via Burnside's lemma over the unit group.
Int burnside_count(PrimeModulus p, Int k);

/// Fixed multisets of a single unit, exposed for the Burnside cross-check.
Int burnside_fixed_count(Unit u, Int k);

/// The (1^d, a, b, c) construction for p >= 7, d >= 2, taken literally.
BranchData case_construction(PrimeModulus p, Int d);

/// Which of the five congruence cases of d mod p applies (1..5).
int construction_case(PrimeModulus p, Int d);

}  // namespace pgonal
