#pragma once

// Per-genus catalog of isolated cyclic p-gonal strata, the multiprime
// construction, and the consolidated check of the published examples.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgonal/monodromy.hpp"

namespace pgonal {

enum class AtlasMode { Witness, Census };
enum class AtlasStatus { IsolatedWitnessed, NoneIsolated, Undetermined, Informational };

std::string to_string(AtlasMode mode);
std::string to_string(AtlasStatus status);

struct Gonality {
  Int p;
  Int k;
  Int d;
  friend bool operator==(const Gonality&, const Gonality&) = default;
};

/// Primes p >= 5 with (p-1) | 2g, sorted by p; k = 2g/(p-1) + 2, d = k - 3.
std::vector<Gonality> gonalities(Int g);

struct AtlasEntry {
  Int g = 0;
  Int p = 0;
  Int k = 0;
  Int d = 0;
  AtlasStatus status = AtlasStatus::Undetermined;
  std::optional<BranchData> witness;
  /// Witness mode: false when the explicit construction was rejected and the
  /// witness came from the fallback search.
  bool construction_isolated = true;
  std::optional<Int> class_count;     // census mode
  std::optional<Int> isolated_count;  // census mode
  std::string note;
};

struct AtlasOptions {
  AtlasMode mode = AtlasMode::Witness;
  std::uint64_t budget = kDefaultBudget;
  bool include_small_primes = false;  // informational p = 2, 3 rows
  unsigned jobs = 1;
};

std::vector<AtlasEntry> atlas(Int g, const AtlasOptions& options = {});

/// Single row of the atlas for one gonality.
AtlasEntry atlas_entry(Int g, const Gonality& gon, const AtlasOptions& options = {});

struct MultiprimeGenus {
  Int multiplier = 0;
  Int g = 0;
  std::vector<AtlasEntry> entries;     // all gonalities of g
  std::vector<Int> isolated_primes;    // listed primes with an isolated stratum
  Int r = 0;                           // isolated_primes.size()
  std::vector<std::string> warnings;
};

struct MultiprimeReport {
  std::vector<Int> primes;
  Int lambda = 0;
  std::vector<MultiprimeGenus> genera;
};

/// Atlas rows at g = k * lambda for k in [k_first, k_last].
MultiprimeReport multiprime(std::span<const PrimeModulus> primes, Int k_first, Int k_last,
                            const AtlasOptions& options = {});

/// Least multiple of lambda at which every listed prime has an isolated
/// stratum, searching multipliers up to `max_multiplier`.
std::optional<Int> minimal_joint_genus(std::span<const PrimeModulus> primes, Int max_multiplier = 64,
                                       const AtlasOptions& options = {});

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Erratum {
  std::string id;
  std::string printed;
  std::string finding;
};

struct PaperCheckReport {
  std::vector<CheckResult> checks;
  std::vector<Erratum> errata;
  bool passed() const;
};

/// Every published value reproduced by this library, plus the list of
/// printed values that are arithmetically inconsistent.
PaperCheckReport paper_check();

}  // namespace pgonal
