#pragma once

// Machine-readable result records shared by the CLI and the result cache.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgonal/atlas.hpp"
#include "pgonal/extension.hpp"
#include "pgonal/isolation.hpp"

namespace pgonal {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct CandidateRecord {
  Int q = 0;
  Int u = 0;
  Int min_fixed_in_s = 0;
  bool has_cycle = false;
  friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

struct WitnessRecord {
  std::string group;
  Int n = 0;
  Int u = 0;
  std::vector<Int> quotient_periods;
  std::vector<std::pair<Int, Int>> images;  // (a, b)
  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct ResultRecord {
  int schema_version = kSchemaVersion;
  Int p = 0;
  Int k = 0;
  std::vector<Int> canonical;
  std::vector<Int> profile;  // m_1 .. m_{p-1}
  Int g = 0;
  Int d = 0;
  std::string verdict;
  std::vector<CandidateRecord> candidates;
  std::vector<WitnessRecord> witnesses;
  std::optional<double> timing_ms;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Classifies `cls`; witnesses are searched only when extend_n_max >= 2.
ResultRecord make_record(const StratumClass& cls, Int extend_n_max = 0);

WitnessRecord make_witness_record(const ExtensionWitness& w);

void to_json(ordered_json& j, const CandidateRecord& r);
void from_json(const ordered_json& j, CandidateRecord& r);
void to_json(ordered_json& j, const WitnessRecord& r);
void from_json(const ordered_json& j, WitnessRecord& r);
void to_json(ordered_json& j, const ResultRecord& r);
void from_json(const ordered_json& j, ResultRecord& r);

ordered_json atlas_entry_json(const AtlasEntry& e);

/// Parses "1^7,3,5,6" (run-length shorthand allowed) into exponents.
/// Throws std::invalid_argument on malformed text.
std::vector<Int> parse_exponents(const std::string& text);

/// Inverse of parse_exponents, collapsing runs of length >= 3.
std::string format_exponents(const std::vector<Int>& exponents);

/// CSV columns: p,k,canonical,g,d,verdict,candidate_count,witness_count
std::string csv_header();
std::string csv_row(const ResultRecord& r);

}  // namespace pgonal
