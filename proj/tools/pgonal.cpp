// pgonal: command-line front end for the isolated-strata library.
//
// Exit codes: 0 success, 2 invalid input, 3 budget exceeded,
// 4 internal consistency failure.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgonal/atlas.hpp"
#include "pgonal/cache.hpp"
#include "pgonal/extension.hpp"
#include "pgonal/isolation.hpp"
#include "pgonal/monodromy.hpp"
#include "pgonal/record.hpp"
#include "pgonal/signature.hpp"

using namespace pgonal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInconsistent = 4;

class ConsistencyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// Left-aligned text table; trailing blanks are trimmed.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os, const std::string& indent = "") const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], row[c].size());
      }
    for (const auto& row : rows_) {
      std::string line = indent;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

PrimeModulus parse_modulus(Int p) {
  if (p < 5 || !is_prime(p)) throw InvalidInput("--p must be a prime >= 5, got " + std::to_string(p));
  return PrimeModulus(p);
}

std::vector<Int> parse_exp(const std::string& text) {
  try {
    return parse_exponents(text);
  } catch (const std::invalid_argument& ex) {
    throw InvalidInput(ex.what());
  }
}

std::pair<Int, Int> parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const Int v = std::stoll(text);
      return {v, v};
    }
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const Int lo = std::stoll(a, &used_a), hi = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw InvalidInput(std::string("malformed ") + what + " '" + text + "', expected A:B with A <= B");
  }
}

std::string candidates_text(const std::vector<CandidateRecord>& cands) {
  if (cands.empty()) return "none";
  std::string s;
  for (const auto& c : cands) {
    if (!s.empty()) s += " ";
    s += "(q=" + std::to_string(c.q) + ",u=" + std::to_string(c.u) + ")";
  }
  return s;
}

std::string images_text(const WitnessRecord& w) {
  std::string s;
  for (const auto& [a, b] : w.images) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s;
}

std::string signature_text(const std::vector<Int>& periods) { return Signature(0, periods).to_string(); }

ordered_json document(const std::string& command) {
  ordered_json j = ordered_json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  Int p = 0;
  std::string exp;
  bool json = false;
};

int cmd_validate(const ValidateArgs& args) {
  const PrimeModulus p = parse_modulus(args.p);
  const std::vector<Int> exps = parse_exp(args.exp);
  ordered_json doc = document("validate");
  doc["p"] = args.p;
  doc["exponents"] = exps;
  try {
    const BranchData bd = validate(p, exps);
    const StratumClass cls = canonical_form(bd);
    if (args.json) {
      doc["valid"] = true;
      doc["error"] = nullptr;
      doc["message"] = nullptr;
      doc["records"] = ordered_json::array({make_record(cls)});
      std::cout << doc.dump(2) << '\n';
    } else {
      Int sum = 0;
      for (Int r : exps) sum = checked_add(sum, r);
      std::cout << "valid branch data\n";
      Table t({"field", "value"});
      t.add({"p", std::to_string(args.p)});
      t.add({"k", std::to_string(bd.k())});
      t.add({"exponents", "(" + join(exps) + ")"});
      t.add({"sum", std::to_string(sum) + " = 0 mod " + std::to_string(args.p)});
      t.add({"signature", pgonal_signature(p, bd.k()).to_string()});
      t.add({"g", std::to_string(bd.genus())});
      t.add({"d", std::to_string(bd.dim())});
      t.add({"canonical", "(" + join(cls.canonical()) + ")"});
      t.print(std::cout, "  ");
    }
    return kExitOk;
  } catch (const BranchDataError& ex) {
    if (args.json) {
      doc["valid"] = false;
      doc["error"] = to_string(ex.code());
      doc["message"] = ex.what();
      doc["records"] = ordered_json::array();
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "invalid branch data: " << to_string(ex.code()) << ": " << ex.what() << '\n';
    }
    return kExitInvalid;
  }
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  Int p = 0;
  std::string exp;
  Int extend = 0;
  bool json = false;
  bool timing = false;
  bool no_cache = false;
};

// An isolated class admits no extension; a witness here means a bug.
void check_witnesses(const StratumClass& cls, const ResultRecord& record) {
  if (record.verdict == "Isolated" && !record.witnesses.empty())
    throw ConsistencyFailure("class " + cls.to_string() + " is isolated yet has an extension witness");
}

ResultRecord classify_cached(const StratumClass& cls, Int extend, bool use_cache) {
  const std::string key =
      cache_key("classify", cls.p(), cls.k(), join(cls.canonical()), "extend=" + std::to_string(extend));
  std::optional<ResultCache> cache;
  if (use_cache) cache.emplace(ResultCache::default_dir());
  if (cache) {
    if (auto hit = cache->lookup(cls.p(), cls.k(), key)) return hit->get<ResultRecord>();
  }
  ResultRecord record = make_record(cls, extend);
  if (cache) cache->store(cls.p(), cls.k(), key, record);
  return record;
}

void print_record_text(const ResultRecord& r, const std::vector<Int>& input, Int extend) {
  Table t({"field", "value"});
  t.add({"p", std::to_string(r.p)});
  t.add({"k", std::to_string(r.k)});
  t.add({"input", "(" + join(input) + ")"});
  t.add({"canonical", "(" + join(r.canonical) + ")"});
  t.add({"profile", "(" + join(r.profile) + ")"});
  t.add({"g", std::to_string(r.g)});
  t.add({"d", std::to_string(r.d)});
  t.add({"verdict", r.verdict});
  t.add({"candidates", candidates_text(r.candidates)});
  if (extend >= 2) t.add({"witnesses", std::to_string(r.witnesses.size()) + " (n <= " + std::to_string(extend) + ")"});
  if (r.timing_ms) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::fixed << *r.timing_ms << " ms";
    t.add({"timing", ss.str()});
  }
  t.print(std::cout, "  ");
  if (!r.witnesses.empty()) {
    Table w({"group", "n", "u", "quotient", "images (a,b)"});
    for (const auto& wit : r.witnesses)
      w.add({wit.group, std::to_string(wit.n), std::to_string(wit.u), signature_text(wit.quotient_periods),
             images_text(wit)});
    std::cout << '\n';
    w.print(std::cout, "  ");
  }
}

int cmd_classify(const ClassifyArgs& args) {
  const PrimeModulus p = parse_modulus(args.p);
  const std::vector<Int> exps = parse_exp(args.exp);
  if (args.extend < 0) throw InvalidInput("--extend must be >= 0");
  const BranchData bd = validate(p, exps);
  const StratumClass cls = canonical_form(bd);
  const auto start = Clock::now();
  ResultRecord record = classify_cached(cls, args.extend, !args.no_cache && !args.timing);
  if (args.timing) record.timing_ms = elapsed_ms(start);
  check_witnesses(cls, record);
  if (args.json) {
    ordered_json doc = document("classify");
    doc["input"] = exps;
    doc["extend"] = args.extend;
    doc["records"] = ordered_json::array({record});
    std::cout << doc.dump(2) << '\n';
  } else {
    print_record_text(record, exps, args.extend);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  Int p = 0;
  Int k = 0;
  std::uint64_t budget = kDefaultBudget;
  Int extend = 0;
  unsigned jobs = 1;
  bool json = false;
  bool csv = false;
  bool timing = false;
  bool no_cache = false;
};

std::vector<ResultRecord> census_records(const CensusArgs& args, PrimeModulus p) {
  const bool use_cache = !args.no_cache && !args.timing;
  const std::string key = cache_key("census", args.p, args.k, "", "extend=" + std::to_string(args.extend));
  std::optional<ResultCache> cache;
  if (use_cache) cache.emplace(ResultCache::default_dir());
  if (cache) {
    if (auto hit = cache->lookup(args.p, args.k, key)) return hit->get<std::vector<ResultRecord>>();
  }
  std::vector<ResultRecord> records;
  for (const auto& cls : census(p, args.k, args.budget, args.jobs)) {
    const auto start = Clock::now();
    ResultRecord r = make_record(cls, args.extend);
    if (args.timing) r.timing_ms = elapsed_ms(start);
    records.push_back(std::move(r));
  }
  if (cache) cache->store(args.p, args.k, key, records);
  return records;
}

int cmd_census(const CensusArgs& args) {
  const PrimeModulus p = parse_modulus(args.p);
  if (args.k < 3) throw InvalidInput("--k must be >= 3");
  if (args.extend < 0) throw InvalidInput("--extend must be >= 0");
  if (args.json && args.csv) throw InvalidInput("--json and --csv are mutually exclusive");
  const auto start = Clock::now();
  const std::vector<ResultRecord> records = census_records(args, p);
  const double total_ms = elapsed_ms(start);

  const Int expected = burnside_count(p, args.k);
  if (static_cast<Int>(records.size()) != expected)
    throw ConsistencyFailure("census found " + std::to_string(records.size()) + " classes, Burnside count is " +
                             std::to_string(expected));
  Int isolated = 0;
  for (const auto& r : records) isolated += r.verdict == "Isolated";

  const GenusDim gd = genus_and_dim(p, args.k);
  if (args.json) {
    ordered_json doc = document("census");
    doc["p"] = args.p;
    doc["k"] = args.k;
    doc["g"] = gd.genus;
    doc["d"] = gd.dim;
    doc["class_count"] = records.size();
    doc["burnside_count"] = expected;
    doc["isolated_count"] = isolated;
    doc["timing"] = args.timing ? ordered_json(total_ms) : ordered_json(nullptr);
    doc["records"] = records;
    std::cout << doc.dump(2) << '\n';
  } else if (args.csv) {
    std::cout << csv_header() << '\n';
    for (const auto& r : records) std::cout << csv_row(r) << '\n';
  } else {
    std::cout << "census p=" << args.p << " k=" << args.k << " (g=" << gd.genus << ", d=" << gd.dim
              << "): " << records.size() << " classes (Burnside " << expected << "), " << isolated << " isolated\n";
    std::vector<std::string> header{"#", "canonical", "profile", "verdict", "candidates"};
    if (args.extend >= 2) header.push_back("witnesses");
    if (args.timing) header.push_back("ms");
    Table t(header);
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      std::vector<std::string> row{std::to_string(i + 1), format_exponents(r.canonical), "(" + join(r.profile) + ")",
                                   r.verdict, candidates_text(r.candidates)};
      if (args.extend >= 2) {
        std::string groups;
        for (const auto& w : r.witnesses) {
          if (!groups.empty()) groups += " ";
          groups += w.group + signature_text(w.quotient_periods);
        }
        row.push_back(groups.empty() ? "-" : groups);
      }
      if (args.timing) {
        std::ostringstream ss;
        ss.precision(3);
        ss << std::fixed << r.timing_ms.value_or(0.0);
        row.push_back(ss.str());
      }
      t.add(std::move(row));
    }
    t.print(std::cout, "  ");
    if (args.timing) std::cout << "total " << total_ms << " ms\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- atlas

struct AtlasArgs {
  Int genus = 0;
  std::string range;
  std::string mode = "witness";
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  bool include_small = false;
  bool json = false;
};

AtlasOptions atlas_options(const std::string& mode, std::uint64_t budget, unsigned jobs, bool include_small) {
  AtlasOptions o;
  if (mode == "witness")
    o.mode = AtlasMode::Witness;
  else if (mode == "census")
    o.mode = AtlasMode::Census;
  else
    throw InvalidInput("--mode must be witness or census");
  o.budget = budget;
  o.jobs = std::max(1u, jobs);
  o.include_small_primes = include_small;
  return o;
}

std::string witness_text(const AtlasEntry& e) { return e.witness ? format_exponents(e.witness->exponents()) : "-"; }

std::string count_text(const std::optional<Int>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_atlas(const AtlasArgs& args) {
  Int lo = args.genus, hi = args.genus;
  if (!args.range.empty()) std::tie(lo, hi) = parse_range(args.range, "--range");
  if (lo < 2) throw InvalidInput("genus must be >= 2");
  const AtlasOptions options = atlas_options(args.mode, args.budget, args.jobs, args.include_small);

  ordered_json doc = document("atlas");
  doc["mode"] = args.mode;
  doc["records"] = ordered_json::array();
  bool budget_hit = false;
  for (Int g = lo; g <= hi; ++g) {
    const auto entries = atlas(g, options);
    for (const auto& e : entries) budget_hit = budget_hit || e.status == AtlasStatus::Undetermined;
    if (args.json) {
      for (const auto& e : entries) doc["records"].push_back(atlas_entry_json(e));
      continue;
    }
    if (g != lo) std::cout << '\n';
    std::cout << "genus " << g << " (" << args.mode << " mode): " << entries.size() << " gonalities\n";
    if (entries.empty()) continue;
    std::vector<std::string> header{"p", "k", "d", "status", "witness"};
    if (options.mode == AtlasMode::Census) {
      header.push_back("classes");
      header.push_back("isolated");
    }
    header.push_back("note");
    Table t(header);
    for (const auto& e : entries) {
      std::vector<std::string> row{std::to_string(e.p), std::to_string(e.k), std::to_string(e.d), to_string(e.status),
                                   witness_text(e)};
      if (options.mode == AtlasMode::Census) {
        row.push_back(count_text(e.class_count));
        row.push_back(count_text(e.isolated_count));
      }
      row.push_back(e.note);
      t.add(std::move(row));
    }
    t.print(std::cout, "  ");
  }
  if (args.json) std::cout << doc.dump(2) << '\n';
  return budget_hit ? kExitBudget : kExitOk;
}

// ---------------------------------------------------------------- multiprime

struct MultiprimeArgs {
  std::string primes;
  std::string k_range = "1:6";
  std::string mode = "witness";
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  bool json = false;
};

int cmd_multiprime(const MultiprimeArgs& args) {
  std::vector<PrimeModulus> primes;
  for (Int v : parse_exp(args.primes)) primes.push_back(parse_modulus(v));
  auto sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  if (primes.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("--primes must list distinct primes >= 5");
  const auto [k_first, k_last] = parse_range(args.k_range, "--k-range");
  if (k_first < 1) throw InvalidInput("--k-range must start at 1 or more");
  const AtlasOptions options = atlas_options(args.mode, args.budget, args.jobs, false);
  const MultiprimeReport report = multiprime(primes, k_first, k_last, options);

  if (args.json) {
    ordered_json doc = document("multiprime");
    doc["primes"] = report.primes;
    doc["lambda"] = report.lambda;
    doc["records"] = ordered_json::array();
    for (const auto& row : report.genera) {
      ordered_json j = ordered_json::object();
      j["multiplier"] = row.multiplier;
      j["g"] = row.g;
      j["isolated_primes"] = row.isolated_primes;
      j["r"] = row.r;
      j["warnings"] = row.warnings;
      j["entries"] = ordered_json::array();
      for (const auto& e : row.entries) j["entries"].push_back(atlas_entry_json(e));
      doc["records"].push_back(std::move(j));
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "primes " << join(report.primes) << ", lambda = " << report.lambda << '\n';
  Table t({"m", "g", "r", "isolated primes", "all gonalities", "warnings"});
  for (const auto& row : report.genera) {
    std::string all;
    for (const auto& e : row.entries) {
      if (!all.empty()) all += " ";
      all += std::to_string(e.p) + ":d" + std::to_string(e.d) +
             (e.status == AtlasStatus::IsolatedWitnessed ? "" : "(" + to_string(e.status) + ")");
    }
    std::string warn;
    for (const auto& w : row.warnings) warn += (warn.empty() ? "" : "; ") + w;
    t.add({std::to_string(row.multiplier), std::to_string(row.g), std::to_string(row.r),
           row.isolated_primes.empty() ? "-" : join(row.isolated_primes), all, warn});
  }
  t.print(std::cout, "  ");
  return kExitOk;
}

// ---------------------------------------------------------------- paper-check

int cmd_paper_check(bool json) {
  const PaperCheckReport report = paper_check();
  if (json) {
    ordered_json doc = document("paper-check");
    doc["passed"] = report.passed();
    doc["records"] = ordered_json::array();
    for (const auto& c : report.checks)
      doc["records"].push_back(ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["errata"] = ordered_json::array();
    for (const auto& e : report.errata)
      doc["errata"].push_back(ordered_json{{"id", e.id}, {"printed", e.printed}, {"finding", e.finding}});
    std::cout << doc.dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
      passed += c.passed;
      std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << '\n';
    }
    std::cout << "\nerrata (" << report.errata.size() << ")\n";
    for (const auto& e : report.errata) {
      std::cout << "  " << e.id << '\n';
      std::cout << "    printed: " << e.printed << '\n';
      std::cout << "    finding: " << e.finding << '\n';
    }
    std::cout << '\n' << passed << "/" << report.checks.size() << " checks passed\n";
  }
  return report.passed() ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isolated equisymmetric strata of cyclic p-gonal Riemann surfaces"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate_cmd = app.add_subcommand("validate", "Check an exponent vector against the branch-data rules");
  validate_cmd->add_option("--p", va.p, "Prime order of the deck group")->required();
  validate_cmd->add_option("--exp", va.exp, "Exponents, e.g. 1^7,3,5,6")->required();
  validate_cmd->add_flag("--json", va.json, "JSON output");

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Canonical class, genus, dimension and isolation verdict");
  classify_cmd->add_option("--p", ca.p, "Prime order of the deck group")->required();
  classify_cmd->add_option("--exp", ca.exp, "Exponents, e.g. 1^7,3,5,6")->required();
  classify_cmd->add_option("--extend", ca.extend, "Search extension witnesses with n <= N");
  classify_cmd->add_flag("--json", ca.json, "JSON output");
  classify_cmd->add_flag("--timing", ca.timing, "Record wall-clock timing (bypasses the cache)");
  classify_cmd->add_flag("--no-cache", ca.no_cache, "Do not read or write the result cache");

  CensusArgs cs;
  auto* census_cmd = app.add_subcommand("census", "All equivalence classes with k branch points");
  census_cmd->add_option("--p", cs.p, "Prime order of the deck group")->required();
  census_cmd->add_option("--k", cs.k, "Number of branch points")->required();
  census_cmd->add_option("--budget", cs.budget, "Enumeration node budget");
  census_cmd->add_option("--extend", cs.extend, "Search extension witnesses with n <= N");
  census_cmd->add_option("--jobs", cs.jobs, "Worker threads");
  census_cmd->add_flag("--json", cs.json, "JSON output");
  census_cmd->add_flag("--csv", cs.csv, "CSV output");
  census_cmd->add_flag("--timing", cs.timing, "Record wall-clock timing (bypasses the cache)");
  census_cmd->add_flag("--no-cache", cs.no_cache, "Do not read or write the result cache");

  AtlasArgs as;
  auto* atlas_cmd = app.add_subcommand("atlas", "Isolated strata for every prime gonality of a genus");
  auto* genus_opt = atlas_cmd->add_option("--genus", as.genus, "Genus");
  auto* range_opt = atlas_cmd->add_option("--range", as.range, "Genus range A:B");
  genus_opt->excludes(range_opt);
  atlas_cmd->add_option("--mode", as.mode, "witness or census")->check(CLI::IsMember({"witness", "census"}));
  atlas_cmd->add_option("--budget", as.budget, "Enumeration node budget per row");
  atlas_cmd->add_option("--jobs", as.jobs, "Worker threads");
  atlas_cmd->add_flag("--include-small", as.include_small, "Add informational rows for p = 2, 3");
  atlas_cmd->add_flag("--json", as.json, "JSON output");

  MultiprimeArgs ms;
  auto* multi_cmd = app.add_subcommand("multiprime", "Genera g = m * lambda carrying isolated strata for several primes");
  multi_cmd->add_option("--primes", ms.primes, "Comma-separated distinct primes >= 5")->required();
  multi_cmd->add_option("--k-range", ms.k_range, "Multiplier range A:B")->capture_default_str();
  multi_cmd->add_option("--mode", ms.mode, "witness or census")->check(CLI::IsMember({"witness", "census"}));
  multi_cmd->add_option("--budget", ms.budget, "Enumeration node budget per row");
  multi_cmd->add_option("--jobs", ms.jobs, "Worker threads");
  multi_cmd->add_flag("--json", ms.json, "JSON output");

  bool check_json = false;
  auto* check_cmd = app.add_subcommand("paper-check", "Reproduce every published value and list the errata");
  check_cmd->add_flag("--json", check_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }
  if (atlas_cmd->parsed() && genus_opt->count() == 0 && range_opt->count() == 0) {
    std::cerr << "atlas: one of --genus or --range is required\n";
    return kExitInvalid;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(va);
    if (classify_cmd->parsed()) return cmd_classify(ca);
    if (census_cmd->parsed()) return cmd_census(cs);
    if (atlas_cmd->parsed()) return cmd_atlas(as);
    if (multi_cmd->parsed()) return cmd_multiprime(ms);
    if (check_cmd->parsed()) return cmd_paper_check(check_json);
  } catch (const BranchDataError& ex) {
    std::cerr << "invalid branch data: " << to_string(ex.code()) << ": " << ex.what() << '\n';
    return kExitInvalid;
  } catch (const BudgetExceeded& ex) {
    std::cerr << "budget exceeded: " << ex.what() << '\n';
    return kExitBudget;
  } catch (const ConsistencyFailure& ex) {
    std::cerr << "internal consistency failure: " << ex.what() << '\n';
    return kExitInconsistent;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invalid input: " << ex.what() << '\n';
    return kExitInvalid;
  } catch (const std::overflow_error& ex) {
    std::cerr << "invalid input: " << ex.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return kExitInconsistent;
  }
  return kExitInvalid;
}
