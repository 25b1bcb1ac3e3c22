#include "pgonal/atlas.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>

#include "pgonal/extension.hpp"
#include "pgonal/isolation.hpp"
#include "pgonal/signature.hpp"

namespace pgonal {

std::string to_string(AtlasMode mode) { return mode == AtlasMode::Witness ? "witness" : "census"; }

std::string to_string(AtlasStatus status) {
  switch (status) {
    case AtlasStatus::IsolatedWitnessed:
      return "IsolatedWitnessed";
    case AtlasStatus::NoneIsolated:
      return "NoneIsolated";
    case AtlasStatus::Undetermined:
      return "Undetermined";
    case AtlasStatus::Informational:
      return "Informational";
  }
  return "Unknown";
}

std::vector<Gonality> gonalities(Int g) {
  if (g < 2) throw std::invalid_argument("gonalities: genus must be >= 2");
  const Int twice = checked_mul(2, g);
  std::vector<Gonality> out;
  for (Int divisor = 4; divisor <= twice; ++divisor) {
    if (twice % divisor != 0 || !is_prime(divisor + 1)) continue;
    const Int k = twice / divisor + 2;
    out.push_back({divisor + 1, k, k - 3});
  }
  return out;
}

namespace {

constexpr const char* kSmallPrimeNote =
    "cited: strata of actions of order two and three lie in one connected component of the branch locus; "
    "not computed";
constexpr const char* kGenusTwoNote =
    "cited special case: the branch locus in genus 2 contains one isolated pentagonal surface, whose full "
    "automorphism group C10 strictly contains C5";

AtlasEntry make_entry(Int g, const Gonality& gon) {
  AtlasEntry e;
  e.g = g;
  e.p = gon.p;
  e.k = gon.k;
  e.d = gon.d;
  return e;
}

}  // namespace

AtlasEntry atlas_entry(Int g, const Gonality& gon, const AtlasOptions& options) {
  AtlasEntry e = make_entry(g, gon);
  if (gon.p < 5) {
    e.status = AtlasStatus::Informational;
    e.note = kSmallPrimeNote;
    return e;
  }
  const PrimeModulus p(gon.p);

  try {
    if (options.mode == AtlasMode::Census) {
      auto classes = census(p, gon.k, options.budget, options.jobs);
      Int isolated = 0;
      for (const auto& cls : classes) {
        if (!isolation_verdict(cls).isolated()) continue;
        if (!e.witness) e.witness = cls.branch_data();
        ++isolated;
      }
      e.class_count = static_cast<Int>(classes.size());
      e.isolated_count = isolated;
      e.status = isolated > 0 ? AtlasStatus::IsolatedWitnessed : AtlasStatus::NoneIsolated;
    } else {
      BranchData explicit_bd = paper_witness(p, gon.d, options.budget);
      if (isolation_verdict(explicit_bd).isolated()) {
        e.witness = explicit_bd;
      } else {
        e.construction_isolated = false;
        e.witness = isolated_witness(p, gon.d, options.budget);
        e.note = "explicit construction " + explicit_bd.to_string() +
                 " admits a rotation candidate; witness found by search";
      }
      e.status = AtlasStatus::IsolatedWitnessed;
    }
  } catch (const NoIsolatedClass&) {
    e.status = AtlasStatus::NoneIsolated;
  } catch (const BudgetExceeded& ex) {
    e.status = AtlasStatus::Undetermined;
    e.note = ex.what();
  }

  if (g == 2 && gon.p == 5) e.note = kGenusTwoNote;
  return e;
}

std::vector<AtlasEntry> atlas(Int g, const AtlasOptions& options) {
  std::vector<Gonality> gons;
  if (options.include_small_primes) {
    gons.push_back({2, 2 * g + 2, 2 * g - 1});
    gons.push_back({3, g + 2, g - 1});
  }
  for (const auto& gon : gonalities(g)) gons.push_back(gon);

  std::vector<AtlasEntry> out(gons.size());
  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < gons.size(); ++i) out[i] = atlas_entry(g, gons[i], options);
    return out;
  }
  AtlasOptions inner = options;
  inner.jobs = 1;
  std::vector<std::future<AtlasEntry>> pending;
  for (const auto& gon : gons)
    pending.push_back(std::async(std::launch::async, [g, gon, inner] { return atlas_entry(g, gon, inner); }));
  for (std::size_t i = 0; i < gons.size(); ++i) out[i] = pending[i].get();
  return out;
}

namespace {

std::vector<Int> sorted_values(std::span<const PrimeModulus> primes) {
  std::vector<Int> v;
  for (PrimeModulus p : primes) v.push_back(p);
  std::sort(v.begin(), v.end());
  return v;
}

MultiprimeGenus examine_genus(const std::vector<Int>& primes, Int multiplier, Int g, const AtlasOptions& options) {
  MultiprimeGenus row;
  row.multiplier = multiplier;
  row.g = g;
  row.entries = atlas(g, options);
  for (const auto& e : row.entries) {
    if (std::find(primes.begin(), primes.end(), e.p) == primes.end()) continue;
    if (e.status == AtlasStatus::IsolatedWitnessed) row.isolated_primes.push_back(e.p);
    if (e.p == 5 && e.status == AtlasStatus::NoneIsolated)
      row.warnings.push_back("genus " + std::to_string(g) + " has no isolated cyclic pentagonal strata");
  }
  row.r = static_cast<Int>(row.isolated_primes.size());
  if (g <= 12) row.warnings.push_back("genus " + std::to_string(g) + " is outside the hypothesis g > 12");
  return row;
}

}  // namespace

MultiprimeReport multiprime(std::span<const PrimeModulus> primes, Int k_first, Int k_last,
                            const AtlasOptions& options) {
  if (k_first < 1 || k_last < k_first) throw std::invalid_argument("multiprime: invalid multiplier range");
  MultiprimeReport report;
  report.primes = sorted_values(primes);
  report.lambda = lcm_half_primes(primes);
  for (Int m = k_first; m <= k_last; ++m) {
    const Int g = checked_mul(m, report.lambda);
    if (g < 2) continue;
    report.genera.push_back(examine_genus(report.primes, m, g, options));
  }
  return report;
}

std::optional<Int> minimal_joint_genus(std::span<const PrimeModulus> primes, Int max_multiplier,
                                       const AtlasOptions& options) {
  const auto listed = sorted_values(primes);
  const Int lambda = lcm_half_primes(primes);
  for (Int m = 1; m <= max_multiplier; ++m) {
    const Int g = checked_mul(m, lambda);
    if (g < 2) continue;
    bool all = true;
    for (Int p : listed) {
      const Int twice = 2 * g;
      const Int k = twice / (p - 1) + 2;
      AtlasEntry e = atlas_entry(g, {p, k, k - 3}, options);
      all = all && e.status == AtlasStatus::IsolatedWitnessed;
    }
    if (all) return g;
  }
  return std::nullopt;
}

bool PaperCheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string dims_of(const std::vector<AtlasEntry>& entries) {
  std::string s;
  for (const auto& e : entries) {
    if (!s.empty()) s += " ";
    s += "p" + std::to_string(e.p) + ":d" + std::to_string(e.d) + ":" +
         (e.status == AtlasStatus::IsolatedWitnessed ? "iso" : to_string(e.status));
  }
  return s;
}

bool rows_match(const std::vector<AtlasEntry>& entries, const std::vector<std::pair<Int, Int>>& expected) {
  if (entries.size() != expected.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].p != expected[i].first || entries[i].d != expected[i].second) return false;
  return true;
}

}  // namespace

PaperCheckReport paper_check() {
  PaperCheckReport report;
  auto check = [&](std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r{std::move(name), false, ""};
    try {
      auto [ok, detail] = body();
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    report.checks.push_back(std::move(r));
  };
  const PrimeModulus five(5), seven(7);

  check("401 is prime", [] { return std::pair(is_prime(401), std::string("is_prime(401)")); });
  check("B10 stratum signature (0; 5^7) has dimension 4", [&] {
    Int dim = teichmuller_dim(pgonal_signature(five, 7));
    return std::pair(dim == 4, "dim=" + std::to_string(dim));
  });
  check("genus and dimension of (p, k) = (5, 7), (7, 6), (11, 3)", [&] {
    bool ok = genus_and_dim(five, 7) == GenusDim{10, 4} && genus_and_dim(seven, 6) == GenusDim{12, 3} &&
              genus_and_dim(PrimeModulus(11), 3) == GenusDim{5, 0};
    return std::pair(ok, std::string("(10,4) (12,3) (5,0)"));
  });
  check("theta_1 = (1,1,1,2,3,3,4) is valid and isolated (B10)", [&] {
    auto bd = validate(five, {1, 1, 1, 2, 3, 3, 4});
    return std::pair(isolation_verdict(bd).isolated() && bd.genus() == 10, bd.to_string());
  });
  check("theta_2 = (1^6,2,3,4) is valid and isolated (B14)", [&] {
    auto bd = validate(five, {1, 1, 1, 1, 1, 1, 2, 3, 4});
    return std::pair(isolation_verdict(bd).isolated() && bd.genus() == 14, bd.to_string());
  });
  check("B16 contains an isolated pentagonal stratum (census(5,10))", [&] {
    Int n = 0;
    for (const auto& cls : census(five, 10))
      if (isolation_verdict(cls).isolated()) ++n;
    return std::pair(n >= 1, std::to_string(n) + " isolated classes");
  });
  check("B4, B6, B8 contain no isolated pentagonal strata", [&] {
    bool ok = true;
    std::string detail;
    for (Int k : {4, 5, 6}) {
      Int n = 0;
      for (const auto& cls : census(five, k))
        if (isolation_verdict(cls).isolated()) ++n;
      ok = ok && n == 0;
      detail += "k=" + std::to_string(k) + ":" + std::to_string(n) + " ";
    }
    return std::pair(ok, detail);
  });
  check("B12 contains no isolated pentagonal strata", [&] {
    auto classes = census(five, 8);
    Int n = 0;
    for (const auto& cls : classes)
      if (isolation_verdict(cls).isolated()) ++n;
    return std::pair(n == 0, std::to_string(classes.size()) + " classes, " + std::to_string(n) + " isolated");
  });
  check("B12 class (1,1,2,2,3,3,4,4) extends to C10, D5 and C5:C4", [&] {
    auto cls = canonical_form(validate(five, {1, 1, 2, 2, 3, 3, 4, 4}));
    bool c10 = false, d5 = false, c5c4 = false;
    std::string names;
    for (const auto& w : prove_extension(cls, 4)) {
      if (!verify_witness(w).ok()) return std::pair(false, std::string("witness failed re-verification"));
      const auto& G = w.group;
      c10 = c10 || (G.n() == 2 && G.u().is_one());
      d5 = d5 || (G.n() == 2 && G.u().value() == 4);
      c5c4 = c5c4 || (G.n() == 4 && mult_order(G.u()) == 4);
      names += G.name() + " ";
    }
    return std::pair(c10 && d5 && c5c4, names);
  });
  check("p=7 case-1 construction at d=3 is (1,1,1,2,5,4)", [&] {
    auto bd = paper_witness(seven, 3);
    return std::pair(bd.exponents() == std::vector<Int>{1, 1, 1, 2, 5, 4}, bd.to_string());
  });
  check("p=7 case-2 construction at d=7 uses p-8 = 6", [&] {
    auto bd = paper_witness(seven, 7);
    return std::pair(bd.exponents() == std::vector<Int>{1, 1, 1, 1, 1, 1, 1, 3, 5, 6}, bd.to_string());
  });
  check("isolated strata of every dimension d >= 2 exist for p in {7,11,13,17,19}", [&] {
    for (Int pv : {7, 11, 13, 17, 19}) {
      PrimeModulus p(pv);
      for (Int d = 2; d <= 2 * pv + 3; ++d)
        if (!isolation_verdict(isolated_witness(p, d)).isolated())
          return std::pair(false, "p=" + std::to_string(pv) + " d=" + std::to_string(d));
    }
    return std::pair(true, std::string("all (p, d) witnessed"));
  });
  check("isolated points: none for p in {5,7}, present for p in {11,13,17,19}", [&] {
    std::string detail;
    bool ok = true;
    for (Int pv : {5, 7, 11, 13, 17, 19}) {
      Int n = 0;
      for (const auto& cls : census(PrimeModulus(pv), 3))
        if (isolation_verdict(cls).isolated()) ++n;
      ok = ok && ((pv <= 7) == (n == 0));
      detail += std::to_string(pv) + ":" + std::to_string(n) + " ";
    }
    return std::pair(ok, detail);
  });
  check("one-dimensional isolated strata: none for p in {5,7}, present for p in {11,13}", [&] {
    std::string detail;
    bool ok = true;
    for (Int pv : {5, 7, 11, 13}) {
      Int n = 0;
      for (const auto& cls : census(PrimeModulus(pv), 4))
        if (isolation_verdict(cls).isolated()) ++n;
      ok = ok && ((pv <= 7) == (n == 0));
      detail += std::to_string(pv) + ":" + std::to_string(n) + " ";
    }
    return std::pair(ok, detail);
  });

  struct AtlasExample {
    const char* name;
    Int g;
    std::vector<std::pair<Int, Int>> rows;  // (p, d); every row isolated unless listed below
    std::vector<Int> not_isolated;
  };
  const std::vector<AtlasExample> examples = {
      {"Example 1: genus 10", 10, {{5, 4}, {11, 1}}, {}},
      {"Example 2: genus 12", 12, {{5, 5}, {7, 3}, {13, 1}}, {5}},
      {"Example 3: genus 20", 20, {{5, 9}, {11, 3}, {41, 0}}, {}},
      {"Example 4: genus 15 (formula dimensions)", 15, {{7, 4}, {11, 2}, {31, 0}}, {}},
      {"Example 5: genus 18 (formula dimensions)", 18, {{5, 8}, {7, 5}, {13, 2}, {19, 1}, {37, 0}}, {}},
      {"Example 6: genus 24", 24, {{5, 11}, {7, 7}, {13, 3}, {17, 2}}, {}},
      {"Example 7: genus 30", 30, {{5, 14}, {7, 9}, {11, 5}, {13, 4}, {31, 1}, {61, 0}}, {}},
      {"Example 8: genus 60", 60, {{5, 29}, {7, 19}, {11, 11}, {13, 9}, {31, 3}, {41, 2}, {61, 1}}, {}},
      {"Example 9: genus 1000", 1000, {{5, 499}, {11, 199}, {17, 124}, {41, 49}, {101, 19}, {251, 7}, {401, 4}}, {}},
      {"Example 10: genus 2012", 2012, {{5, 1005}}, {}},
  };
  for (const auto& ex : examples) {
    check(ex.name, [&] {
      auto rows = atlas(ex.g);
      bool ok = rows_match(rows, ex.rows);
      for (const auto& e : rows) {
        bool expect_iso = std::find(ex.not_isolated.begin(), ex.not_isolated.end(), e.p) == ex.not_isolated.end();
        ok = ok && ((e.status == AtlasStatus::IsolatedWitnessed) == expect_iso);
      }
      return std::pair(ok, dims_of(rows));
    });
  }

  check("multiprime {5,7}: lambda = 6, both isolated at g = 18, 24, 30, 36", [&] {
    const PrimeModulus ps[] = {five, seven};
    auto rep = multiprime(ps, 3, 6);
    bool ok = rep.lambda == 6;
    for (const auto& row : rep.genera) ok = ok && row.r == 2;
    return std::pair(ok, "lambda=" + std::to_string(rep.lambda));
  });
  check("multiprime {5,7} at g = 12: pentagonal exception, heptagonal isolated", [&] {
    const PrimeModulus ps[] = {five, seven};
    auto rep = multiprime(ps, 2, 2);
    const auto& row = rep.genera.front();
    bool ok = row.g == 12 && row.isolated_primes == std::vector<Int>{7};
    return std::pair(ok, dims_of(row.entries));
  });
  check("smallest joint genera: {7,13} -> 12, {7,11} -> 15, {5,7} -> 18, {5,7,11} -> 30", [&] {
    const PrimeModulus a[] = {seven, PrimeModulus(13)};
    const PrimeModulus b[] = {seven, PrimeModulus(11)};
    const PrimeModulus c[] = {five, seven};
    const PrimeModulus d[] = {five, seven, PrimeModulus(11)};
    auto ga = minimal_joint_genus(a), gb = minimal_joint_genus(b), gc = minimal_joint_genus(c),
         gd = minimal_joint_genus(d);
    bool ok = ga == 12 && gb == 15 && gc == 18 && gd == 30;
    auto show = [](std::optional<Int> v) { return v ? std::to_string(*v) : std::string("none"); };
    return std::pair(ok, show(ga) + " " + show(gb) + " " + show(gc) + " " + show(gd));
  });
  check("pentagonal row up to genus 40: isolated exactly at even g >= 10, g != 12", [&] {
    std::string bad;
    for (Int g = 4; g <= 40; g += 2) {
      auto e = atlas_entry(g, {5, g / 2 + 2, g / 2 - 1});
      bool expect = g >= 10 && g != 12;
      if ((e.status == AtlasStatus::IsolatedWitnessed) != expect) bad += std::to_string(g) + " ";
    }
    return std::pair(bad.empty(), bad.empty() ? std::string("ok") : "mismatch at " + bad);
  });

  // Printed values that are arithmetically inconsistent.
  {
    std::string finding;
    try {
      validate(five, {1, 2, 3, 3, 3, 4, 4, 4, 4, 4});
      finding = "accepted (unexpected)";
    } catch (const BranchDataError& ex) {
      finding = to_string(ex.code()) + ": " + ex.what() +
                "; an isolated B16 class is recovered by census(5, 10) instead";
    }
    report.errata.push_back({"theta_3", "(1, 2, 3,3,3, 4,4,4,4,4) for B16", finding});
  }
  {
    std::string finding;
    try {
      validate(five, {1, 1, 1, 1, 2, 4, 4, 4});
    } catch (const BranchDataError& ex) {
      finding = "case iv " + to_string(ex.code()) + " (" + ex.what() + "); case iii lists x_1..x_4 and x_6..x_8 "
                "but omits x_5; census(5, 8) has " + std::to_string(census(five, 8).size()) +
                " classes, burnside_count(5, 8) = " + std::to_string(burnside_count(five, 8)) +
                ", while 9 monodromies are printed";
    }
    report.errata.push_back({"B12 list", "nine monodromies i)-ix) for (0; 5^8)", finding});
  }
  report.errata.push_back({"Example 4", "heptagonal isolated strata of dimension 3 at genus 15",
                           "2g/(p-1) - 1 = 30/6 - 1 = 4"});
  report.errata.push_back({"Example 5", "13-gonal isolated strata of dimension 3 at genus 18",
                           "2g/(p-1) - 1 = 36/12 - 1 = 2"});
  {
    std::string finding;
    for (Int pv : {7, 11, 13, 17, 19}) {
      PrimeModulus p(pv);
      for (Int d = 2; d <= 2 * pv + 3; ++d) {
        auto cls = canonical_form(case_construction(p, d));
        if (isolation_verdict(cls).isolated()) continue;
        auto witnesses = prove_extension(cls, 2);
        finding += "p=" + std::to_string(pv) + " d=" + std::to_string(d) + " (case " +
                   std::to_string(construction_case(p, d)) + ")";
        if (!witnesses.empty() && verify_witness(witnesses.front()).ok())
          finding += " extends to " + witnesses.front().group.name() + " over " +
                     witnesses.front().quotient_signature.to_string();
        finding += "; ";
      }
    }
    if (!finding.empty())
      report.errata.push_back({"case constructions",
                               "(1^d, 3, 5, p-8) and (1^d, 4, 5, p-8) are isolated for every p >= 7",
                               finding + "p-8 repeats another tail exponent when p = 11 or 13"});
  }
  return report;
}

}  // namespace pgonal
