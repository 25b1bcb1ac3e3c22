#include <doctest.h>

#include <algorithm>

#include "pgonal/atlas.hpp"
#include "pgonal/isolation.hpp"

using namespace pgonal;

namespace {

using Rows = std::vector<std::pair<Int, Int>>;

Rows rows(const std::vector<Gonality>& gs) {
  Rows out;
  for (const auto& g : gs) out.push_back({g.p, g.d});
  return out;
}

Rows rows(const std::vector<AtlasEntry>& es) {
  Rows out;
  for (const auto& e : es) out.push_back({e.p, e.d});
  return out;
}

const AtlasEntry& row(const std::vector<AtlasEntry>& es, Int p) {
  auto it = std::find_if(es.begin(), es.end(), [p](const AtlasEntry& e) { return e.p == p; });
  REQUIRE(it != es.end());
  return *it;
}

}  // namespace

TEST_CASE("gonalities") {
  CHECK(rows(gonalities(60)) == Rows{{5, 29}, {7, 19}, {11, 11}, {13, 9}, {31, 3}, {41, 2}, {61, 1}});
  CHECK(rows(gonalities(1000)) == Rows{{5, 499}, {11, 199}, {17, 124}, {41, 49}, {101, 19}, {251, 7}, {401, 4}});
  const auto g2012 = gonalities(2012);
  REQUIRE(g2012.size() == 1);
  CHECK(g2012[0] == Gonality{5, 1008, 1005});
  CHECK(rows(gonalities(15)) == Rows{{7, 4}, {11, 2}, {31, 0}});
  CHECK(rows(gonalities(18)) == Rows{{5, 8}, {7, 5}, {13, 2}, {19, 1}, {37, 0}});
  CHECK_THROWS(gonalities(1));
}

TEST_CASE("atlas: worked genera") {
  const auto a12 = atlas(12);
  CHECK(row(a12, 7).status == AtlasStatus::IsolatedWitnessed);
  CHECK(row(a12, 7).d == 3);
  CHECK(row(a12, 13).status == AtlasStatus::IsolatedWitnessed);
  CHECK(row(a12, 13).d == 1);
  CHECK(row(a12, 5).status == AtlasStatus::NoneIsolated);
  CHECK(row(a12, 5).d == 5);

  const auto a10 = atlas(10);
  CHECK(rows(a10) == Rows{{5, 4}, {11, 1}});
  for (const auto& e : a10) CHECK(e.status == AtlasStatus::IsolatedWitnessed);

  const auto a24 = atlas(24);
  CHECK(rows(a24) == Rows{{5, 11}, {7, 7}, {13, 3}, {17, 2}});
  for (const auto& e : a24) CHECK(e.status == AtlasStatus::IsolatedWitnessed);
}

TEST_CASE("atlas witnesses are isolated and the right size") {
  for (Int g : {10, 20, 24, 30, 60, 1000, 2012}) {
    for (const auto& e : atlas(g)) {
      REQUIRE(e.witness.has_value());
      CHECK(e.witness->p().value() == e.p);
      CHECK(e.witness->k() == e.k);
      CHECK(isolation_verdict(*e.witness).isolated());
    }
  }
}

TEST_CASE("atlas: fallback when the explicit construction is not isolated") {
  const auto& e = row(atlas(60), 11);
  CHECK(e.status == AtlasStatus::IsolatedWitnessed);
  CHECK_FALSE(e.construction_isolated);
  CHECK_FALSE(e.note.empty());
  CHECK(row(atlas(60), 7).construction_isolated);
}

TEST_CASE("atlas: census mode agrees with witness mode on small genera") {
  AtlasOptions census_mode;
  census_mode.mode = AtlasMode::Census;
  for (Int g = 2; g <= 16; ++g) {
    const auto w = atlas(g);
    const auto c = atlas(g, census_mode);
    REQUIRE(w.size() == c.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i].status == c[i].status);
      CHECK(c[i].class_count.has_value());
    }
  }
}

TEST_CASE("atlas: small primes are informational") {
  AtlasOptions opts;
  opts.include_small_primes = true;
  const auto a = atlas(10, opts);
  REQUIRE(a.size() == 4);
  CHECK(a[0].p == 2);
  CHECK(a[1].p == 3);
  CHECK(a[0].status == AtlasStatus::Informational);
  CHECK(a[1].status == AtlasStatus::Informational);
}

TEST_CASE("atlas: genus 2") {
  const auto a = atlas(2);
  REQUIRE(a.size() == 1);
  CHECK(a[0].p == 5);
  CHECK(a[0].d == 0);
  CHECK(a[0].status == AtlasStatus::NoneIsolated);
  CHECK(a[0].note.find("genus 2") != std::string::npos);
}

TEST_CASE("atlas: budget exhaustion is Undetermined") {
  AtlasOptions opts;
  opts.mode = AtlasMode::Census;
  opts.budget = 10;
  const auto a = atlas(60, opts);
  CHECK(row(a, 5).status == AtlasStatus::Undetermined);
}

TEST_CASE("atlas is independent of the worker count") {
  AtlasOptions par;
  par.jobs = 4;
  for (Int g : {12, 30, 60, 1000}) {
    const auto a = atlas(g);
    const auto b = atlas(g, par);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].witness == b[i].witness);
      CHECK(a[i].status == b[i].status);
    }
  }
}

TEST_CASE("multiprime") {
  const std::vector<PrimeModulus> p57{PrimeModulus(5), PrimeModulus(7)};
  const auto rep = multiprime(p57, 2, 6);
  CHECK(rep.lambda == 6);
  REQUIRE(rep.genera.size() == 5);
  CHECK(rep.genera[0].g == 12);
  CHECK(rep.genera[0].isolated_primes == std::vector<Int>{7});
  CHECK_FALSE(rep.genera[0].warnings.empty());
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK(rep.genera[i].isolated_primes == std::vector<Int>{5, 7});
    CHECK(rep.genera[i].r == 2);
  }
  // genus 18 also carries a 13-gonal isolated stratum
  const auto& g18 = rep.genera[1];
  CHECK(g18.g == 18);
  CHECK(row(g18.entries, 13).status == AtlasStatus::IsolatedWitnessed);

  const std::vector<PrimeModulus> p511{PrimeModulus(5), PrimeModulus(11)};
  const auto r20 = multiprime(p511, 2, 2);
  REQUIRE(r20.genera.size() == 1);
  CHECK(r20.genera[0].g == 20);
  CHECK(row(r20.genera[0].entries, 5).d == 9);
  CHECK(row(r20.genera[0].entries, 11).d == 3);
}

TEST_CASE("minimal_joint_genus") {
  CHECK(minimal_joint_genus(std::vector<PrimeModulus>{PrimeModulus(7), PrimeModulus(13)}) == 12);
  CHECK(minimal_joint_genus(std::vector<PrimeModulus>{PrimeModulus(7), PrimeModulus(11)}) == 15);
  CHECK(minimal_joint_genus(std::vector<PrimeModulus>{PrimeModulus(5), PrimeModulus(7)}) == 18);
  CHECK(minimal_joint_genus(std::vector<PrimeModulus>{PrimeModulus(5), PrimeModulus(7), PrimeModulus(11)}) == 30);
}

TEST_CASE("paper_check") {
  const PaperCheckReport rep = paper_check();
  for (const auto& c : rep.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(rep.passed());
  CHECK(rep.errata.size() == 5);
}
