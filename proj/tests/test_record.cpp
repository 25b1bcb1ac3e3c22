#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "pgonal/cache.hpp"
#include "pgonal/record.hpp"

using namespace pgonal;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("pgonal-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("parse_exponents and format_exponents") {
  CHECK(parse_exponents("1^7,3,5,6") == std::vector<Int>{1, 1, 1, 1, 1, 1, 1, 3, 5, 6});
  CHECK(parse_exponents("1,1,1,2,3,3,4") == std::vector<Int>{1, 1, 1, 2, 3, 3, 4});
  CHECK(parse_exponents(" 2 , 3 ") == std::vector<Int>{2, 3});
  CHECK(parse_exponents("0") == std::vector<Int>{0});
  CHECK_THROWS_AS(parse_exponents(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponents("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponents("1,a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponents("-1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponents("1^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponents("99999999999999999999"), std::invalid_argument);
  CHECK(format_exponents({1, 1, 1, 1, 1, 1, 1, 3, 5, 6}) == "1^7,3,5,6");
  CHECK(format_exponents({1, 1, 2, 2, 3, 3, 4, 4}) == "1,1,2,2,3,3,4,4");
  for (const auto& v : {std::vector<Int>{1, 1, 1, 2, 3, 3, 3, 4}, std::vector<Int>{5}, std::vector<Int>{2, 2, 2}})
    CHECK(parse_exponents(format_exponents(v)) == v);
}

TEST_CASE("ResultRecord round-trips through JSON") {
  const StratumClass cls = canonical_form(validate(PrimeModulus(5), {1, 1, 2, 2, 3, 3, 4, 4}));
  ResultRecord r = make_record(cls, 4);
  CHECK(r.verdict == "HasCandidates");
  CHECK(r.profile == std::vector<Int>{2, 2, 2, 2});
  CHECK(r.g == 12);
  CHECK(r.d == 5);
  CHECK(r.witnesses.size() >= 3);
  const ordered_json j = r;
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema_version", "p", "k", "canonical", "profile", "g", "d", "verdict",
                                         "candidates", "witnesses", "timing"});
  CHECK(j["timing"].is_null());
  CHECK(ordered_json::parse(j.dump()).get<ResultRecord>() == r);

  r.timing_ms = 1.25;
  const ordered_json timed = r;
  CHECK(timed.get<ResultRecord>() == r);
}

TEST_CASE("csv") {
  const StratumClass cls = canonical_form(validate(PrimeModulus(7), {1, 1, 1, 2, 5, 4}));
  CHECK(csv_header() == "p,k,canonical,g,d,verdict,candidate_count,witness_count");
  CHECK(csv_row(make_record(cls)) == "7,6,1 1 1 2 4 5,12,3,Isolated,0,0");
}

TEST_CASE("ResultCache stores, looks up and keeps the latest value") {
  TempDir dir;
  ResultCache cache(dir.path);
  const std::string key = cache_key("census", 5, 8, "", "extend=0");
  CHECK_FALSE(cache.lookup(5, 8, key).has_value());
  cache.store(5, 8, key, ordered_json{{"x", 1}});
  cache.store(5, 8, cache_key("census", 5, 8, "", "extend=4"), ordered_json{{"x", 2}});
  CHECK(cache.lookup(5, 8, key) == ordered_json{{"x", 1}});
  cache.store(5, 8, key, ordered_json{{"x", 3}});
  CHECK(cache.lookup(5, 8, key) == ordered_json{{"x", 3}});
  CHECK(fs::exists(cache.file_for(5, 8)));
  CHECK_FALSE(cache.lookup(5, 9, key).has_value());

  // a torn trailing line is ignored
  { std::ofstream(cache.file_for(5, 8), std::ios::app) << "{\"key\": \"v1|cen"; }
  CHECK(cache.lookup(5, 8, key) == ordered_json{{"x", 3}});
  cache.store(5, 8, key, ordered_json{{"x", 4}});
  CHECK(cache.lookup(5, 8, key) == ordered_json{{"x", 4}});

  // no temporary files left behind
  for (const auto& entry : fs::directory_iterator(dir.path)) CHECK(entry.path().extension() == ".jsonl");
}

TEST_CASE("cached records equal fresh records") {
  TempDir dir;
  ResultCache cache(dir.path);
  for (const auto& cls : census(PrimeModulus(7), 5)) {
    const ResultRecord fresh = make_record(cls, 3);
    const std::string key = cache_key("classify", 7, 5, format_exponents(cls.canonical()), "extend=3");
    cache.store(7, 5, key, fresh);
    CHECK(cache.lookup(7, 5, key)->get<ResultRecord>() == fresh);
  }
}

TEST_CASE("cache key covers every parameter") {
  const std::string base = cache_key("classify", 5, 7, "1,1,1,2,3,3,4", "extend=0");
  CHECK(base != cache_key("census", 5, 7, "1,1,1,2,3,3,4", "extend=0"));
  CHECK(base != cache_key("classify", 7, 7, "1,1,1,2,3,3,4", "extend=0"));
  CHECK(base != cache_key("classify", 5, 8, "1,1,1,2,3,3,4", "extend=0"));
  CHECK(base != cache_key("classify", 5, 7, "1,1,1,2,3,4,3", "extend=0"));
  CHECK(base != cache_key("classify", 5, 7, "1,1,1,2,3,3,4", "extend=4"));
  CHECK(base.rfind("v1|", 0) == 0);
}

TEST_CASE("default cache directory honours PGS_CACHE_DIR") {
  ::setenv("PGS_CACHE_DIR", "/tmp/pgonal-env-test", 1);
  CHECK(ResultCache::default_dir() == fs::path("/tmp/pgonal-env-test"));
  ::unsetenv("PGS_CACHE_DIR");
  CHECK(ResultCache::default_dir().filename() == "pgonal-strata");
}
