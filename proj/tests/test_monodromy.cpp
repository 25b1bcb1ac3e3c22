#include <doctest.h>

#include "oracles.hpp"
#include "pgonal/monodromy.hpp"

using namespace pgonal;

namespace {

BranchDataErrorCode error_of(Int p, std::vector<Int> r) {
  try {
    validate(PrimeModulus(p), std::move(r));
  } catch (const BranchDataError& e) {
    return e.code();
  }
  FAIL("expected BranchDataError");
  return BranchDataErrorCode::TooFewPoints;
}

std::vector<Int> canon(Int p, std::vector<Int> r) { return canonical_form(validate(PrimeModulus(p), std::move(r))).canonical(); }

}  // namespace

TEST_CASE("validate") {
  const BranchData bd = validate(PrimeModulus(5), {1, 1, 1, 2, 3, 3, 4});
  CHECK(bd.k() == 7);
  CHECK(bd.genus() == 10);
  CHECK(bd.dim() == 4);
  CHECK(error_of(5, {1, 2, 3, 3, 3, 4, 4, 4, 4, 4}) == BranchDataErrorCode::SumNotZero);
  CHECK(error_of(5, {1, 1, 1, 1, 2, 4, 4, 4}) == BranchDataErrorCode::SumNotZero);
  CHECK(error_of(7, {1, 1, 0, 5}) == BranchDataErrorCode::ExponentOutOfRange);
  CHECK(error_of(7, {1, 1, 7, 5}) == BranchDataErrorCode::ExponentOutOfRange);
  CHECK(error_of(7, {1, 6}) == BranchDataErrorCode::TooFewPoints);
  CHECK(to_string(BranchDataErrorCode::SumNotZero) == "SumNotZero");
  CHECK(to_string(BranchDataErrorCode::ExponentOutOfRange) == "ExponentOutOfRange");
  CHECK(to_string(BranchDataErrorCode::TooFewPoints) == "TooFewPoints");
}

TEST_CASE("profile") {
  CHECK(profile(validate(PrimeModulus(5), {1, 1, 1, 2, 3, 3, 4})).counts == std::vector<Int>{0, 3, 1, 2, 1});
  CHECK(profile(validate(PrimeModulus(7), {1, 1, 1, 2, 5, 4})).counts == std::vector<Int>{0, 3, 1, 0, 1, 1, 0});
  const Profile all = profile(validate(PrimeModulus(5), {1, 2, 3, 4}));
  CHECK(all.counts == std::vector<Int>{0, 1, 1, 1, 1});
  CHECK(all.max_multiplicity() == 1);
  CHECK(all.to_string() == "(1,1,1,1)");
}

TEST_CASE("canonical_form") {
  CHECK(canon(5, {4, 3, 3}) == std::vector<Int>{1, 1, 3});
  CHECK(canon(5, {1, 1, 3}) == std::vector<Int>{1, 1, 3});
  CHECK(canon(7, {3, 5, 6}) == std::vector<Int>{1, 2, 4});
  CHECK(canon(7, {6, 5, 3}) == std::vector<Int>{1, 2, 4});
  const StratumClass cls = canonical_form(validate(PrimeModulus(7), {1, 1, 1, 2, 5, 4}));
  CHECK(cls.genus() == 12);
  CHECK(cls.dim() == 3);
  CHECK(cls.canonical().front() == 1);
}

TEST_CASE("equivalent") {
  const PrimeModulus seven(7);
  CHECK(equivalent(validate(seven, {1, 2, 4}), validate(seven, {3, 5, 6})));
  CHECK_FALSE(equivalent(validate(seven, {1, 1, 5}), validate(seven, {1, 2, 4})));
  const BranchData bd = validate(seven, {1, 1, 1, 2, 5, 4});
  CHECK(equivalent(bd, bd));
  CHECK_FALSE(equivalent(validate(seven, {1, 2, 4}), validate(seven, {1, 2, 4, 1, 6})));
  CHECK_THROWS(equivalent(validate(PrimeModulus(5), {1, 1, 3}), validate(seven, {1, 2, 4})));
}

TEST_CASE("census") {
  const PrimeModulus five(5), seven(7);
  const auto b12 = census(five, 8);
  CHECK(b12.size() == 10);

  const auto c73 = census(seven, 3);
  REQUIRE(c73.size() == 2);
  CHECK(c73[0].canonical() == std::vector<Int>{1, 1, 5});
  CHECK(c73[1].canonical() == std::vector<Int>{1, 2, 4});

  // The brute-force orbit count decides (5, 3): the four sum-zero multisets
  // {1,1,3}, {1,2,2}, {2,4,4}, {3,3,4} form a single unit orbit.
  const auto c53 = census(five, 3);
  CHECK(c53.size() == oracle::census(5, 3).size());
  CHECK(c53.size() == 1);

  const std::vector<std::size_t> expected{1, 3, 3, 5, 6, 10, 11, 16, 18};
  for (Int k = 3; k <= 11; ++k) CHECK(census(five, k).size() == expected[static_cast<std::size_t>(k - 3)]);
}

TEST_CASE("census is independent of the worker count") {
  for (Int p : {5, 7, 11, 13}) {
    const Int kmax = p == 5 ? 11 : p == 7 ? 8 : 5;
    for (Int k = 3; k <= kmax; ++k) {
      const auto serial = census(PrimeModulus(p), k, kDefaultBudget, 1);
      CHECK(census(PrimeModulus(p), k, kDefaultBudget, 3) == serial);
      CHECK(census(PrimeModulus(p), k, kDefaultBudget, 8) == serial);
    }
  }
}

TEST_CASE("census budget") {
  CHECK_THROWS_AS(census(PrimeModulus(13), 8, 1000), BudgetExceeded);
  try {
    census(PrimeModulus(13), 8, 1000);
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 1000);
  }
  CHECK_THROWS_AS(census(PrimeModulus(13), 8, 1000, 4), BudgetExceeded);
  CHECK_THROWS(census(PrimeModulus(5), 2));
}

TEST_CASE("burnside_count") {
  const PrimeModulus five(5);
  CHECK(burnside_count(five, 8) == 10);
  CHECK(burnside_count(PrimeModulus(7), 3) == 2);
  CHECK(burnside_count(five, 3) == static_cast<Int>(census(five, 3).size()));
  CHECK(burnside_fixed_count(Unit(1, five), 8) == 33);
  CHECK(burnside_fixed_count(Unit(2, five), 8) == 1);
  CHECK(burnside_fixed_count(Unit(3, five), 8) == 1);
  CHECK(burnside_fixed_count(Unit(4, five), 8) == 5);
  // large k is cheap
  CHECK(burnside_count(PrimeModulus(31), 40) > 0);
}

TEST_CASE("case constructions") {
  const PrimeModulus seven(7);
  CHECK(case_construction(seven, 3).exponents() == std::vector<Int>{1, 1, 1, 2, 5, 4});
  CHECK(case_construction(seven, 7).exponents() == std::vector<Int>{1, 1, 1, 1, 1, 1, 1, 3, 5, 6});
  CHECK(construction_case(seven, 3) == 1);
  CHECK(construction_case(seven, 7) == 2);
  CHECK(construction_case(seven, 9) == 3);
  CHECK(construction_case(seven, 5) == 4);
  CHECK(construction_case(seven, 6) == 5);
  for (Int p : {7, 11, 13, 17, 19, 23})
    for (Int d = 2; d <= 3 * p; ++d) {
      const BranchData bd = case_construction(PrimeModulus(p), d);
      CHECK(bd.dim() == d);
    }
  CHECK_THROWS(case_construction(PrimeModulus(5), 4));
  CHECK_THROWS(case_construction(seven, 1));
}
