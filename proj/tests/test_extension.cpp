#include <doctest.h>

#include <algorithm>

#include "pgonal/extension.hpp"
#include "pgonal/isolation.hpp"

using namespace pgonal;

namespace {

StratumClass cls(Int p, std::vector<Int> r) { return canonical_form(validate(PrimeModulus(p), std::move(r))); }

const StratumClass& class_ix() {
  static const StratumClass c = cls(5, {1, 1, 2, 2, 3, 3, 4, 4});
  return c;
}

}  // namespace

TEST_CASE("MetacyclicGroup") {
  const PrimeModulus five(5), seven(7);
  MetacyclicGroup c10(five, 2, Unit(1, five));
  MetacyclicGroup d7(seven, 2, Unit(6, seven));
  MetacyclicGroup c5c4(five, 4, Unit(2, five));
  CHECK(c10.name() == "C10");
  CHECK(d7.name() == "D7");
  CHECK(c5c4.name() == "C5:C4");
  CHECK(MetacyclicGroup(five, 4, Unit(4, five)).name() == "C5:C4[u=4]");
  CHECK(MetacyclicGroup(five, 5, Unit(1, five)).name() == "C5xC5");
  CHECK(MetacyclicGroup(five, 3, Unit(1, five)).name() == "C15");
  CHECK_THROWS(MetacyclicGroup(five, 2, Unit(2, five)));

  CHECK(element_order({0, 0}, c10) == 1);
  CHECK(element_order({1, 0}, c5c4) == 5);
  CHECK(element_order({0, 1}, d7) == 2);
  CHECK(element_order({0, 1}, c5c4) == 4);
  CHECK(element_order({1, 1}, c10) == 10);

  // associativity and inverses, exhaustively on a small group
  const auto elems = c5c4.elements();
  CHECK(elems.size() == 20);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  for (auto x : elems) {
    CHECK(c5c4.multiply(x, c5c4.inverse(x)) == c5c4.identity());
    for (auto y : elems)
      for (auto z : {GroupElement{1, 0}, GroupElement{0, 1}, GroupElement{3, 2}})
        CHECK(c5c4.multiply(c5c4.multiply(x, y), z) == c5c4.multiply(x, c5c4.multiply(y, z)));
  }
  CHECK(c5c4.power({0, 1}, 4) == c5c4.identity());
  const std::vector<GroupElement> gens{{1, 0}, {0, 1}};
  CHECK(c5c4.generated_order(gens) == 20);
  const std::vector<GroupElement> half{{1, 0}, {0, 2}};
  CHECK(c5c4.generated_order(half) == 10);
}

TEST_CASE("quotient_signatures") {
  const PrimeModulus five(5);
  const auto index2 = quotient_signatures(five, 8, 2);
  CHECK(std::find(index2.begin(), index2.end(), Signature(0, {5, 5, 5, 10, 10})) != index2.end());
  for (const auto& s : index2) CHECK(normalized_area(s) * Rational(2) == Rational(22, 5));

  const auto theta1 = quotient_signatures(five, 7, 2);
  for (const auto& s : theta1) {
    CHECK(normalized_area(s) == Rational(9, 5));
    for (Int m : s.periods()) CHECK((m == 2 || m == 5 || m == 10));
  }

  const auto index4 = quotient_signatures(five, 8, 4);
  CHECK_FALSE(index4.empty());
  for (const auto& s : index4) {
    CHECK(normalized_area(s) == Rational(11, 10));
    for (Int m : s.periods()) CHECK(20 % m == 0);
  }
  CHECK(std::find(index4.begin(), index4.end(), Signature(0, {4, 4, 5, 5})) != index4.end());
  CHECK(std::find(index4.begin(), index4.end(), Signature(0, {4, 4, 10})) == index4.end());
}

TEST_CASE("find_witness: class ix in C10 over (0; 5,5,5,10,10)") {
  const PrimeModulus five(5);
  const auto w = find_witness(class_ix(), 2, Unit(1, five));
  REQUIRE(w.has_value());
  CHECK(w->group.name() == "C10");
  CHECK(w->quotient_signature == Signature(0, {5, 5, 5, 10, 10}));
  // Z_5 x Z_2 -> Z_10 with alpha = (1, 0) -> 2 and (0, 1) -> 5.
  std::vector<Int> z10;
  for (auto g : w->images) z10.push_back((2 * g.a + 5 * g.b) % 10);
  CHECK(z10 == std::vector<Int>{2, 4, 6, 9, 9});
  CHECK(verify_witness(*w).ok());
}

TEST_CASE("find_witness: class ix in D5") {
  const PrimeModulus five(5);
  const auto w = find_witness(class_ix(), 2, Unit(4, five));
  REQUIRE(w.has_value());
  CHECK(w->group.name() == "D5");
  CHECK(verify_witness(*w).ok());
}

TEST_CASE("find_witness: isolated class has none") {
  const PrimeModulus five(5);
  const StratumClass theta1 = cls(5, {1, 1, 1, 2, 3, 3, 4});
  CHECK_FALSE(find_witness(theta1, 2, Unit(1, five)).has_value());
  CHECK_FALSE(find_witness(theta1, 2, Unit(4, five)).has_value());
}

TEST_CASE("prove_extension") {
  const auto ws = prove_extension(class_ix(), 4);
  std::vector<std::string> names;
  for (const auto& w : ws) {
    names.push_back(w.group.name());
    CHECK(verify_witness(w).ok());
  }
  for (const char* want : {"C10", "D5", "C5:C4"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());

  CHECK(prove_extension(cls(5, {1, 1, 1, 2, 3, 3, 4}), 6).empty());
  CHECK_FALSE(prove_extension(cls(7, {1, 1, 5}), 2).empty());
  CHECK_THROWS(prove_extension(class_ix(), 1));
}

TEST_CASE("every genus-12 pentagonal class extends with n <= 4") {
  for (const auto& c : census(PrimeModulus(5), 8)) CHECK_FALSE(prove_extension(c, 4).empty());
}

TEST_CASE("explicit constructions with a rotation candidate really extend") {
  for (auto [p, d] : std::vector<std::pair<Int, Int>>{{11, 11}, {13, 12}, {13, 13}}) {
    const StratumClass c = canonical_form(paper_witness(PrimeModulus(p), d));
    const auto ws = prove_extension(c, 2);
    REQUIRE_FALSE(ws.empty());
    CHECK(ws.front().group.name() == "C" + std::to_string(2 * p));
    CHECK(verify_witness(ws.front()).ok());
  }
}

TEST_CASE("verify_witness catches tampering") {
  const PrimeModulus five(5);
  auto w = find_witness(class_ix(), 2, Unit(1, five));
  REQUIRE(w.has_value());
  auto bad = *w;
  bad.images[0] = {3, 0};
  CHECK_FALSE(verify_witness(bad).ok());
  CHECK_FALSE(verify_witness(bad).product_one);
}

TEST_CASE("coset_action") {
  const PrimeModulus five(5);
  const auto w = find_witness(class_ix(), 2, Unit(1, five));
  REQUIRE(w.has_value());
  const PermutationRep rep = coset_action(*w);
  CHECK(rep.degree == 2);
  CHECK(induced_subgroup_signature(w->quotient_signature, rep) == pgonal_signature(five, 8));
}
