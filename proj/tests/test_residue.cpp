#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "zpsum/residue.hpp"
#include "zpsum/serialize.hpp"

using namespace zpsum;

TEST_CASE("primality is validated at construction") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK_THROWS_AS(PrimeModulus(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(12), std::invalid_argument);
  CHECK_NOTHROW(PrimeModulus(9973));
}

TEST_CASE("norm") {
  PrimeModulus p11(11), p13(13);
  CHECK(p11.norm(10) == 1);
  CHECK(p11.norm(0) == 0);
  CHECK(p13.norm(6) == 6);
  for (Residue x = 1; x < 11; ++x) {
    CHECK(p11.norm(x) == p11.norm(11 - x));
    CHECK(p11.norm(x) <= 5);
  }
  CHECK_THROWS_AS(p11.norm(11), std::invalid_argument);
}

TEST_CASE("signed representatives") {
  PrimeModulus p(11);
  CHECK(p.signed_rep(10) == -1);
  CHECK(p.signed_rep(5) == 5);
  CHECK(p.signed_rep(6) == -5);
  for (Residue x = 0; x < 11; ++x) {
    CHECK(p.reduce(p.signed_rep(x)) == x);  // bijection
  }
}

TEST_CASE("f_control") {
  CHECK(f_control(PrimeModulus(11), 1) == 36);
  CHECK(f_control(PrimeModulus(2), 1) == 1);
  for (std::int64_t pv : {2, 3, 5, 7, 11, 101}) {
    PrimeModulus p(pv);
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(pv, 4); ++m) {
      CHECK(f_control(p, m) >= 0);
    }
  }
  CHECK_THROWS_AS(f_control(PrimeModulus(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(f_control(PrimeModulus(5), 6), std::invalid_argument);
}

TEST_CASE("dilation") {
  PrimeModulus p(11);
  ResidueSequence a(p, {3, 6, 9});
  CHECK(dilate(a, 4) == ResidueSequence(p, {1, 2, 3}));
  CHECK(dilate(a, 1) == a);
  CHECK(dilate(ResidueSequence(p, {1, 1, 7}), 2) ==
        ResidueSequence(p, {2, 2, 3}));
  CHECK_THROWS_AS(dilate(a, 0), std::invalid_argument);
  CHECK_THROWS_AS(dilate(a, 11), std::invalid_argument);
}

TEST_CASE("dilation inverts") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto p = testsupport::random_prime(rng);
    if (p.value() == 2) continue;
    auto a = testsupport::random_sequence(rng, p, 10);
    const Residue b =
        1 + static_cast<Residue>(testsupport::uniform_below(
                rng, static_cast<std::uint64_t>(p.value() - 1)));
    const ResidueSequence d = dilate(a, b);
    CHECK(dilate(d, p.inverse(b)) == a);
    CHECK(d.cardinality() == a.cardinality());
    CHECK(d.max_multiplicity() == a.max_multiplicity());
  }
}

TEST_CASE("translation") {
  PrimeModulus p(11);
  ResidueSequence a(p, {1, 1, 7});
  CHECK(translate(a, 0) == a);
  CHECK(translate(a, 4) == ResidueSequence(p, {5, 5, 0}));
  CHECK(translate(ResidueSequence(p, {0}), 10) == ResidueSequence(p, {10}));
  CHECK(translate(a, 4).cardinality() == 3);
  CHECK(translate(a, 4).max_multiplicity() == 2);
}

TEST_CASE("decompose_check") {
  PrimeModulus p(11);
  ResidueSequence a(p, {1, 1, 7});
  std::vector<ResidueSequence> good{ResidueSequence(p, {1, 7}),
                                    ResidueSequence(p, {1})};
  std::vector<ResidueSequence> bad{ResidueSequence(p, {1, 7}),
                                   ResidueSequence(p, {7})};
  std::vector<ResidueSequence> trivial{a, ResidueSequence(p)};
  CHECK(decompose_check(a, good));
  CHECK_FALSE(decompose_check(a, bad));
  CHECK(decompose_check(a, trivial));
  std::vector<ResidueSequence> mismatch{ResidueSequence(PrimeModulus(7))};
  CHECK_THROWS_AS(decompose_check(a, mismatch), std::invalid_argument);
}

TEST_CASE("multiplicity cap is a construction error") {
  PrimeModulus p(3);
  std::vector<std::pair<Residue, Count>> over{{1, 4}};
  CHECK_THROWS_AS(
      ResidueSequence::from_pairs(p, std::span<const std::pair<Residue, Count>>(over)),
      std::invalid_argument);
  std::vector<std::pair<Residue, Count>> exact{{1, 3}};
  CHECK_NOTHROW(ResidueSequence::from_pairs(
      p, std::span<const std::pair<Residue, Count>>(exact)));
  std::vector<std::pair<Residue, Count>> zero{{1, 0}};
  CHECK_THROWS_AS(
      ResidueSequence::from_pairs(p, std::span<const std::pair<Residue, Count>>(zero)),
      std::invalid_argument);
}

TEST_CASE("sequence accessors") {
  PrimeModulus p(11);
  ResidueSequence a(p, {7, 1, 1});
  CHECK(a.cardinality() == 3);
  CHECK(a.max_multiplicity() == 2);
  CHECK(a.multiplicity(1) == 2);
  CHECK(a.multiplicity(2) == 0);
  CHECK(a.flatten() == std::vector<Residue>{1, 1, 7});
  CHECK(a.signed_values() == std::vector<std::int64_t>{-4, 1, 1});
  CHECK(a.element_sum() == 9);
  CHECK(a.norm_sum() == 1 + 1 + 4);
  CHECK(a.contains_submultiset(ResidueSequence(p, {1, 7})));
  CHECK_FALSE(a.contains_submultiset(ResidueSequence(p, {7, 7})));
  CHECK(a.remove(ResidueSequence(p, {1})) == ResidueSequence(p, {1, 7}));
  CHECK_THROWS_AS(a.remove(ResidueSequence(p, {2})), std::invalid_argument);
  ResidueSequence empty(p);
  CHECK(empty.empty());
  CHECK(empty.cardinality() == 0);
  CHECK(a.unite(empty) == a);
}

TEST_CASE("text format round trips") {
  const ResidueSequence a = parse_sequence_text("p=11; A=1^2,7");
  CHECK(a == ResidueSequence(PrimeModulus(11), {1, 1, 7}));
  CHECK(sequence_to_text(a) == "p=11; A=1^2,7");
  CHECK(parse_sequence_text(sequence_to_text(a)) == a);

  // negatives and whitespace tolerated on input, canonical on output
  const ResidueSequence b = parse_sequence_text("p=11; A= -2 , 4^3 ");
  CHECK(sequence_to_text(b) == "p=11; A=4^3,9");

  const ResidueSequence empty = parse_sequence_text("p=7; A=");
  CHECK(empty.empty());
  CHECK(sequence_to_text(empty) == "p=7; A=");
  CHECK(parse_sequence_text(sequence_to_text(empty)) == empty);

  CHECK_THROWS_AS(parse_sequence_text("p=10; A=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence_text("p=11 A=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence_text("p=11; A=1^,2"), std::invalid_argument);
}

TEST_CASE("structured format round trips") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto p = testsupport::random_prime(rng);
    auto a = testsupport::random_sequence(rng, p, 8);
    CHECK(sequence_from_json(sequence_to_json(a)) == a);
    CHECK(parse_sequence_text(sequence_to_text(a)) == a);
  }
  const Json j = sequence_to_json(parse_sequence_text("p=11; A=1^2,7"));
  CHECK(j.dump() == R"({"p":11,"elements":[[1,2],[7,1]]})");
}
