#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "zpsum/classify.hpp"
#include "zpsum/counting.hpp"
#include "zpsum/enumerate.hpp"
#include "zpsum/oracle.hpp"
#include "zpsum/sumset.hpp"

using namespace zpsum;

namespace {

std::vector<Residue> members(const SumsetMask& m) { return m.residues(); }

}  // namespace

TEST_CASE("sigma on the worked example") {
  PrimeModulus p(11);
  ResidueSequence a(p, {1, 1, 7});
  CHECK(members(sigma(a)) == std::vector<Residue>{1, 2, 7, 8, 9});
}

TEST_CASE("sigma basics") {
  PrimeModulus p(11);
  CHECK(members(sigma(ResidueSequence(p, {6}))) == std::vector<Residue>{6});
  CHECK(members(sigma(ResidueSequence(PrimeModulus(7), {1, 2, 3}))) ==
        std::vector<Residue>{1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(sigma(ResidueSequence(p)), std::invalid_argument);
}

TEST_CASE("sigma_l on the worked example") {
  PrimeModulus p(11);
  ResidueSequence a(p, {1, 1, 7});
  CHECK(members(sigma_l(a, 2)) == std::vector<Residue>{2, 8});
  CHECK(members(sigma_l(a, 3)) == std::vector<Residue>{9});  // full selection
  CHECK(members(sigma_l(ResidueSequence(p, {1, 2, 3, 4}), 2)) ==
        std::vector<Residue>{3, 4, 5, 6, 7});
  CHECK(members(sigma_l(a, 0)) == std::vector<Residue>{0});
  CHECK_THROWS_AS(sigma_l(a, 4), std::invalid_argument);
  CHECK_THROWS_AS(sigma_l(a, -1), std::invalid_argument);
}

TEST_CASE("sigma_l_window") {
  PrimeModulus p(11);
  ResidueSequence a(p, {1, 1, 7});
  CHECK(sigma_l_window(a, 1, 3) == sigma(a));
  CHECK(sigma_l_window(a, 2, 2) == sigma_l(a, 2));
  ResidueSequence zeros(PrimeModulus(7), {0, 0, 0});
  CHECK(members(sigma_l_window(zeros, 1, 3)) == std::vector<Residue>{0});
  CHECK_THROWS_AS(sigma_l_window(a, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(sigma_l_window(a, 0, 4), std::invalid_argument);
}

TEST_CASE("lsum_range_int") {
  std::vector<std::int64_t> s{-2, 0, 1, 3};
  CHECK(lsum_range_int(s, 2) == IntRange{-2, 4});
  CHECK(lsum_range_int(s, 0) == IntRange{0, 0});
  std::vector<std::int64_t> c{5, 5, 5};
  CHECK(lsum_range_int(c, 2) == IntRange{10, 10});
  CHECK_THROWS_AS(lsum_range_int(s, 5), std::invalid_argument);
}

TEST_CASE("longest_ap") {
  PrimeModulus p(11);
  // Exhaustive scan of {1,2,7,8,9}: the longest progression has four
  // terms, 8, 2, 7, 1 with difference 5 (the consecutive run 7,8,9 is
  // shorter). Smallest difference wins among the length-4 candidates
  // (d=5 start 8 and d=6 start 1).
  SumsetMask m = sigma(ResidueSequence(p, {1, 1, 7}));
  CHECK(longest_ap(m) == APWitness{8, 5, 4});

  SumsetMask full(p);
  for (Residue r = 0; r < 11; ++r) full.set(r);
  CHECK(longest_ap(full) == APWitness{0, 1, 11});

  SumsetMask single(p);
  single.set(4);
  CHECK(longest_ap(single) == APWitness{4, 1, 1});

  CHECK_THROWS_AS(longest_ap(SumsetMask(p)), std::invalid_argument);
}

TEST_CASE("longest_ap terms lie in the mask") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    auto p = testsupport::random_prime(rng, 31);
    auto a = testsupport::random_sequence(rng, p, 6);
    const SumsetMask m = sigma(a);
    const APWitness w = longest_ap(m);
    CHECK(w.length >= 1);
    for (std::int64_t i = 0; i < w.length; ++i) {
      CHECK(m.test(p.reduce(w.start + i * w.diff)));
    }
  }
}

TEST_CASE("knet_check") {
  PrimeModulus p(11);
  std::vector<Residue> x{0, 5};
  CHECK(knet_check(p, x, 5));
  std::vector<Residue> all;
  for (Residue r = 0; r < 11; ++r) all.push_back(r);
  CHECK(knet_check(p, all, 0));
  std::vector<Residue> one{0};
  CHECK_FALSE(knet_check(p, one, 9));
  CHECK(knet_check(p, one, 10));
  CHECK_THROWS_AS(knet_check(p, std::vector<Residue>{}, 3),
                  std::invalid_argument);
}

TEST_CASE("knet_check agrees with the quadratic checker") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    auto p = testsupport::random_prime(rng);
    const std::int64_t size =
        1 + static_cast<std::int64_t>(testsupport::uniform_below(
                rng, static_cast<std::uint64_t>(p.value())));
    std::vector<Residue> x;
    for (std::int64_t i = 0; i < size; ++i) {
      x.push_back(static_cast<Residue>(testsupport::uniform_below(
          rng, static_cast<std::uint64_t>(p.value()))));
    }
    const std::int64_t k = static_cast<std::int64_t>(
        testsupport::uniform_below(rng, static_cast<std::uint64_t>(p.value())));
    CHECK(knet_check(p, x, k) == oracle::knet_brute(p, x, k));
  }
}

TEST_CASE("oracle equivalence, exhaustive small multisets") {
  // every multiset over Z_5 with multiplicities <= 2 and 1 <= |A| <= 4
  PrimeModulus p(5);
  for (Count size = 1; size <= 4; ++size) {
    for_each_multiplicity_vector(
        5, size, 2, [&](const std::vector<std::int64_t>& mult) {
          std::vector<std::pair<Residue, Count>> pairs;
          for (std::size_t r = 0; r < mult.size(); ++r) {
            if (mult[r] > 0) {
              pairs.emplace_back(static_cast<Residue>(r), mult[r]);
            }
          }
          const ResidueSequence a = ResidueSequence::from_pairs(p, pairs);
          SumsetMask sig(p);
          std::vector<SumsetMask> rows;
          oracle::all_sums_brute(a, sig, rows);
          REQUIRE(sigma(a) == sig);
          for (Count l = 0; l <= a.cardinality(); ++l) {
            REQUIRE(sigma_l(a, l) == rows[static_cast<std::size_t>(l)]);
          }
        });
  }
}

TEST_CASE("oracle equivalence, random sequences") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    auto p = testsupport::random_prime(rng);
    auto a = testsupport::random_sequence(rng, p, 12);
    SumsetMask sig(p);
    std::vector<SumsetMask> rows;
    oracle::all_sums_brute(a, sig, rows);
    REQUIRE(sigma(a) == sig);
    const Count l = static_cast<Count>(testsupport::uniform_below(
        rng, static_cast<std::uint64_t>(a.cardinality() + 1)));
    REQUIRE(sigma_l(a, l) == rows[static_cast<std::size_t>(l)]);
    // window query equals the union of its rows
    SumsetMask expect(p);
    for (Count c = l; c <= a.cardinality(); ++c) {
      expect |= rows[static_cast<std::size_t>(c)];
    }
    REQUIRE(sigma_l_window(a, l, a.cardinality()) == expect);
  }
}

TEST_CASE("dilation equivariance and translation rule") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    auto p = testsupport::random_prime(rng);
    if (p.value() == 2) continue;
    auto a = testsupport::random_sequence(rng, p, 8);
    const Residue b =
        1 + static_cast<Residue>(testsupport::uniform_below(
                rng, static_cast<std::uint64_t>(p.value() - 1)));
    const Residue c = static_cast<Residue>(testsupport::uniform_below(
        rng, static_cast<std::uint64_t>(p.value())));

    CHECK(sigma(dilate(a, b)) == sigma(a).dilated(b));

    const Count l = static_cast<Count>(testsupport::uniform_below(
        rng, static_cast<std::uint64_t>(a.cardinality() + 1)));
    CHECK(sigma_l(dilate(a, b), l) == sigma_l(a, l).dilated(b));
    CHECK(sigma_l(translate(a, c), l) ==
          sigma_l(a, l).rotated(p.reduce(l * c)));
  }
}

TEST_CASE("monotonicity under adjoining an element") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 200; ++t) {
    auto p = testsupport::random_prime(rng);
    auto a = testsupport::random_sequence(rng, p, 6);
    const Residue x = static_cast<Residue>(testsupport::uniform_below(
        rng, static_cast<std::uint64_t>(p.value())));
    ResidueSequence extra(p, {x});
    if (a.multiplicity(x) + 1 > p.value()) continue;
    const SumsetMask before = sigma(a);
    SumsetMask after = sigma(a.unite(extra));
    SumsetMask join = after;
    join |= before;
    CHECK(join == after);  // before is a subset of after
  }
}

TEST_CASE("prefix-sum bound for zero-sum-free sequences") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 200; ++t) {
    auto p = testsupport::random_prime(rng);
    if (p.value() < 3) continue;
    const auto parts =
        testsupport::random_bounded_partition(rng, p.value() - 1, 2);
    const ResidueSequence a = zsf_from_partition(parts, p);
    REQUIRE(is_zero_sum_free(a));
    CHECK(sigma(a).popcount() >= a.cardinality());
  }
}
