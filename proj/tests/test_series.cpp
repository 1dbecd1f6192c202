#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "qseries/partitions.hpp"
#include "qseries/series.hpp"
#include "qseries/special_functions.hpp"

using namespace qseries;
using testing::F5;
using testing::longs;
using testing::series;
using testing::ZZ;

TEST_SUITE("series") {

TEST_CASE("make builds sparse terms and reduces residues") {
  CHECK(longs(make(ZZ, 3, {{0, 1}, {1, -1}})) == std::vector<long>{1, -1, 0, 0});
  CHECK(longs(make(F5, 2, {{1, 7}})) == std::vector<long>{0, 2, 0});
  CHECK_THROWS_AS(make(ZZ, 2, {{3, 1}}), SeriesError);
  CHECK_THROWS_AS(make(ZZ, 4, {{1, 1}, {1, 2}}), SeriesError);
}

TEST_CASE("residue storage rejects out-of-range values") {
  CHECK_THROWS_AS(TruncatedSeries(F5, TruncatedSeries::ResidueCoeffs{0, 5}), SeriesError);
  CHECK_THROWS_AS(TruncatedSeries(ZZ, TruncatedSeries::ResidueCoeffs{0, 1}), SeriesError);
  CHECK_THROWS_AS(TruncatedSeries(ZZ, std::vector<BigInt>{}), SeriesError);
  CHECK_THROWS_AS(CoefficientRing::modulo(1), std::invalid_argument);
}

TEST_CASE("add") {
  CHECK(longs(series(ZZ, {1, 1}) + series(ZZ, {1, -1})) == std::vector<long>{2, 0});
  CHECK(longs(series(F5, {0, 3}) + series(F5, {0, 4})) == std::vector<long>{0, 2});
  const auto a = TruncatedSeries::one(ZZ, 10);
  const auto b = TruncatedSeries::one(ZZ, 4);
  CHECK((a + b).order() == 4);
  CHECK_THROWS_AS(add(series(ZZ, {1}), series(F5, {1})), SeriesError);
}

TEST_CASE("mul") {
  CHECK(longs(series(ZZ, {1, -1, 0, 0}) * series(ZZ, {1, 1, 1, 1})) ==
        std::vector<long>{1, 0, 0, 0});
  CHECK(longs(series(F5, {1, 2, 0}) * series(F5, {1, 3, 0})) == std::vector<long>{1, 0, 1});
  CHECK_THROWS_AS(mul(series(ZZ, {1}), series(F5, {1})), SeriesError);
}

TEST_CASE("(q;q) times the partition generating function is 1 to order 50") {
  const auto table = partition_table(50);
  const TruncatedSeries partitions{ZZ, table.values};
  CHECK(pochhammer(1, ZZ, 50) * partitions == TruncatedSeries::one(ZZ, 50));
}

TEST_CASE("invert") {
  CHECK(longs(invert(series(ZZ, {1, -1, 0, 0, 0, 0}))) == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(longs(invert(pochhammer(1, ZZ, 10))) ==
        std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
  CHECK_THROWS_AS(invert(series(ZZ, {0, 1, 1})), SeriesError);
  CHECK_THROWS_AS(invert(series(ZZ, {2, 1})), SeriesError);
  CHECK_THROWS_AS(invert(series(CoefficientRing::modulo(6), {3, 1})), SeriesError);
  // -1 constant term and a non-trivial unit mod 5.
  CHECK(longs(invert(series(ZZ, {-1, 1, 0}))) == std::vector<long>{-1, -1, -1});
  const auto a = series(F5, {2, 1, 4, 3});
  CHECK(a * invert(a) == TruncatedSeries::one(F5, 3));
}

TEST_CASE("pow") {
  CHECK(longs(pow(series(ZZ, {1, 1, 0}), 2)) == std::vector<long>{1, 2, 1});
  CHECK(pow(series(ZZ, {0, 0, 0}), 0) == TruncatedSeries::one(ZZ, 2));
  CHECK(pow(series(ZZ, {3, 5, 7}), 0) == TruncatedSeries::one(ZZ, 2));
  // (q;q)^5 = (q^5;q^5) mod 5 to order 100; both sides by product expansion.
  CHECK(pow(pochhammer(1, F5, 100), 5) == pochhammer(5, F5, 100));
}

TEST_CASE("substitute_power") {
  CHECK(longs(substitute_power(series(ZZ, {1, 1}), 5)) == std::vector<long>{1, 0});
  CHECK(longs(substitute_power(series(ZZ, {1, 1}), 5, 5)) == std::vector<long>{1, 0, 0, 0, 0, 1});
  const auto phi_q25 = substitute_power(phi(ZZ, 2), 25, 50);
  CHECK(phi_q25 == make(ZZ, 50, {{0, 1}, {25, 2}}));
  const auto a = series(ZZ, {4, -3, 2, 9});
  CHECK(substitute_power(a, 1) == a);
  CHECK_THROWS_AS(substitute_power(a, 2, 8), SeriesError);  // max is 2*4 - 1 = 7
  CHECK_THROWS_AS(substitute_power(a, 0), SeriesError);
}

TEST_CASE("dissect") {
  const auto table = partition_table(104);
  const auto fifths = dissect(TruncatedSeries{ZZ, table.values}, 5, 4);
  CHECK(fifths.order() == 20);
  // p(4), p(9), p(14), p(19), p(24) from brute-force enumeration.
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(fifths.coeff(n) == oracle::count_partitions(5 * n + 4, 5 * n + 4));
  }
  CHECK(longs(fifths).front() == 5);
  CHECK(longs(dissect(series(ZZ, {1, 1, 1}), 2, 1)) == std::vector<long>{1});
  const auto a = series(ZZ, {4, -3, 2, 9});
  CHECK(dissect(a, 1, 0) == a);
  CHECK_THROWS_AS(dissect(a, 2, 2), SeriesError);
  CHECK_THROWS_AS(dissect(a, 5, 4), SeriesError);  // residue beyond the order
}

TEST_CASE("negate_variable") {
  CHECK(longs(negate_variable(series(ZZ, {1, 1, 1}))) == std::vector<long>{1, -1, 1});
  CHECK(longs(negate_variable(series(F5, {0, 1}))) == std::vector<long>{0, 4});
  const auto a = series(ZZ, {4, -3, 2, 9});
  CHECK(negate_variable(negate_variable(a)) == a);
}

TEST_CASE("reduce_mod") {
  CHECK(longs(reduce_mod(series(ZZ, {5, 6}), 5)) == std::vector<long>{0, 1});
  CHECK(longs(reduce_mod(series(ZZ, {-1}), 5)) == std::vector<long>{4});
  const auto table = partition_table(24);
  const auto reduced = reduce_mod(TruncatedSeries{ZZ, table.values}, 5);
  for (std::size_t e : {4, 9, 14, 19, 24}) CHECK(reduced.coeff(e) == 0);
  CHECK_THROWS_AS(reduce_mod(series(F5, {1}), 5), SeriesError);
}

TEST_CASE("equal_to_order") {
  const auto a = series(ZZ, {1, 1});
  const auto b = series(ZZ, {1, -1});
  CHECK(equal_to_order(a, a, 1).equal);
  const auto diff = equal_to_order(a, b, 1);
  CHECK_FALSE(diff.equal);
  REQUIRE(diff.first_difference.has_value());
  CHECK(*diff.first_difference == 1);
  CHECK(equal_to_order(a, b, 0).equal);
  CHECK_THROWS_AS(equal_to_order(a, b, 2), SeriesError);
  CHECK_THROWS_AS(equal_to_order(a, series(F5, {1, 1}), 0), SeriesError);
}

TEST_CASE("shift and truncate") {
  CHECK(longs(shift(series(ZZ, {1, 2, 3}), 1)) == std::vector<long>{0, 1, 2});
  CHECK(longs(shift(series(ZZ, {1, 2, 3}), 5)) == std::vector<long>{0, 0, 0});
  CHECK(longs(truncate(series(ZZ, {1, 2, 3}), 1)) == std::vector<long>{1, 2});
  CHECK_THROWS_AS(truncate(series(ZZ, {1}), 1), SeriesError);
}

TEST_CASE("exact coefficients grow past 64 bits") {
  // p(500) has 22 digits.
  const auto partitions = invert(pochhammer(1, ZZ, 500));
  CHECK(partitions.coeff(500).get_str() == "2300165032574323995027");
}

TEST_CASE("to_string") {
  CHECK(series(ZZ, {1, -1, -1, 0, 0, 1}).to_string() == "1 - q - q^2 + q^5 + O(q^6)");
  CHECK(series(F5, {0, 0}).to_string() == "0 + O(q^2) mod 5");
}

TEST_CASE("property: schoolbook product agrees with the oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t order = rng() % 20;
    const auto a = oracle::random_poly(rng, order, 50);
    const auto b = oracle::random_poly(rng, order, 50);
    const auto expected = oracle::multiply(a, b);
    CHECK(longs(series(ZZ, a) * series(ZZ, b)) ==
          std::vector<long>(expected.begin(), expected.end()));
  }
}

TEST_CASE("property: substitute_power composes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_series(rng, 30);
    const std::size_t j = 1 + rng() % 4;
    const std::size_t k = 1 + rng() % 4;
    const auto lhs = substitute_power(a, j * k);
    const auto rhs = substitute_power(substitute_power(a, j), k);
    CHECK(equal_to_order(lhs, rhs, std::min(lhs.order(), rhs.order())).equal);
  }
}

}  // TEST_SUITE
