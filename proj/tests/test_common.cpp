#include "doctest.h"

#include <numbers>

#include "cohwit/common.hpp"

using namespace cohwit;

constexpr double kPi = std::numbers::pi;

TEST_CASE("wrap_angle maps onto [0, 2*pi)") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(-kPi / 2.0) == doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-15));
  CHECK(wrap_angle(kTwoPi) == 0.0);
  CHECK(wrap_angle(7.0 * kPi) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(wrap_angle(-1e-9) < kTwoPi);
  CHECK(wrap_angle(-1e-9) >= 0.0);
}

TEST_CASE("circular_distance is the shorter arc") {
  CHECK(circular_distance(0.1, kTwoPi - 0.1) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(circular_distance(0.0, kPi) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(circular_distance(1.0, 1.0 + kTwoPi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(circular_distance(5.0, 1.0) == circular_distance(1.0, 5.0));
}

TEST_CASE("pair bookkeeping is lexicographic") {
  CHECK(pair_count(2) == 1);
  CHECK(pair_count(3) == 3);
  CHECK(pair_count(8) == 28);
  CHECK_THROWS_AS(pair_count(1), std::invalid_argument);

  // d = 4 order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  CHECK(pair_index(4, 0, 1) == 0);
  CHECK(pair_index(4, 0, 3) == 2);
  CHECK(pair_index(4, 1, 2) == 3);
  CHECK(pair_index(4, 2, 3) == 5);
  CHECK_THROWS_AS(pair_index(4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(pair_index(4, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(pair_index(4, 0, 4), std::invalid_argument);

  for (int dim = 2; dim <= 8; ++dim) {
    auto pairs = index_pairs(dim);
    REQUIRE(static_cast<int>(pairs.size()) == pair_count(dim));
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
      CHECK(pair_index(dim, pairs[p].first, pairs[p].second) == p);
  }
}
