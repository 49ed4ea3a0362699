#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "groupent/distribution.hpp"
#include "groupent/rng.hpp"
#include "test_util.hpp"

using namespace groupent;

TEST_CASE("uniform basics") {
  CHECK(uniform(1).probs()[0] == 1.0);
  const Distribution u4 = uniform(4);
  REQUIRE(u4.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(u4[i] == 0.25);
  CHECK_THROWS_AS(uniform(0), std::invalid_argument);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(Distribution({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(Distribution({-0.1, 1.1}), std::invalid_argument);
  CHECK_THROWS_AS(Distribution({}), std::invalid_argument);
  const Distribution renorm({0.5, 0.6, 0.9}, Renormalize::Yes);
  CHECK(renorm[0] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("product layout and neutral element") {
  const Distribution a({0.5, 0.5});
  const Distribution b({0.9, 0.1});
  const Distribution ab = product(a, b);
  REQUIRE(ab.size() == 4);
  CHECK(ab[0] == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(ab[1] == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(ab[2] == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(ab[3] == doctest::Approx(0.05).epsilon(1e-15));

  const Distribution unit({1.0});
  const Distribution an = product(a, unit);
  REQUIRE(an.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(an[i] == a[i]);

  const Distribution u6 = product(uniform(2), uniform(3));
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(u6[i] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  }
}

TEST_CASE("product commutative as a multiset, associative elementwise") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testutil::random_distribution(rng, 2 + trial % 5);
    const auto b = testutil::random_distribution(rng, 2 + (trial / 5) % 4);
    auto ab = product(a, b), ba = product(b, a);
    std::vector<double> x(ab.probs().begin(), ab.probs().end());
    std::vector<double> y(ba.probs().begin(), ba.probs().end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == y[i]);

    const auto c = testutil::random_distribution(rng, 3);
    const auto left = product(product(a, b), c);
    const auto right = product(a, product(b, c));
    REQUIRE(left.size() == right.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      // (pq)r vs p(qr): equal up to one rounding of each triple product
      CHECK(left[i] == doctest::Approx(right[i]).epsilon(1e-15));
    }
  }
  // Dyadic probabilities multiply exactly, so both orders agree bitwise.
  const Distribution a({0.5, 0.5}), b({0.25, 0.75}), c({0.125, 0.875});
  const auto left = product(product(a, b), c);
  const auto right = product(a, product(b, c));
  for (std::size_t i = 0; i < left.size(); ++i) CHECK(left[i] == right[i]);
}

TEST_CASE("alpha_log_sum closed forms") {
  for (std::size_t w : {1, 2, 5, 64, 1000}) {
    for (double alpha : {0.3, 0.5, 2.0, 3.7}) {
      const double got = alpha_log_sum(uniform(w), alpha).value;
      CHECK(got == doctest::Approx((1.0 - alpha) * std::log(double(w)))
                       .epsilon(1e-13));
    }
  }
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testutil::random_distribution(rng, 8);
    CHECK(std::abs(alpha_log_sum(p, 1.0).value) <= 1e-12);
  }
  CHECK(alpha_log_sum(Distribution({0.5, 0.5}), 2.0).value ==
        doctest::Approx(std::log(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(alpha_log_sum(uniform(3), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_log_sum(uniform(3), -1.0), std::invalid_argument);
}

TEST_CASE("alpha_log_sum sign bound and underflow safety") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testutil::random_distribution(rng, 2 + trial % 12);
    const double hi = alpha_log_sum(p, 3.0).value;
    const double lo = alpha_log_sum(p, 0.5).value;
    CHECK(hi <= 1e-12);
    CHECK(lo >= -1e-12);
  }
  // Entries far below exp underflow still contribute through log space.
  Distribution peaked({1.0 - 1e-12, 1e-12}, Renormalize::Yes);
  const double v = alpha_log_sum(peaked, 40.0).value;
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(40.0 * std::log1p(-1e-12)).epsilon(1e-6));
}

TEST_CASE("alpha_log_sum additive over products") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testutil::random_distribution(rng, 2 + trial % 9);
    const auto b = testutil::random_distribution(rng, 2 + (trial / 9) % 7);
    const double alpha = testutil::uniform_in(rng, 0.1, 4.0);
    const double joint = alpha_log_sum(product(a, b), alpha).value;
    const double split =
        alpha_log_sum(a, alpha).value + alpha_log_sum(b, alpha).value;
    CHECK(std::abs(joint - split) <= 1e-12);
  }
}

TEST_CASE("powerlaw") {
  const Distribution flat = powerlaw(0.0, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(flat[i] == doctest::Approx(0.2).epsilon(1e-15));
  }
  CHECK(powerlaw(3.2, 1).probs()[0] == 1.0);
  // Hand normalization of 1 + 1/2 + 1/3.
  const Distribution zipf = powerlaw(1.0, 3);
  CHECK(zipf[0] == doctest::Approx(6.0 / 11.0).epsilon(1e-15));
  CHECK(zipf[1] == doctest::Approx(3.0 / 11.0).epsilon(1e-15));
  CHECK(zipf[2] == doctest::Approx(2.0 / 11.0).epsilon(1e-15));
  CHECK_THROWS_AS(powerlaw(1.0, 0), std::invalid_argument);

  for (double a : {0.5, 1.0, 2.5, 10.0}) {
    const Distribution big = powerlaw(a, 1000000);  // invariants hold at scale
    CHECK(big.size() == 1000000);
    CHECK(big[0] > big[999999]);
  }
}

TEST_CASE("append_zero_event") {
  const Distribution one({1.0});
  const Distribution padded = append_zero_event(one);
  REQUIRE(padded.size() == 2);
  CHECK(padded[0] == 1.0);
  CHECK(padded[1] == 0.0);

  const Distribution u2z = append_zero_event(uniform(2));
  CHECK(u2z.size() == 3);
  CHECK(u2z[2] == 0.0);

  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testutil::random_distribution(rng, 2 + trial % 10);
    const double alpha = testutil::uniform_in(rng, 0.2, 3.0);
    CHECK(alpha_log_sum(append_zero_event(p), alpha).value ==
          alpha_log_sum(p, alpha).value);
  }
}
