#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "groupent/entropy.hpp"
#include "groupent/group_law.hpp"
#include "test_util.hpp"

using namespace groupent;

namespace {

GroupLaw algebraic_law(double a, double lambda = 1.0, double alpha = 2.0) {
  return derive_generator(StateSpaceModel::algebraic(a), lambda, alpha);
}
GroupLaw exponential_law(double k, double lambda = 1.0, double alpha = 2.0) {
  return derive_generator(StateSpaceModel::exponential(k), lambda, alpha);
}
GroupLaw super_law(double g, double lambda = 1.0, double alpha = 2.0) {
  return derive_generator(StateSpaceModel::super_exponential(g), lambda,
                          alpha);
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(derive_generator(StateSpaceModel::exponential(2.0), 0.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(derive_generator(StateSpaceModel::exponential(2.0), 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(StateSpaceModel::exponential(1.0), std::invalid_argument);
  CHECK_THROWS_AS(StateSpaceModel::algebraic(0.0), std::invalid_argument);
  CHECK_THROWS_AS(StateSpaceModel::super_exponential(-1.0),
                  std::invalid_argument);
}

TEST_CASE("exponential class with k = e is the identity generator") {
  const GroupLaw law = exponential_law(std::exp(1.0));
  for (double t : {-3.0, 0.0, 0.7, 42.0}) {
    CHECK(law.g(t) == doctest::Approx(t).epsilon(1e-15));
  }
  CHECK(law.compose(1.25, 2.5) == doctest::Approx(3.75).epsilon(1e-14));
}

TEST_CASE("generator fixes zero and increases") {
  for (const GroupLaw& law :
       {algebraic_law(2.0), algebraic_law(0.7, 2.0, 0.5),
        exponential_law(2.0), super_law(1.0), super_law(2.5, 0.5, 3.0)}) {
    CHECK(law.g(0.0) == 0.0);
    double prev = law.g(std::max(law.domain_lo(), -0.2));
    for (double t = std::max(law.domain_lo(), -0.2) + 0.1; t < 8.0; t += 0.1) {
      const double cur = law.g(t);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("round trip g_inv(g(t)) = t") {
  for (const GroupLaw& law :
       {algebraic_law(2.0), algebraic_law(1.3, 0.4, 0.5),
        exponential_law(3.0, 2.0), super_law(1.0), super_law(0.3, 1.5, 2.0)}) {
    for (double t = std::max(law.domain_lo(), -0.25); t < 12.0; t += 0.23) {
      CHECK(law.g_inv(law.g(t)) ==
            doctest::Approx(t).epsilon(1e-10).scale(1.0 + std::abs(t)));
    }
  }
}

TEST_CASE("algebraic law composes as x + y + xy/lambda") {
  // phi(1,1) = 3 at lambda = 1 for any a, alpha.
  for (double a : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.5, 2.0, 3.0}) {
      const GroupLaw law = algebraic_law(a, 1.0, alpha);
      CHECK(law.compose(1.0, 1.0) == doctest::Approx(3.0).epsilon(1e-12));
    }
  }
  SplitMix64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const double lambda = testutil::uniform_in(rng, 0.2, 3.0);
    const GroupLaw law = algebraic_law(testutil::uniform_in(rng, 0.3, 4.0),
                                       lambda, 2.0);
    const double x = testutil::uniform_in(rng, 0.0, 5.0);
    const double y = testutil::uniform_in(rng, 0.0, 5.0);
    CHECK(law.compose(x, y) ==
          doctest::Approx(x + y + x * y / lambda).epsilon(1e-11));
  }
}

TEST_CASE("group axioms hold numerically on every law") {
  SplitMix64 rng(37);
  const GroupLaw laws[] = {algebraic_law(2.0), algebraic_law(0.8, 1.7, 0.5),
                           exponential_law(2.0, 1.3), super_law(1.0),
                           super_law(2.0, 0.6, 3.0),
                           unified_generator(1.0, 0.0),
                           unified_generator(0.4, -0.8)};
  for (const GroupLaw& law : laws) {
    for (int trial = 0; trial < 200; ++trial) {
      const double x = testutil::uniform_in(rng, 0.0, 4.0);
      const double y = testutil::uniform_in(rng, 0.0, 4.0);
      const double z = testutil::uniform_in(rng, 0.0, 4.0);
      CHECK(std::abs(law.compose(x, y) - law.compose(y, x)) <= 1e-10);
      CHECK(std::abs(law.compose(law.compose(x, y), z) -
                     law.compose(x, law.compose(y, z))) <= 1e-9);
      CHECK(std::abs(law.compose(x, 0.0) - x) <= 1e-12);
    }
  }
}

TEST_CASE("formal inverse annihilates") {
  SplitMix64 rng(41);
  const GroupLaw laws[] = {algebraic_law(1.5, 0.9), exponential_law(2.0),
                           super_law(1.0)};
  for (const GroupLaw& law : laws) {
    // Class III supports the inverse only while -g_inv(x) stays in domain.
    const double x_hi =
        (law.kind() == GroupLaw::Kind::SuperExponential) ? 0.3 : 3.0;
    for (int trial = 0; trial < 200; ++trial) {
      const double x = testutil::uniform_in(rng, 0.0, x_hi);
      const double psi = law.formal_inverse(x);
      CHECK(std::abs(law.compose(x, psi)) <= 1e-10);
    }
  }
}

TEST_CASE("compose rejects values outside the image") {
  const GroupLaw law = algebraic_law(2.0, 1.0);  // image (-1, inf)
  CHECK_THROWS_AS(law.compose(-1.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(law.g_inv(-1.0), std::domain_error);
  const GroupLaw sup = super_law(1.0);
  CHECK_THROWS_AS(sup.g(-1.0), std::domain_error);  // below -gamma/e
}

TEST_CASE("unified generator basics") {
  CHECK_THROWS_AS(unified_generator(0.7, 0.7), std::invalid_argument);

  // Near-degenerate pair stays within 1e-8 of the identity on [-5, 5].
  const GroupLaw tiny = unified_generator(1e-9, -1e-9);
  for (double t = -5.0; t <= 5.0; t += 0.25) {
    if (t == 0.0) continue;
    CHECK(std::abs(tiny.g(t) - t) <= 1e-8 * std::abs(t));
  }

  // (1, 0) is e^t - 1.
  const GroupLaw exp1 = unified_generator(1.0, 0.0);
  for (double t : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    CHECK(exp1.g(t) == doctest::Approx(std::expm1(t)).epsilon(1e-14));
  }
  CHECK(exp1.g_inv(std::expm1(2.0)) == doctest::Approx(2.0).epsilon(1e-11));

  // Same-sign parameters restrict the domain to the increasing branch.
  const GroupLaw same = unified_generator(2.0, 1.0);
  CHECK(same.domain_lo() == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(same.g(-5.0), std::domain_error);
  for (double t = same.domain_lo() + 1e-6; t < 3.0; t += 0.1) {
    CHECK(std::abs(same.g_inv(same.g(t)) - t) <= 1e-9);
  }
}

TEST_CASE("unified (1,0) in the group-entropy ansatz equals Tsallis q=alpha") {
  const GroupLaw law = unified_generator(1.0, 0.0);
  SplitMix64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testutil::random_distribution(rng, 2 + trial % 15);
    const double alpha = testutil::uniform_in(rng, 0.2, 3.0);
    if (std::abs(alpha - 1.0) < 1e-3) continue;
    const double lhs = generator_entropy(law, p, alpha);
    const double rhs = tsallis(p, alpha, 1.0);
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("composability bridge: S(A x B) = phi(S(A), S(B))") {
  SplitMix64 rng(47);
  struct Pair {
    EntropySpec spec;
    GroupLaw law;
  };
  const Pair pairs[] = {
      {EntropySpec::non_trace_i(2.0, 2.0, 1.0),
       derive_law_for(EntropySpec::non_trace_i(2.0, 2.0, 1.0))},
      {EntropySpec::non_trace_i(0.7, 0.5, 1.4),
       derive_law_for(EntropySpec::non_trace_i(0.7, 0.5, 1.4))},
      {EntropySpec::non_trace_ii(2.0, 3.0, 0.8),
       derive_law_for(EntropySpec::non_trace_ii(2.0, 3.0, 0.8))},
      {EntropySpec::non_trace_iii(1.0, 2.0, 1.0),
       derive_law_for(EntropySpec::non_trace_iii(1.0, 2.0, 1.0))},
      {EntropySpec::z_entropy(1.5, 0.5),
       derive_law_for(EntropySpec::z_entropy(1.5, 0.5))},
  };
  for (const Pair& pair : pairs) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = testutil::random_distribution(rng, 2 + trial % 15);
      const auto b = testutil::random_distribution(rng, 2 + (trial / 3) % 15);
      const double joint = evaluate(pair.spec, product(a, b));
      const double composed =
          pair.law.compose(evaluate(pair.spec, a), evaluate(pair.spec, b));
      CHECK(std::abs(joint - composed) <= 1e-10);
    }
  }
}
