#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "groupent/extensivity.hpp"
#include "groupent/state_space.hpp"

using namespace groupent;

namespace {

std::vector<double> range_n(int lo, int hi) {
  std::vector<double> out;
  for (int n = lo; n <= hi; ++n) out.push_back(double(n));
  return out;
}

}  // namespace

TEST_CASE("log_states closed forms") {
  CHECK(log_states(StateSpaceModel::exponential(2.0), 10.0) ==
        doctest::Approx(10.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(log_states(StateSpaceModel::algebraic(3.0), 1.0) == 0.0);
  CHECK(log_states(StateSpaceModel::super_exponential(1.0), std::exp(1.0)) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_states(StateSpaceModel::algebraic(1.0), 0.5),
                  std::invalid_argument);
}

TEST_CASE("inverse_states closed forms") {
  CHECK(inverse_states(StateSpaceModel::algebraic(2.0), 2.0 * std::log(5.0)) ==
        doctest::Approx(5.0).epsilon(1e-13));
  CHECK(inverse_states(StateSpaceModel::exponential(std::exp(1.0)), 7.0) ==
        doctest::Approx(7.0).epsilon(1e-15));
  CHECK(inverse_states(StateSpaceModel::super_exponential(1.0),
                       10.0 * std::log(10.0)) ==
        doctest::Approx(10.0).epsilon(1e-12));
  CHECK_THROWS_AS(inverse_states(StateSpaceModel::algebraic(1.0), -0.1),
                  std::domain_error);
}

TEST_CASE("inverse round trip across scales") {
  const StateSpaceModel models[] = {StateSpaceModel::algebraic(2.5),
                                    StateSpaceModel::exponential(3.0),
                                    StateSpaceModel::super_exponential(0.7)};
  for (const StateSpaceModel& m : models) {
    for (double n = 1.0; n <= 1.0e6; n *= 3.7) {
      const double back = inverse_states(m, log_states(m, n));
      CHECK(back == doctest::Approx(n).epsilon(1e-10));
    }
  }
}

TEST_CASE("matched pairs are extensive") {
  struct Match {
    EntropySpec spec;
    StateSpaceModel model;
    double limit;
  };
  const Match matches[] = {
      {EntropySpec::non_trace_i(2.0, 2.0, 1.0), StateSpaceModel::algebraic(2.0),
       1.0},
      {EntropySpec::non_trace_ii(2.0, 2.0, 1.0),
       StateSpaceModel::exponential(2.0), 1.0},
      {EntropySpec::non_trace_iii(1.5, 2.0, 1.0),
       StateSpaceModel::super_exponential(1.5), 1.0},
      {EntropySpec::trace_i(3.0, 1.0), StateSpaceModel::algebraic(3.0), 1.0},
      {EntropySpec::trace_ii(4.0, 1.0), StateSpaceModel::exponential(4.0),
       1.0},
      {EntropySpec::trace_iii(0.5, 1.0),
       StateSpaceModel::super_exponential(0.5), 1.0},
  };
  for (const Match& m : matches) {
    const auto rows = extensivity_scan(m.spec, m.model, range_n(2, 100));
    double prev_gap = std::numeric_limits<double>::infinity();
    for (const ScanRow& r : rows) {
      const double gap = std::abs(r.per_component - m.limit);
      CHECK(gap <= prev_gap + 1e-12);
      prev_gap = gap;
    }
    CHECK(std::abs(rows.back().per_component - m.limit) <= 0.02);
    CHECK(summarize_scan(rows).converged);
  }
}

TEST_CASE("class II matched pair is exactly extensive at every N") {
  const auto rows =
      extensivity_scan(EntropySpec::non_trace_ii(3.0, 2.0, 1.0),
                       StateSpaceModel::exponential(3.0), range_n(1, 100));
  for (const ScanRow& r : rows) {
    CHECK(r.per_component == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("mismatched pairs drift monotonically") {
  // Shannon form on algebraic growth: S/N -> 0 from above.
  auto shrink = extensivity_scan(EntropySpec::bgs(),
                                 StateSpaceModel::algebraic(2.0),
                                 range_n(3, 200));
  for (std::size_t i = 1; i < shrink.size(); ++i) {
    CHECK(shrink[i].per_component < shrink[i - 1].per_component);
  }

  // q < 1 on exponential growth: S/N diverges.
  auto grow = extensivity_scan(EntropySpec::tsallis(0.5),
                               StateSpaceModel::exponential(2.0),
                               range_n(2, 60));
  for (std::size_t i = 1; i < grow.size(); ++i) {
    CHECK(grow[i].per_component > grow[i - 1].per_component);
  }

  // Shannon form on super-exponential growth: S/N = gamma ln N diverges.
  auto grow2 = extensivity_scan(EntropySpec::bgs(),
                                StateSpaceModel::super_exponential(1.0),
                                range_n(2, 60));
  for (std::size_t i = 1; i < grow2.size(); ++i) {
    CHECK(grow2[i].per_component > grow2[i - 1].per_component);
  }
  CHECK_FALSE(summarize_scan(grow2).converged);
}

TEST_CASE("scan input validation") {
  CHECK_THROWS_AS(
      extensivity_scan(EntropySpec::bgs(), StateSpaceModel::algebraic(1.0), {}),
      std::invalid_argument);
  CHECK_THROWS_AS(extensivity_scan(EntropySpec::bgs(),
                                   StateSpaceModel::algebraic(1.0),
                                   {3.0, 2.0}),
                  std::invalid_argument);
}
