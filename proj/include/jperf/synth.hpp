#pragma once

// Canonical fixtures and seeded random two-field instances.
//
// Randomness comes from std::mt19937_64 (whose output sequence is fixed by
// the C++ standard) and is turned into numbers with explicit formulas below,
// so a seed produces the same instance on every platform:
//   uniform double  u = (x >> 11) * 2^-53
//   integer [lo,hi] lo + x mod (hi - lo + 1)
//   Poisson(mean)   inversion: smallest k with u < F(k)
//   shuffle         Fisher-Yates from the back, swap i with integer [0,i]

#include <cstdint>
#include <random>
#include <vector>

#include "jperf/core.hpp"
#include "jperf/properties.hpp"

namespace jperf {

/// Portable random stream used by the generators.
class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);
  std::uint64_t poisson(double mean);
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[integer(0, i - 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct Fixture {
  Instance instance;
  FieldPartition partition;
};

/// The 8-journal worked example: two fields {1-4}, {5-8}, each with two
/// frequently and two infrequently cited journals; 100 articles per period.
Instance table1_instance();
FieldPartition table1_partition();

/// Two journals, 100 articles each period, counts [[999, 1], [3, 997]],
/// fields {1}, {2}.
Fixture counterexample_instance();

struct BlockModelSpec {
  std::size_t journals_per_field = 4;
  double within_mean = 20.0;   // expected count for a same-field pair
  double cross_mean = 2.0;     // expected count for a cross-field pair
  std::uint64_t articles_min = 100;
  std::uint64_t articles_max = 100;
  double eta = 1.0;            // a_i2 = eta * a_i1
  bool balanced = true;        // field 2 reuses field 1's article counts, shuffled
  /// Multiply each pair mean by a_i1 a_j1 / abar^2 (abar = range midpoint),
  /// so larger journals cite and are cited more.
  bool size_scaled = false;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 200;

  void check() const;
};

/// Poisson block model over two equally sized fields, redrawn until the
/// matrix is irreducible. With cross_mean = 0 a single citation is forced
/// each way between the first journal of each field.
Fixture block_model(const BlockModelSpec& spec);

}  // namespace jperf
