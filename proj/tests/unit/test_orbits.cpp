#include <doctest.h>

#include "torus2/errors.hpp"
#include "torus2/orbits.hpp"

using namespace torus2;

namespace {

// Z_k rotating {0..size-1} in blocks of k.
IndexedAction block_rotation(std::size_t blocks, std::size_t k) {
  return {blocks * k, k, [k](std::size_t g, std::size_t x) { return (x / k) * k + (x % k + g) % k; }};
}

}  // namespace

TEST_CASE("disjoint sets") {
  DisjointSets d(6);
  CHECK(d.class_count() == 6);
  CHECK(d.unite(0, 1));
  CHECK(d.unite(1, 2));
  CHECK_FALSE(d.unite(0, 2));
  CHECK(d.class_count() == 4);
  CHECK(d.find(2) == d.find(0));
  CHECK(d.find(3) != d.find(0));
}

TEST_CASE("trivial group leaves the cardinality") {
  const IndexedAction trivial{17, 1, [](std::size_t, std::size_t x) { return x; }};
  CHECK(partition_orbit_count(trivial) == 17);
  CHECK(burnside_orbit_count(trivial) == 17);
  CHECK(certified_orbit_count(trivial).orbits == 17);
  CHECK(certified_orbit_count(trivial).free);
}

TEST_CASE("free block rotation") {
  const auto a = block_rotation(5, 4);
  CHECK(partition_orbit_count(a) == 5);
  CHECK(burnside_orbit_count(a) == 5);
  CHECK(acts_freely(a));
  const auto labels = orbit_labels(a);
  CHECK(labels[0] == 0);
  CHECK(labels[3] == 0);
  CHECK(labels[4] == 1);
  CHECK(labels[19] == 4);
}

TEST_CASE("non-free action and stabilizers") {
  // Z2 acting on {0,1,2} by swapping 0 and 1.
  const IndexedAction swap{3, 2, [](std::size_t g, std::size_t x) { return g == 1 && x < 2 ? 1 - x : x; }};
  CHECK(certified_orbit_count(swap).orbits == 2);
  CHECK_FALSE(certified_orbit_count(swap).free);
  CHECK(stabilizer_orders(swap) == std::vector<std::size_t>{1, 1, 2});
}

TEST_CASE("inconsistent actions are reported") {
  // Not a group action: element 1 collapses everything onto 0.
  const IndexedAction collapse{3, 2, [](std::size_t g, std::size_t x) { return g == 0 ? x : 0; }};
  CHECK_THROWS_AS(certified_orbit_count(collapse), ConsistencyError);
  const IndexedAction escape{3, 1, [](std::size_t, std::size_t x) { return x + 1; }};
  CHECK_THROWS_AS(partition_orbit_count(escape), ConsistencyError);
}

TEST_CASE("Burnside equals partition for cyclic shifts of binary words") {
  for (std::size_t len = 1; len <= 10; ++len) {
    const std::size_t size = std::size_t{1} << len;
    const IndexedAction shift{size, len, [len, size](std::size_t g, std::size_t x) {
                                return ((x << g) | (x >> (len - g) % len)) & (size - 1);
                              }};
    CHECK(partition_orbit_count(shift) == burnside_orbit_count(shift));
  }
}
