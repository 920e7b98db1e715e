#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace torus2 {

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size);

  std::size_t find(std::size_t x);
  // Returns true if two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b);
  std::size_t class_count() const noexcept { return classes_; }
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_size_;
  std::size_t classes_;
};

// A finite group acting on {0, ..., set_size-1}. image(g, x) is the index of
// g.x; group elements are indexed 0..group_size-1 and are assumed distinct as
// group elements (they may act identically).
struct IndexedAction {
  std::size_t set_size = 0;
  std::size_t group_size = 0;
  std::function<std::size_t(std::size_t g, std::size_t x)> image;
};

// Orbit count by merging x with g.x for every indexed g. The indexed
// elements may be a generating set rather than the whole group.
std::size_t partition_orbit_count(const IndexedAction& action);

// Per-element orbit labels from the same union-find pass, labels dense in
// first-occurrence order.
std::vector<std::size_t> orbit_labels(const IndexedAction& action);

// (1/|G|) sum_g |X^g|. Throws ConsistencyError if the sum is not a multiple
// of |G|.
std::size_t burnside_orbit_count(const IndexedAction& action);

// Number of group elements fixing each x.
std::vector<std::size_t> stabilizer_orders(const IndexedAction& action);

// True iff every stabilizer has order exactly 1.
bool acts_freely(const IndexedAction& action);

struct OrbitSummary {
  std::size_t orbits = 0;
  bool free = false;
};

// Partition count certified by Burnside over the full group. Throws
// ConsistencyError on disagreement.
OrbitSummary certified_orbit_count(const IndexedAction& full_group);

}  // namespace torus2
