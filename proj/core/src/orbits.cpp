#include "torus2/orbits.hpp"

#include <numeric>
#include <string>

#include "torus2/errors.hpp"

namespace torus2 {

DisjointSets::DisjointSets(std::size_t size)
    : parent_(size), rank_size_(size, 1), classes_(size) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_size_[a] < rank_size_[b]) std::swap(a, b);
  parent_[b] = a;
  rank_size_[a] += rank_size_[b];
  --classes_;
  return true;
}

namespace {

void check_image(std::size_t y, std::size_t set_size) {
  if (y >= set_size) {
    throw ConsistencyError("group action maps an element outside the set");
  }
}

DisjointSets partition(const IndexedAction& action) {
  DisjointSets sets(action.set_size);
  for (std::size_t g = 0; g < action.group_size; ++g) {
    for (std::size_t x = 0; x < action.set_size; ++x) {
      const std::size_t y = action.image(g, x);
      check_image(y, action.set_size);
      sets.unite(x, y);
    }
  }
  return sets;
}

}  // namespace

std::size_t partition_orbit_count(const IndexedAction& action) {
  return partition(action).class_count();
}

std::vector<std::size_t> orbit_labels(const IndexedAction& action) {
  DisjointSets sets = partition(action);
  std::vector<std::size_t> root_label(action.set_size, action.set_size);
  std::vector<std::size_t> labels(action.set_size);
  std::size_t next = 0;
  for (std::size_t x = 0; x < action.set_size; ++x) {
    const std::size_t r = sets.find(x);
    if (root_label[r] == action.set_size) root_label[r] = next++;
    labels[x] = root_label[r];
  }
  return labels;
}

std::vector<std::size_t> stabilizer_orders(const IndexedAction& action) {
  std::vector<std::size_t> fixed_by(action.set_size, 0);
  for (std::size_t g = 0; g < action.group_size; ++g) {
    for (std::size_t x = 0; x < action.set_size; ++x) {
      const std::size_t y = action.image(g, x);
      check_image(y, action.set_size);
      if (y == x) ++fixed_by[x];
    }
  }
  return fixed_by;
}

std::size_t burnside_orbit_count(const IndexedAction& action) {
  if (action.group_size == 0) throw InvalidArgument("Burnside count over an empty group");
  std::size_t total = 0;
  for (auto s : stabilizer_orders(action)) total += s;
  if (total % action.group_size != 0) {
    throw ConsistencyError("fixed-point sum " + std::to_string(total) +
                           " is not divisible by the group order " +
                           std::to_string(action.group_size));
  }
  return total / action.group_size;
}

bool acts_freely(const IndexedAction& action) {
  for (auto s : stabilizer_orders(action)) {
    if (s != 1) return false;
  }
  return true;
}

OrbitSummary certified_orbit_count(const IndexedAction& full_group) {
  const std::vector<std::size_t> stabs = stabilizer_orders(full_group);
  std::size_t total = 0;
  bool free = true;
  for (auto s : stabs) {
    total += s;
    free = free && (s == 1);
  }
  if (full_group.group_size == 0 || total % full_group.group_size != 0) {
    throw ConsistencyError("fixed-point sum is not divisible by the group order");
  }
  const std::size_t burnside = total / full_group.group_size;
  const std::size_t parts = partition_orbit_count(full_group);
  if (burnside != parts) {
    throw ConsistencyError("Burnside count " + std::to_string(burnside) +
                           " disagrees with orbit partition " + std::to_string(parts));
  }
  return {parts, free};
}

}  // namespace torus2
