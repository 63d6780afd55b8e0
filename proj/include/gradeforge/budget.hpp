#pragma once

#include <cstdint>

#include "gradeforge/error.hpp"

namespace gradeforge {

/// Resource caps shared by every enumerator. Exceeding a cap raises
/// ErrorCode::size_overflow; results are never silently truncated.
struct Budget {
  std::size_t max_order = 64;
  std::uint64_t max_nodes = 10'000'000;
  unsigned max_census_order = 3;

  /// Reads GRADEFORGE_BUDGET (a node count) if it is set and well formed.
  static Budget from_environment();
};

// Counts search nodes against Budget::max_nodes.
class NodeCounter {
 public:
  explicit NodeCounter(Budget const& budget) : _limit(budget.max_nodes) {}

  void tick() {
    if (++_nodes > _limit) {
      throw Error(ErrorCode::size_overflow,
                  "search exceeded " + std::to_string(_limit) + " nodes");
    }
  }

  std::uint64_t nodes() const noexcept { return _nodes; }

 private:
  std::uint64_t _limit;
  std::uint64_t _nodes = 0;
};

}  // namespace gradeforge
