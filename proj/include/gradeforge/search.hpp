#pragma once

// Search kernels shared by the magma and category enumerators.

#include <cstdint>
#include <functional>
#include <vector>

#include "gradeforge/budget.hpp"
#include "gradeforge/element_set.hpp"
#include "gradeforge/magma.hpp"

namespace gradeforge::search {

inline constexpr std::int32_t kNoConstraint = -1;
inline constexpr std::int32_t kPoison = -2;

/// Find all maps F from a source carrier to a target carrier such that
/// F(a) is in domains[a] and, for every source pair with
/// source[a][b] = r >= 0, target[F(a)][F(b)] = F(r).
/// A target entry < 0 means the product is undefined, which is a conflict.
struct HomProblem {
  std::size_t source_size = 0;
  std::vector<std::int32_t> source;  // source_size^2, kNoConstraint allowed
  std::size_t target_size = 0;
  std::vector<std::int32_t> target;  // target_size^2, negative = undefined
  std::vector<ElementSet> domains;   // one per source element
};

/// Assigns elements in index order, trying images in increasing order and
/// propagating forced products after every assignment. Solutions arrive in
/// lexicographic order.
void solve_homs(HomProblem const& problem, NodeCounter& counter,
                std::function<void(ElementMap const&)> const& emit);

/// Enumerate every subset S of {0..size-1} closed under a partial product:
/// for a, b in S with product[a][b] = r >= 0, r must be in S; a product of
/// kPoison makes the pair {a, b} inadmissible; kNoConstraint imposes nothing.
/// `required` elements are in every result. Results are sorted by bit
/// pattern.
std::vector<ElementSet> closed_subsets(std::size_t size,
                                       std::vector<std::int32_t> const& product,
                                       ElementSet const& required,
                                       NodeCounter& counter);

/// Close `seed` under the same partial product. Returns nullopt if a poison
/// product is reached.
std::optional<ElementSet> close(std::size_t size,
                                std::vector<std::int32_t> const& product,
                                ElementSet const& seed);

}  // namespace gradeforge::search
