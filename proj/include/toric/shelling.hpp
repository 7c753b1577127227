#pragma once

// Shellings of cones: the recursive shelling condition, line shellings, and a
// budgeted search for shellings with extra constraints.

#include "toric/polyhedral.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace toric {

/// A facet ordering, as indices into Cone::facets.
using Shelling = std::vector<Index>;

/// Whether `order` satisfies the recursive shelling condition. Throws
/// NotAPermutation if it is not an ordering of the facets.
bool is_shelling(const Cone& c, const Shelling& order);

/// Bruggesser–Mani shelling along a random line through an interior point;
/// degenerate lines are retried. The result is verified by is_shelling.
Shelling line_shelling(const Cone& c, std::uint64_t seed = 0);

/// Extra per-step condition: rays already covered by earlier facets, the
/// candidate facet, its position and the number of facets.
using ShellingStep = std::function<bool(const RaySet& covered, Index facet, std::size_t position, std::size_t total)>;

struct ShellingQuery {
  std::vector<Index> prefix;      // facets that must come first, in any order
  ShellingStep step;              // optional
  std::uint64_t budget = 2'000'000;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct ShellingSearch {
  SearchStatus status = SearchStatus::Exhausted;
  Shelling order;
  std::uint64_t nodes = 0;
};

/// Depth-first search over facet orderings with memoization on the set of
/// facets already placed (validity of a step only depends on that set).
ShellingSearch search_shelling(const Cone& c, const ShellingQuery& query);

}  // namespace toric
