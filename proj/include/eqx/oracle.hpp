#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eqx/instance.hpp"
#include "eqx/types.hpp"
#include "eqx/valuation.hpp"

namespace eqx {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// n^m, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> allocation_count(std::size_t agents, std::size_t items);

/// Visits every complete allocation of m items to n agents in lexicographic
/// order of the assignment vector (item 0 most significant). The callback
/// returns false to stop. Throws BudgetExceeded when n^m > budget.
/// Returns the number of allocations visited.
std::uint64_t for_each_allocation(std::size_t agents, std::size_t items, std::uint64_t budget,
                                  const std::function<bool(const Allocation&)>& visit);

enum class SearchMode { any, all };

/// Complete allocations that pass check_eqx, in enumeration order.
std::vector<Allocation> brute_force_eqx(const Instance& instance, SearchMode mode,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

inline constexpr std::size_t kMaxWwlGround = 12;
inline constexpr std::size_t kMaxWwlAllTiesGround = 8;

enum class TieBreak { lowest_index, all };

/// First failure found by the weakly-well-layered tester.
struct WwlCounterexample {
    ItemSet subset;                  // M'
    std::vector<Item> greedy_trace;  // x_1, ..., x_k of the failing greedy run
    ItemSet greedy_set;              // S_k
    ItemSet better_set;              // |better_set| = k and strictly better than S_k
    Value greedy_value = 0;
    Value better_value = 0;
};

struct WwlResult {
    bool holds = true;
    std::optional<WwlCounterexample> counterexample;
};

/// Checks, for every M' within `ground`, that greedy prefixes are optimal
/// among subsets of M' of the same size. Goods direction maximises;
/// chores direction minimises (negatively weakly well-layered).
/// lowest_index follows a single greedy run with lowest-index ties;
/// all follows every tie (ground of at most kMaxWwlAllTiesGround items).
WwlResult is_weakly_well_layered(const Valuation& valuation, const std::vector<Item>& ground,
                                 Direction direction = Direction::goods, TieBreak ties = TieBreak::lowest_index);

}  // namespace eqx
