#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "eqx/instance.hpp"
#include "eqx/solve.hpp"
#include "eqx/types.hpp"

namespace eqx {

/// Which sign the leximin++ keys use.
///  chores_identical: agents ordered by ascending v_i(X_i)
///  goods_identical:  agents ordered by ascending -v_i(X_i)
/// Equal keys fall back to ascending bundle size, then agent index.
enum class OrderDirection { chores_identical, goods_identical };

std::string_view to_string(OrderDirection d);
OrderDirection parse_order_direction(std::string_view text);

/// Ordering key of one agent under an allocation.
struct AgentKey {
    Value key = 0;
    std::size_t size = 0;
    Agent agent = 0;

    friend auto operator<=>(const AgentKey&, const AgentKey&) = default;
};

/// Agents sorted by key; keys[0] is sigma(1).
std::vector<AgentKey> sigma_keys(const Instance& instance, const Allocation& allocation, OrderDirection direction);

/// Same, from already known own-bundle values.
std::vector<AgentKey> sigma_keys(std::span<const Value> values, const Allocation& allocation,
                                 OrderDirection direction);

/// sigma as a permutation of agent indices.
std::vector<Agent> sigma(const Instance& instance, const Allocation& allocation, OrderDirection direction);

/// Leximin++ comparison. `less` means a precedes b (b is the better
/// allocation); `equal` means the key sequences coincide.
std::strong_ordering precplus(const Instance& instance, const Allocation& a, const Allocation& b,
                              OrderDirection direction);

/// The precplus-maximum over every complete allocation, by enumeration.
/// Throws BudgetExceeded when n^m > budget.
Allocation leximin_pp(const Instance& instance, OrderDirection direction, std::uint64_t budget = 10'000'000);

/// Two agents, additive objective valuations. Each round the richer agent r
/// (agent 0 on ties) and the other agent p compare p's best unassigned
/// good g* with r's worst unassigned chore c*; g* goes to p when
/// |v_p(g*)| > |v_r(c*)|, otherwise c* goes to r. With one class exhausted
/// the other is always taken.
SolveResult two_way_greedy(const Instance& instance, const SolveOptions& options = {});

enum class SpecialItem { chore, good };

std::string_view to_string(SpecialItem s);

/// Local search for additive objective instances with exactly one chore
/// among goods (or one good among chores). Starts with every item on agent
/// 0; repeatedly moves violating goods to the poorest agent (chores to the
/// richest), then moves the special item when its holder's cutoff value
/// shows a violation. The cutoff value at every check is recorded in
/// stats.cutoff_trace.
SolveResult single_special_local_search(const Instance& instance, SpecialItem special,
                                        const SolveOptions& options = {});

}  // namespace eqx
