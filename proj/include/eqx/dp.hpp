#pragma once

#include <cstdint>
#include <optional>

#include "eqx/instance.hpp"

namespace eqx {

inline constexpr std::size_t kMaxDpAgents = 4;
inline constexpr std::uint64_t kDefaultDpStateBudget = 20'000'000;

struct DpResult {
    bool exists = false;
    std::optional<Allocation> witness;
    /// Largest number of distinct reachable states in any layer.
    std::uint64_t peak_states = 0;
    /// H = max over agents and items of |v_i(x)|.
    Value max_abs_item_value = 0;
};

/// Decides whether an EQx allocation exists for additive (possibly
/// subjective) valuations with at most kMaxDpAgents agents.
///
/// Sweeps items in order, keeping the set of reachable per-agent triples
/// (bundle value, smallest good, largest chore), with an explicit absent
/// marker when an agent holds no good or no chore. Each item's role for an
/// owner is decided exactly as check_eqx does, so zero-valued goods and
/// zero-valued chores do tighten the triple. A final state accepts when for
/// every ordered pair (i, j): w_j - h_j <= w_i if j holds a good, and
/// w_i - d_i >= w_j if i holds a chore.
///
/// Throws ContractError on non-additive valuations or too many agents, and
/// BudgetExceeded when a layer outgrows `state_budget`.
DpResult dp_exists(const Instance& instance, bool want_witness = false,
                   std::uint64_t state_budget = kDefaultDpStateBudget);

}  // namespace eqx
