#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "eqx/instance.hpp"
#include "eqx/types.hpp"

namespace eqx {

enum class Termination { empty_pool, eqx_reached, budget_exceeded };

std::string_view to_string(Termination t);

struct SolveOptions {
    /// Cap on item moves (adds, removals, transfers) before giving up.
    std::uint64_t step_budget = 10'000'000;
    /// Re-verify the proof invariants as the solver runs; throws InvariantError.
    bool check_invariants = false;
};

struct SolveStats {
    std::uint64_t outer_iterations = 0;
    std::uint64_t add_steps = 0;
    std::uint64_t fix_steps = 0;
    std::uint64_t oracle_calls = 0;
    /// max_i v_i(M) and min_i v_i(M)
    Value v_max = 0;
    Value v_min = 0;
    /// Local search: goods (or chores) moved to resolve violations.
    std::uint64_t transfers = 0;
    /// Local search: moves of the single special item.
    std::uint64_t special_transfers = 0;
    /// Local search: cutoff value at every check of the special item.
    std::vector<Value> cutoff_trace;
    /// Number of interim allocations re-verified under check_invariants.
    std::uint64_t interim_checks = 0;
    Termination terminated_by = Termination::empty_pool;

    friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

struct SolveResult {
    Allocation allocation;
    SolveStats stats;
};

}  // namespace eqx
