#pragma once

#include <cstdint>

#include "eqx/instance.hpp"
#include "eqx/solve.hpp"
#include "eqx/types.hpp"

namespace eqx {

/// Greedy Add-and-Fix for monotone instances.
///
/// Goods: each outer iteration picks the poorest agent p and the
/// second-poorest p'. p takes the unassigned good of largest marginal value
/// while v_p(A_p) <= v_p'(A_p'), then gives back any good whose removal
/// still leaves it above p'. Chores mirror this with the richest agent taking
/// the chore of smallest marginal value. Ties go to the lowest agent and
/// item index; the Fix scan runs in ascending item order and restarts after
/// every removal.
///
/// In the chores direction, items with zero marginal for every agent are
/// held back and handed to a poorest agent at the end.
///
/// Throws ContractError if an item does not fit the direction.
SolveResult add_and_fix(const Instance& instance, Direction direction, const SolveOptions& options = {});

/// Same loop with the Add and Fix conditions scaled by (1-eps) for goods or
/// (1+eps) for chores. eps = 0 is exactly add_and_fix.
SolveResult add_and_fix_approx(const Instance& instance, Epsilon eps, Direction direction,
                               const SolveOptions& options = {});

/// n * V + 1 with V = max_i |v_i(M)|.
std::uint64_t exact_outer_iteration_bound(const Instance& instance);

/// sum_i ceil(log_r |v_i(M)|) + n + 1 with r = 1/(1-eps) for goods and
/// r = 1+eps for chores; agents with |v_i(M)| <= 1 contribute no log term.
/// Falls back to the exact bound for eps = 0.
std::uint64_t approx_outer_iteration_bound(const Instance& instance, Epsilon eps, Direction direction);

}  // namespace eqx
