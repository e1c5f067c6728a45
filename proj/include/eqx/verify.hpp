#pragma once

#include <vector>

#include "eqx/instance.hpp"
#include "eqx/types.hpp"

namespace eqx {

/// One failing (owner, item) combination.
///
/// Goods entry: `owner` holds good `item`, `lhs` is the value left after
/// removing it and `rhs` the witness' value, with lhs > rhs.
/// Chores entry: `owner` holds chore `item`, with lhs < rhs.
struct Violation {
    Agent owner = 0;
    Item item = 0;
    Agent witness = 0;
    Value lhs = 0;
    Value rhs = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Complete list of violations of one fairness notion. `is_eqx` reports
/// whether the notion holds (both lists empty), whichever notion was checked.
struct ViolationReport {
    std::vector<Violation> goods_violations;
    std::vector<Violation> chores_violations;
    bool is_eqx = true;

    friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

/// Equitability up to any item. Runs over assigned items only, so it also
/// applies to partial allocations. Each violating (owner, item) appears once,
/// with the poorest (goods) or richest (chores) other agent as witness, ties
/// to the lowest index.
ViolationReport check_eqx(const Instance& instance, const Allocation& allocation);
ViolationReport check_eqx(const Instance& instance, const Allocation& allocation,
                          const ItemClassification& cls);

/// (1-eps)-EQx for goods, (1+eps)-EQx for chores. Items whose role does not
/// match the direction (only possible for items with all-zero marginals) are
/// held to the exact condition. eps = 0 gives exactly check_eqx.
ViolationReport check_eps_eqx(const Instance& instance, const Allocation& allocation, Epsilon eps,
                              Direction direction);
ViolationReport check_eps_eqx(const Instance& instance, const Allocation& allocation, Epsilon eps,
                              Direction direction, const ItemClassification& cls);

bool check_equitable(const Instance& instance, const Allocation& allocation);

/// Envy-freeness up to any item. Goods entries: `witness` envies `owner`'s
/// bundle without `item`, lhs = v_w(A_owner \ item), rhs = v_w(A_w); the
/// most envious agent is recorded. Chores entries: lhs = v_o(A_o \ item),
/// rhs = v_o(A_w) for the bundle the owner likes best.
ViolationReport check_efx(const Instance& instance, const Allocation& allocation);

}  // namespace eqx
