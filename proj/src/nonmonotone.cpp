#include "eqx/nonmonotone.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "eqx/verify.hpp"

namespace eqx {

std::string_view to_string(SpecialItem s) { return s == SpecialItem::chore ? "chore" : "good"; }

namespace {

Value magnitude(Value v) { return v < 0 ? checked_neg(v) : v; }

void fill_totals(const Instance& instance, SolveStats& stats) {
    const auto all = instance.all_items();
    for (Agent i = 0; i < instance.agent_count(); ++i) {
        const Value total = instance.value(i, all);
        if (i == 0 || total > stats.v_max) stats.v_max = total;
        if (i == 0 || total < stats.v_min) stats.v_min = total;
    }
}

ItemClassification require_additive_objective(const Instance& instance, std::string_view who) {
    if (!instance.all_additive()) throw ContractError(std::string(who) + " needs additive valuations");
    auto cls = classify_items(instance);
    if (!cls.objective) {
        for (Item x = 0; x < instance.item_count(); ++x)
            if (cls.roles[x] == ItemRole::mixed)
                throw ContractError(std::string(who) + " needs objective valuations; item " + std::to_string(x) +
                                    " is a good for some agents and a chore for others");
    }
    return cls;
}

}  // namespace

SolveResult two_way_greedy(const Instance& instance, const SolveOptions& options) {
    if (instance.agent_count() != 2)
        throw ContractError("two-way greedy needs exactly 2 agents, got " + std::to_string(instance.agent_count()));
    const auto cls = require_additive_objective(instance, "two-way greedy");
    const auto m = instance.item_count();

    const auto calls_before = instance.oracle_calls();
    std::uint64_t check_calls = 0;
    SolveResult result{Allocation(2, m), {}};
    auto& alloc = result.allocation;
    auto& stats = result.stats;
    fill_totals(instance, stats);

    auto item_value = [&](Agent i, Item x) { return instance.valuation(i).additive_values()[x]; };

    ItemSet goods = cls.goods();
    ItemSet chores = cls.chores();
    Value cur[2] = {0, 0};

    while (!goods.empty() || !chores.empty()) {
        if (stats.add_steps >= options.step_budget) {
            stats.terminated_by = Termination::budget_exceeded;
            break;
        }
        ++stats.outer_iterations;
        const Agent r = cur[0] >= cur[1] ? 0 : 1;
        const Agent p = 1 - r;

        std::optional<Item> g_star;
        goods.for_each([&](Item x) {
            if (!g_star || item_value(p, x) > item_value(p, *g_star)) g_star = x;
        });
        std::optional<Item> c_star;
        chores.for_each([&](Item x) {
            if (!c_star || item_value(r, x) < item_value(r, *c_star)) c_star = x;
        });

        const bool take_good =
            g_star && (!c_star || magnitude(item_value(p, *g_star)) > magnitude(item_value(r, *c_star)));

        if (options.check_invariants) {
            // The case analysis rests on these magnitude orderings.
            if (take_good) {
                const Value need = magnitude(item_value(p, *g_star));
                alloc.bundle(r).for_each([&](Item c) {
                    if (cls.roles[c] == ItemRole::chore && magnitude(item_value(r, c)) < need)
                        throw InvariantError("chore in the richer bundle is smaller than the good being placed");
                });
            } else {
                const Value need = magnitude(item_value(r, *c_star));
                alloc.bundle(p).for_each([&](Item g) {
                    if (cls.roles[g] == ItemRole::good && magnitude(item_value(p, g)) < need)
                        throw InvariantError("good in the poorer bundle is smaller than the chore being placed");
                });
            }
        }

        if (take_good) {
            alloc.assign(*g_star, p);
            goods.erase(*g_star);
            cur[p] = instance.value(p, alloc.bundle(p));
        } else {
            alloc.assign(*c_star, r);
            chores.erase(*c_star);
            cur[r] = instance.value(r, alloc.bundle(r));
        }
        ++stats.add_steps;

        if (options.check_invariants) {
            const auto before = instance.oracle_calls();
            const bool ok = check_eqx(instance, alloc, cls).is_eqx;
            check_calls += instance.oracle_calls() - before;
            ++stats.interim_checks;
            if (!ok) throw InvariantError("interim two-way allocation is not EQx");
        }
    }

    stats.oracle_calls = instance.oracle_calls() - calls_before - check_calls;
    return result;
}

SolveResult single_special_local_search(const Instance& instance, SpecialItem special, const SolveOptions& options) {
    const auto cls = require_additive_objective(instance, "single-item local search");
    const auto n = instance.agent_count();
    const auto m = instance.item_count();
    const bool chore_case = special == SpecialItem::chore;
    const ItemRole special_role = chore_case ? ItemRole::chore : ItemRole::good;
    const ItemRole bulk_role = chore_case ? ItemRole::good : ItemRole::chore;
    const OrderDirection order = chore_case ? OrderDirection::chores_identical : OrderDirection::goods_identical;

    if (cls.count(special_role) != 1)
        throw ContractError("single-" + std::string(to_string(special)) + " local search needs exactly one " +
                            std::string(to_string(special)) + ", found " + std::to_string(cls.count(special_role)));
    const Item s_item = (chore_case ? cls.chores() : cls.goods()).items().front();

    const auto calls_before = instance.oracle_calls();
    std::uint64_t check_calls = 0;
    SolveResult result{Allocation(n, m), {}};
    auto& alloc = result.allocation;
    auto& stats = result.stats;
    fill_totals(instance, stats);
    for (Item x = 0; x < m; ++x) alloc.assign(x, 0);

    std::vector<Value> cur(n, 0);
    for (Agent i = 0; i < n; ++i) cur[i] = instance.value(i, alloc.bundle(i));

    // Chore case: goods move from i to the poorest p when v_i(A_i \ g) > v_p.
    // Good case: chores move from i to the richest r when v_i(A_i \ c) < v_r.
    auto violates = [&](Value without, Value target) { return chore_case ? without > target : without < target; };
    auto extreme = [&]() {
        Value e = cur[0];
        for (Value v : cur) e = chore_case ? std::min(e, v) : std::max(e, v);
        return e;
    };

    std::uint64_t steps = 0;
    auto is_eqx = [&]() {
        const auto before = instance.oracle_calls();
        const bool ok = check_eqx(instance, alloc, cls).is_eqx;
        check_calls += instance.oracle_calls() - before;
        return ok;
    };

    stats.terminated_by = Termination::eqx_reached;
    while (!is_eqx()) {
        if (steps >= options.step_budget) {
            stats.terminated_by = Termination::budget_exceeded;
            break;
        }
        ++stats.outer_iterations;
        bool moved = false;

        // Resolve every violation of the bulk class.
        bool out_of_budget = false;
        while (true) {
            const Agent target = sigma_keys(cur, alloc, order).front().agent;
            std::optional<std::pair<Agent, Item>> found;
            for (Agent i = 0; i < n && !found; ++i) {
                const auto& bundle = alloc.bundle(i);
                for (Item x : bundle.items()) {
                    if (cls.roles[x] != bulk_role) continue;
                    if (violates(instance.value(i, bundle.without(x)), cur[target])) {
                        found = {{i, x}};
                        break;
                    }
                }
            }
            if (!found) break;
            if (steps >= options.step_budget) {
                out_of_budget = true;
                break;
            }
            const auto [from, x] = *found;
            const Value before = extreme();
            alloc.transfer(x, target);
            cur[from] = instance.value(from, alloc.bundle(from));
            cur[target] = instance.value(target, alloc.bundle(target));
            ++stats.transfers;
            ++steps;
            moved = true;
            if (options.check_invariants && (chore_case ? extreme() < before : extreme() > before))
                throw InvariantError(chore_case ? "minimum value decreased while moving goods"
                                                : "maximum value increased while moving chores");
        }
        if (out_of_budget) {
            stats.terminated_by = Termination::budget_exceeded;
            break;
        }

        // Then the special item.
        const Agent dest = sigma_keys(cur, alloc, order).back().agent;
        const Agent holder = *alloc.owner(s_item);
        const Value cutoff = instance.value(holder, alloc.bundle(holder).without(s_item));
        if (options.check_invariants && !stats.cutoff_trace.empty()) {
            const Value last = stats.cutoff_trace.back();
            if (chore_case ? cutoff <= last : cutoff >= last)
                throw InvariantError(chore_case ? "cutoff value failed to increase between chore checks"
                                                : "cutoff value failed to decrease between good checks");
        }
        stats.cutoff_trace.push_back(cutoff);
        if (chore_case ? cutoff < cur[dest] : cutoff > cur[dest]) {
            alloc.transfer(s_item, dest);
            cur[holder] = instance.value(holder, alloc.bundle(holder));
            cur[dest] = instance.value(dest, alloc.bundle(dest));
            ++stats.special_transfers;
            ++steps;
            moved = true;
        }
        if (!moved) throw InvariantError("local search made no move on an allocation that is not EQx");
    }

    stats.oracle_calls = instance.oracle_calls() - calls_before - check_calls;
    return result;
}

}  // namespace eqx
