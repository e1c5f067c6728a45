#include "eqx/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqx/verify.hpp"

namespace eqx {

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::empty_pool: return "empty_pool";
        case Termination::eqx_reached: return "eqx_reached";
        case Termination::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {

// Add and Fix conditions, cross-multiplied:
//   goods:  add while (b-a) v <= b t,  remove while (b-a) v' > b t
//   chores: add while b v >= (b+a) t,  remove while b v' < (b+a) t
struct Conditions {
    Direction direction;
    Value own_scale;
    Value target_scale;

    bool keep_adding(Value own, Value target) const {
        const Value l = checked_mul(own, own_scale);
        const Value r = checked_mul(target, target_scale);
        return direction == Direction::goods ? l <= r : l >= r;
    }

    bool should_remove(Value without, Value target) const {
        const Value l = checked_mul(without, own_scale);
        const Value r = checked_mul(target, target_scale);
        return direction == Direction::goods ? l > r : l < r;
    }
};

Conditions make_conditions(Epsilon eps, Direction direction) {
    if (direction == Direction::goods) return {direction, eps.den() - eps.num(), eps.den()};
    return {direction, eps.den(), checked_add(eps.den(), eps.num())};
}

// Goods: the poorest agent and the poorest among the rest.
// Chores: the richest agent and the richest among the rest. Lowest index on ties.
std::pair<Agent, Agent> pick_pair(const std::vector<Value>& cur, Direction direction) {
    auto better = [&](Value a, Value b) { return direction == Direction::goods ? a < b : a > b; };
    Agent first = 0;
    for (Agent i = 1; i < cur.size(); ++i)
        if (better(cur[i], cur[first])) first = i;
    Agent second = first == 0 ? 1 : 0;
    for (Agent i = 0; i < cur.size(); ++i)
        if (i != first && better(cur[i], cur[second])) second = i;
    return {first, second};
}

void fill_totals(const Instance& instance, SolveStats& stats) {
    const auto all = instance.all_items();
    for (Agent i = 0; i < instance.agent_count(); ++i) {
        const Value total = instance.value(i, all);
        if (i == 0 || total > stats.v_max) stats.v_max = total;
        if (i == 0 || total < stats.v_min) stats.v_min = total;
    }
}

SolveResult run_add_and_fix(const Instance& instance, Epsilon eps, Direction direction,
                            const SolveOptions& options) {
    const auto n = instance.agent_count();
    const auto m = instance.item_count();
    const auto cls = classify_items(instance);

    ItemSet held_back;
    for (Item x = 0; x < m; ++x) {
        if (direction == Direction::goods) {
            if (cls.roles[x] != ItemRole::good)
                throw ContractError("item " + std::to_string(x) +
                                    " has a negative marginal; goods direction needs nondecreasing valuations");
        } else {
            if (!cls.nonpositive[x])
                throw ContractError("item " + std::to_string(x) +
                                    " has a positive marginal; chores direction needs nonincreasing valuations");
            if (cls.roles[x] == ItemRole::good) held_back.insert(x);
        }
    }

    const auto calls_before = instance.oracle_calls();
    std::uint64_t check_calls = 0;

    SolveResult result{Allocation(n, m), {}};
    auto& alloc = result.allocation;
    auto& stats = result.stats;
    fill_totals(instance, stats);

    if (n == 1) {
        for (Item x = 0; x < m; ++x) alloc.assign(x, 0);
        stats.oracle_calls = instance.oracle_calls() - calls_before;
        return result;
    }

    const auto cond = make_conditions(eps, direction);
    const bool goods = direction == Direction::goods;
    std::vector<Value> cur(n, 0);
    ItemSet pool = instance.all_items() - held_back;
    std::uint64_t steps = 0;

    auto verify_interim = [&]() {
        const auto before = instance.oracle_calls();
        const auto report = check_eps_eqx(instance, alloc, eps, direction, cls);
        check_calls += instance.oracle_calls() - before;
        ++stats.interim_checks;
        if (!report.is_eqx) throw InvariantError("interim allocation lost the EQx guarantee");
    };

    while (!pool.empty()) {
        if (steps >= options.step_budget) {
            stats.terminated_by = Termination::budget_exceeded;
            break;
        }
        const auto [p, rival] = pick_pair(cur, direction);
        const Value target = cur[rival];
        const Value start = cur[p];
        ++stats.outer_iterations;

        // Add phase.
        while (!pool.empty() && cond.keep_adding(cur[p], target)) {
            const auto& bundle = alloc.bundle(p);
            std::optional<Item> pick;
            Value pick_value = 0;
            Value pick_marginal = 0;
            pool.for_each([&](Item x) {
                const Value v = instance.value(p, bundle.with(x));
                const Value marginal = checked_sub(v, cur[p]);
                if (goods ? marginal < 0 : marginal > 0)
                    throw ContractError("agent " + std::to_string(p) + " has a non-monotone marginal for item " +
                                        std::to_string(x));
                if (!pick || (goods ? marginal > pick_marginal : marginal < pick_marginal)) {
                    pick = x;
                    pick_value = v;
                    pick_marginal = marginal;
                }
            });
            alloc.assign(*pick, p);
            pool.erase(*pick);
            cur[p] = pick_value;
            ++stats.add_steps;
            ++steps;
        }

        // Fix phase.
        for (bool removed = true; removed;) {
            removed = false;
            const auto bundle = alloc.bundle(p);
            for (Item x : bundle.items()) {
                const Value without = instance.value(p, bundle.without(x));
                if (cond.should_remove(without, target)) {
                    alloc.release(x);
                    pool.insert(x);
                    cur[p] = without;
                    ++stats.fix_steps;
                    ++steps;
                    removed = true;
                    break;
                }
            }
        }

        if (options.check_invariants) {
            const bool progressed = goods ? (cur[p] > start && cur[p] > target) : (cur[p] < start && cur[p] < target);
            if (!pool.empty() && !progressed)
                throw InvariantError("outer iteration did not move the selected agent past its rival");
            verify_interim();
        }
    }

    if (stats.terminated_by != Termination::budget_exceeded && !held_back.empty()) {
        Agent poorest = 0;
        for (Agent i = 1; i < n; ++i)
            if (cur[i] < cur[poorest]) poorest = i;
        held_back.for_each([&](Item x) { alloc.assign(x, poorest); });
    }

    stats.oracle_calls = instance.oracle_calls() - calls_before - check_calls;

    if (options.check_invariants && stats.terminated_by == Termination::empty_pool) {
        verify_interim();
        const auto bound = approx_outer_iteration_bound(instance, eps, direction);
        if (stats.outer_iterations > bound)
            throw InvariantError("outer iterations " + std::to_string(stats.outer_iterations) +
                                 " exceed the bound " + std::to_string(bound));
    }
    return result;
}

// Least k >= 0 with num^k >= total * den^k, i.e. ceil(log_{num/den} total).
std::uint64_t ceil_log(Value total, Value num, Value den) {
    using boost::multiprecision::cpp_int;
    if (total <= 1) return 0;
    const long double estimate = std::log(static_cast<long double>(total)) /
                                 std::log(static_cast<long double>(num) / static_cast<long double>(den));
    auto k = static_cast<std::uint64_t>(std::max<long double>(0.0L, std::floor(estimate) - 2.0L));
    cpp_int lhs = boost::multiprecision::pow(cpp_int(num), static_cast<unsigned>(k));
    cpp_int rhs = cpp_int(total) * boost::multiprecision::pow(cpp_int(den), static_cast<unsigned>(k));
    while (lhs < rhs) {
        lhs *= num;
        rhs *= den;
        ++k;
    }
    return k;
}

Value abs_total(const Instance& instance, Agent i) {
    const Value v = instance.value(i, instance.all_items());
    return v < 0 ? checked_neg(v) : v;
}

}  // namespace

SolveResult add_and_fix(const Instance& instance, Direction direction, const SolveOptions& options) {
    return run_add_and_fix(instance, Epsilon{}, direction, options);
}

SolveResult add_and_fix_approx(const Instance& instance, Epsilon eps, Direction direction,
                               const SolveOptions& options) {
    return run_add_and_fix(instance, eps, direction, options);
}

std::uint64_t exact_outer_iteration_bound(const Instance& instance) {
    Value largest = 0;
    for (Agent i = 0; i < instance.agent_count(); ++i) largest = std::max(largest, abs_total(instance, i));
    return static_cast<std::uint64_t>(checked_add(checked_mul(static_cast<Value>(instance.agent_count()), largest), 1));
}

std::uint64_t approx_outer_iteration_bound(const Instance& instance, Epsilon eps, Direction direction) {
    if (eps.is_zero()) return exact_outer_iteration_bound(instance);
    const Value a = eps.num();
    const Value b = eps.den();
    const Value num = direction == Direction::goods ? b : checked_add(b, a);
    const Value den = direction == Direction::goods ? b - a : b;
    std::uint64_t bound = instance.agent_count() + 1;
    for (Agent i = 0; i < instance.agent_count(); ++i) bound += ceil_log(abs_total(instance, i), num, den);
    return bound;
}

}  // namespace eqx
