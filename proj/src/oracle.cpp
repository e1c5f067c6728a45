#include "eqx/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "eqx/verify.hpp"

namespace eqx {

std::optional<std::uint64_t> allocation_count(std::size_t agents, std::size_t items) {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < items; ++k)
        if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(agents), &total)) return std::nullopt;
    return total;
}

std::uint64_t for_each_allocation(std::size_t agents, std::size_t items, std::uint64_t budget,
                                  const std::function<bool(const Allocation&)>& visit) {
    if (agents == 0) throw InputError("cannot enumerate allocations for zero agents");
    const auto count = allocation_count(agents, items);
    if (!count || *count > budget)
        throw BudgetExceeded(std::to_string(agents) + "^" + std::to_string(items) +
                             " allocations exceed the enumeration budget of " + std::to_string(budget));

    std::vector<Agent> owner(items, 0);
    Allocation alloc(agents, items);
    for (Item x = 0; x < items; ++x) alloc.assign(x, 0);

    std::uint64_t visited = 0;
    while (true) {
        ++visited;
        if (!visit(alloc)) return visited;
        // Odometer, last item fastest.
        std::size_t pos = items;
        while (pos > 0) {
            --pos;
            if (owner[pos] + 1 < agents) {
                ++owner[pos];
                alloc.transfer(pos, owner[pos]);
                break;
            }
            owner[pos] = 0;
            alloc.transfer(pos, 0);
            if (pos == 0) return visited;
        }
        if (items == 0) return visited;
    }
}

std::vector<Allocation> brute_force_eqx(const Instance& instance, SearchMode mode, std::uint64_t budget) {
    const auto cls = classify_items(instance);
    std::vector<Allocation> found;
    for_each_allocation(instance.agent_count(), instance.item_count(), budget, [&](const Allocation& alloc) {
        if (check_eqx(instance, alloc, cls).is_eqx) {
            found.push_back(alloc);
            if (mode == SearchMode::any) return false;
        }
        return true;
    });
    return found;
}

namespace {

struct LocalGround {
    std::vector<Item> items;  // ascending
    std::vector<Value> value; // by local mask

    ItemSet to_set(std::uint32_t local) const {
        ItemSet s;
        for (std::size_t k = 0; k < items.size(); ++k)
            if ((local >> k) & 1U) s.insert(items[k]);
        return s;
    }
};

struct Failure {
    std::uint32_t subset;
    std::vector<std::size_t> trace;  // local positions
    std::uint32_t greedy_set;
    std::uint32_t better_set;
};

}  // namespace

WwlResult is_weakly_well_layered(const Valuation& valuation, const std::vector<Item>& ground, Direction direction,
                                 TieBreak ties) {
    LocalGround g;
    g.items = ground;
    std::sort(g.items.begin(), g.items.end());
    if (std::adjacent_find(g.items.begin(), g.items.end()) != g.items.end())
        throw InputError("ground set lists an item twice");
    for (Item x : g.items)
        if (x >= valuation.item_count()) throw InputError("ground item " + std::to_string(x) + " out of range");
    const auto k = g.items.size();
    if (k > kMaxWwlGround) throw InputError("weakly well-layered test limited to " + std::to_string(kMaxWwlGround) + " items");
    if (ties == TieBreak::all && k > kMaxWwlAllTiesGround)
        throw InputError("all-ties test limited to " + std::to_string(kMaxWwlAllTiesGround) + " items");

    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    g.value.resize(std::size_t{1} << k);
    for (std::uint32_t mask = 0; mask <= full; ++mask) g.value[mask] = valuation.value(g.to_set(mask));

    const bool goods = direction == Direction::goods;
    auto better = [&](Value a, Value b) { return goods ? a > b : a < b; };

    std::optional<Failure> failure;
    std::vector<Value> best(k + 1);
    std::vector<std::uint32_t> best_set(k + 1);

    for (std::uint32_t sub = 0; sub <= full && !failure; ++sub) {
        const auto size = static_cast<std::size_t>(std::popcount(sub));
        std::vector<bool> seen(size + 1, false);
        for (std::uint32_t s = sub;; s = (s - 1) & sub) {
            const auto c = static_cast<std::size_t>(std::popcount(s));
            // Lowest mask among ties so the witness is stable.
            if (!seen[c] || better(g.value[s], best[c]) || (g.value[s] == best[c] && s < best_set[c])) {
                best[c] = g.value[s];
                best_set[c] = s;
                seen[c] = true;
            }
            if (s == 0) break;
        }

        // Greedy choices available from S inside sub.
        auto choices = [&](std::uint32_t s) {
            std::vector<std::size_t> out;
            std::optional<Value> top;
            for (std::size_t pos = 0; pos < k; ++pos) {
                const std::uint32_t bit = std::uint32_t{1} << pos;
                if (!(sub & bit) || (s & bit)) continue;
                const Value v = g.value[s | bit];
                if (!top || better(v, *top)) {
                    top = v;
                    out.assign(1, pos);
                } else if (v == *top) {
                    out.push_back(pos);
                }
            }
            if (ties == TieBreak::lowest_index && out.size() > 1) out.resize(1);
            return out;
        };

        // Level-by-level walk over every greedy set reachable under the tie rule.
        std::map<std::uint32_t, std::vector<std::size_t>> level{{0U, {}}};
        for (std::size_t i = 1; i <= size && !failure; ++i) {
            std::map<std::uint32_t, std::vector<std::size_t>> next;
            for (const auto& [s, trace] : level) {
                for (auto pos : choices(s)) {
                    const std::uint32_t t = s | (std::uint32_t{1} << pos);
                    if (next.count(t)) continue;
                    auto tr = trace;
                    tr.push_back(pos);
                    if (g.value[t] != best[i]) {
                        failure = Failure{sub, tr, t, best_set[i]};
                        break;
                    }
                    next.emplace(t, std::move(tr));
                }
                if (failure) break;
            }
            level = std::move(next);
        }
    }

    WwlResult result;
    if (failure) {
        result.holds = false;
        WwlCounterexample ce;
        ce.subset = g.to_set(failure->subset);
        for (auto pos : failure->trace) ce.greedy_trace.push_back(g.items[pos]);
        ce.greedy_set = g.to_set(failure->greedy_set);
        ce.better_set = g.to_set(failure->better_set);
        ce.greedy_value = g.value[failure->greedy_set];
        ce.better_value = g.value[failure->better_set];
        result.counterexample = std::move(ce);
    }
    return result;
}

}  // namespace eqx
