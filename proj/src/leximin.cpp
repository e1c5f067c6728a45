#include <algorithm>
#include <string>

#include "eqx/nonmonotone.hpp"
#include "eqx/oracle.hpp"

namespace eqx {

std::string_view to_string(OrderDirection d) {
    return d == OrderDirection::chores_identical ? "chores_identical" : "goods_identical";
}

OrderDirection parse_order_direction(std::string_view text) {
    if (text == "chores_identical" || text == "chores") return OrderDirection::chores_identical;
    if (text == "goods_identical" || text == "goods") return OrderDirection::goods_identical;
    throw InputError("unknown order direction '" + std::string(text) + "'");
}

std::vector<AgentKey> sigma_keys(std::span<const Value> values, const Allocation& allocation,
                                 OrderDirection direction) {
    std::vector<AgentKey> keys(values.size());
    for (Agent i = 0; i < values.size(); ++i)
        keys[i] = {direction == OrderDirection::chores_identical ? values[i] : checked_neg(values[i]),
                   allocation.bundle(i).size(), i};
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<AgentKey> sigma_keys(const Instance& instance, const Allocation& allocation, OrderDirection direction) {
    const auto values = bundle_values(instance, allocation);
    return sigma_keys(values, allocation, direction);
}

std::vector<Agent> sigma(const Instance& instance, const Allocation& allocation, OrderDirection direction) {
    std::vector<Agent> order;
    for (const auto& k : sigma_keys(instance, allocation, direction)) order.push_back(k.agent);
    return order;
}

std::strong_ordering precplus(const Instance& instance, const Allocation& a, const Allocation& b,
                              OrderDirection direction) {
    const auto ka = sigma_keys(instance, a, direction);
    const auto kb = sigma_keys(instance, b, direction);
    // The walk over positions stops at the first differing field of
    // (key, size, agent), which is lexicographic order on the sorted keys.
    return std::lexicographical_compare_three_way(ka.begin(), ka.end(), kb.begin(), kb.end());
}

Allocation leximin_pp(const Instance& instance, OrderDirection direction, std::uint64_t budget) {
    const auto n = instance.agent_count();
    std::optional<Allocation> best;
    std::vector<AgentKey> best_keys;
    std::vector<Value> values(n);
    for_each_allocation(n, instance.item_count(), budget, [&](const Allocation& alloc) {
        for (Agent i = 0; i < n; ++i) values[i] = instance.value(i, alloc.bundle(i));
        auto keys = sigma_keys(values, alloc, direction);
        if (!best || best_keys < keys) {
            best = alloc;
            best_keys = std::move(keys);
        }
        return true;
    });
    return *best;
}

}  // namespace eqx
