#include "eqx/dp.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

namespace eqx {

namespace {

constexpr Value kAbsent = std::numeric_limits<Value>::min();

// Per agent: w, h, d at offsets 3i, 3i+1, 3i+2.
using State = std::array<Value, 3 * kMaxDpAgents>;

struct StateHash {
    std::size_t operator()(const State& s) const noexcept { return boost::hash_range(s.begin(), s.end()); }
};

struct Node {
    State state;
    std::uint32_t parent;
    std::uint8_t owner;
};

bool accepting(const State& s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Value wi = s[3 * i], wj = s[3 * j];
            const Value hj = s[3 * j + 1], di = s[3 * i + 2];
            if (hj != kAbsent && checked_sub(wj, hj) > wi) return false;
            if (di != kAbsent && checked_sub(wi, di) < wj) return false;
        }
    }
    return true;
}

}  // namespace

DpResult dp_exists(const Instance& instance, bool want_witness, std::uint64_t state_budget) {
    const auto n = instance.agent_count();
    const auto m = instance.item_count();
    if (n > kMaxDpAgents)
        throw ContractError("dynamic program supports at most " + std::to_string(kMaxDpAgents) + " agents, got " +
                            std::to_string(n));
    if (!instance.all_additive()) throw ContractError("dynamic program needs additive valuations");
    if (m > std::numeric_limits<std::uint32_t>::max()) throw ContractError("too many items");

    const auto cls = classify_items(instance);
    DpResult result;
    for (Agent i = 0; i < n; ++i)
        for (Value v : instance.valuation(i).additive_values())
            result.max_abs_item_value = std::max(result.max_abs_item_value, v < 0 ? checked_neg(v) : v);

    State start{};
    for (Agent i = 0; i < n; ++i) {
        start[3 * i + 1] = kAbsent;
        start[3 * i + 2] = kAbsent;
    }

    // Layers kept only when a witness is wanted.
    std::vector<std::vector<Node>> layers;
    std::vector<Node> layer{{start, 0, 0}};
    result.peak_states = 1;

    for (Item x = 0; x < m; ++x) {
        std::vector<Node> next;
        std::unordered_map<State, std::uint32_t, StateHash> seen;
        for (std::uint32_t k = 0; k < layer.size(); ++k) {
            const State& s = layer[k].state;
            for (Agent i = 0; i < n; ++i) {
                const Value v = instance.valuation(i).additive_values()[x];
                const bool good = cls.roles[x] == ItemRole::good || (cls.roles[x] == ItemRole::mixed && v >= 0);
                State t = s;
                t[3 * i] = checked_add(t[3 * i], v);
                if (good) {
                    Value& h = t[3 * i + 1];
                    if (h == kAbsent || v < h) h = v;
                } else {
                    Value& d = t[3 * i + 2];
                    if (d == kAbsent || v > d) d = v;
                }
                if (seen.emplace(t, static_cast<std::uint32_t>(next.size())).second) {
                    next.push_back({t, k, static_cast<std::uint8_t>(i)});
                    if (next.size() > state_budget)
                        throw BudgetExceeded("dynamic program exceeded " + std::to_string(state_budget) +
                                             " states at item " + std::to_string(x));
                }
            }
        }
        result.peak_states = std::max<std::uint64_t>(result.peak_states, next.size());
        if (want_witness) layers.push_back(std::move(layer));
        layer = std::move(next);
    }

    for (std::uint32_t k = 0; k < layer.size(); ++k) {
        if (!accepting(layer[k].state, n)) continue;
        result.exists = true;
        if (want_witness) {
            std::vector<ItemSet> bundles(n);
            std::uint32_t at = k;
            const std::vector<Node>* cur = &layer;
            for (Item x = m; x-- > 0;) {
                const Node& node = (*cur)[at];
                bundles[node.owner].insert(x);
                at = node.parent;
                cur = &layers[x];
            }
            result.witness = Allocation::from_bundles(m, std::move(bundles));
        }
        break;
    }
    return result;
}

}  // namespace eqx
