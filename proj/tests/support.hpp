#pragma once

// Independent reference procedures used as test oracles. None of these call
// into the solver code paths they are compared against; they only use the
// data model (Instance, Allocation, ItemSet) and raw additive values.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "eqx/instance.hpp"
#include "eqx/valuation.hpp"

namespace eqx::testing {

using Rng = std::mt19937_64;

inline Value draw(Rng& rng, Value lo, Value hi) { return std::uniform_int_distribution<Value>(lo, hi)(rng); }

/// Per-owner good/chore role straight from the definitions: an item is a
/// good if nobody values it negatively, a chore if nobody values it
/// positively and someone strictly dislikes it, otherwise it depends on the
/// owner's own sign.
inline bool reference_is_good(const std::vector<std::vector<Value>>& rows, Agent owner, Item x) {
    bool any_neg = false, any_pos = false;
    for (const auto& r : rows) {
        any_neg |= r[x] < 0;
        any_pos |= r[x] > 0;
    }
    if (!any_neg) return true;
    if (!any_pos) return false;
    return rows[owner][x] >= 0;
}

struct RefViolation {
    Agent owner;
    Item item;
    bool goods;
    friend auto operator<=>(const RefViolation&, const RefViolation&) = default;
};

inline Value ref_value(const std::vector<Value>& row, const ItemSet& s) {
    Value t = 0;
    for (Item x : s.items()) t += row[x];
    return t;
}

/// Naive double loop over ordered pairs and items for additive rows.
inline std::set<RefViolation> reference_eqx(const std::vector<std::vector<Value>>& rows, const Allocation& a) {
    std::set<RefViolation> out;
    const auto n = rows.size();
    for (Agent j = 0; j < n; ++j) {
        for (Item g : a.bundle(j).items()) {
            for (Agent i = 0; i < n; ++i) {
                if (i == j) continue;
                const Value without = ref_value(rows[j], a.bundle(j).without(g));
                const Value other = ref_value(rows[i], a.bundle(i));
                if (reference_is_good(rows, j, g)) {
                    if (without > other) out.insert({j, g, true});
                } else {
                    if (without < other) out.insert({j, g, false});
                }
            }
        }
    }
    return out;
}

/// Random allocation; each item goes to an agent or (if partial) maybe the pool.
inline Allocation random_allocation(Rng& rng, std::size_t n, std::size_t m, bool partial) {
    Allocation a(n, m);
    for (Item x = 0; x < m; ++x) {
        const Value pick = draw(rng, partial ? -1 : 0, static_cast<Value>(n) - 1);
        if (pick >= 0) a.assign(x, static_cast<Agent>(pick));
    }
    return a;
}

/// Equal-sum bipartition by subset-sum bitset DP.
inline bool has_equal_bipartition(const std::vector<Value>& a) {
    Value total = 0;
    for (Value x : a) total += x;
    if (total % 2 != 0) return false;
    std::vector<bool> reach(static_cast<std::size_t>(total / 2) + 1, false);
    reach[0] = true;
    for (Value x : a)
        for (Value s = total / 2; s >= x; --s)
            if (reach[static_cast<std::size_t>(s - x)]) reach[static_cast<std::size_t>(s)] = true;
    return reach[static_cast<std::size_t>(total / 2)];
}

/// Exhaustive submodularity test on a full table over m items.
inline bool is_submodular(const std::vector<Value>& table, std::size_t m) {
    const std::size_t full = std::size_t{1} << m;
    for (std::size_t s = 0; s < full; ++s)
        for (std::size_t t = 0; t < full; ++t)
            if (table[s] + table[t] < table[s | t] + table[s & t]) return false;
    return true;
}

inline bool is_monotone_table(const std::vector<Value>& table, std::size_t m) {
    for (std::size_t s = 0; s < table.size(); ++s)
        for (std::size_t x = 0; x < m; ++x)
            if (!((s >> x) & 1U) && table[s | (std::size_t{1} << x)] < table[s]) return false;
    return true;
}

/// Random monotone submodular table over m items: coverage function of
/// random item-to-element sets with random element weights.
inline std::vector<Value> random_coverage_table(Rng& rng, std::size_t m, std::size_t elements) {
    std::vector<std::uint32_t> covers(m);
    std::vector<Value> weight(elements);
    for (auto& w : weight) w = draw(rng, 1, 6);
    for (auto& c : covers) c = static_cast<std::uint32_t>(draw(rng, 1, (Value{1} << elements) - 1));
    std::vector<Value> table(std::size_t{1} << m, 0);
    for (std::size_t s = 0; s < table.size(); ++s) {
        std::uint32_t covered = 0;
        for (std::size_t x = 0; x < m; ++x)
            if ((s >> x) & 1U) covered |= covers[x];
        for (std::size_t e = 0; e < elements; ++e)
            if ((covered >> e) & 1U) table[s] += weight[e];
    }
    return table;
}

/// Additive objective instance where every chore has one value shared by
/// all agents; goods may differ.
inline Instance identical_chores_instance(Rng& rng, std::size_t n, std::size_t m, Value h) {
    std::vector<std::vector<Value>> rows(n, std::vector<Value>(m));
    for (Item x = 0; x < m; ++x) {
        if (draw(rng, 0, 1) == 0) {
            const Value c = -draw(rng, 1, h);
            for (auto& r : rows) r[x] = c;
        } else {
            for (auto& r : rows) r[x] = draw(rng, 0, h);
        }
    }
    return Instance::additive(rows);
}

/// Goods in [0, h] and one chore strictly negative for everyone at `slot`.
inline Instance single_chore_instance(Rng& rng, std::size_t n, std::size_t goods, Value h) {
    const auto m = goods + 1;
    const auto slot = static_cast<Item>(draw(rng, 0, static_cast<Value>(goods)));
    std::vector<std::vector<Value>> rows(n, std::vector<Value>(m));
    for (auto& r : rows)
        for (Item x = 0; x < m; ++x) r[x] = x == slot ? -draw(rng, 1, h) : draw(rng, 0, h);
    return Instance::additive(rows);
}

/// Chores in [-h, 0] (never zero for everyone) and one strictly positive good.
inline Instance single_good_instance(Rng& rng, std::size_t n, std::size_t chores, Value h) {
    const auto m = chores + 1;
    const auto slot = static_cast<Item>(draw(rng, 0, static_cast<Value>(chores)));
    std::vector<std::vector<Value>> rows(n, std::vector<Value>(m));
    for (auto& r : rows)
        for (Item x = 0; x < m; ++x) r[x] = x == slot ? draw(rng, 1, h) : -draw(rng, 0, h);
    for (Item x = 0; x < m; ++x) {
        if (x == slot) continue;
        bool all_zero = true;
        for (auto& r : rows) all_zero &= r[x] == 0;
        if (all_zero) rows[0][x] = -1;
    }
    return Instance::additive(rows);
}

inline std::vector<std::vector<Value>> rows_of(const Instance& inst) {
    std::vector<std::vector<Value>> rows;
    for (const auto& v : inst.valuations()) rows.emplace_back(v.additive_values().begin(), v.additive_values().end());
    return rows;
}

/// Every complete allocation, independent of the library's enumerator.
inline std::vector<Allocation> all_allocations(std::size_t n, std::size_t m) {
    std::vector<Allocation> out;
    std::vector<std::size_t> owner(m, 0);
    while (true) {
        std::vector<ItemSet> bundles(n);
        for (Item x = 0; x < m; ++x) bundles[owner[x]].insert(x);
        out.push_back(Allocation::from_bundles(m, bundles));
        std::size_t k = m;
        while (k > 0 && ++owner[k - 1] == n) owner[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

}  // namespace eqx::testing
