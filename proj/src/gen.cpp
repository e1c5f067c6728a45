#include "eqx/gen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace eqx {

Value SplitMix64::uniform(Value lo, Value hi) {
    if (lo > hi) throw InputError("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max())
        return static_cast<Value>(next());
    const std::uint64_t bound = span + 1;
    // Reject the top partial block.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return static_cast<Value>(static_cast<std::uint64_t>(lo) + x % bound);
}

std::string_view to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::monotone_goods: return "monotone_goods";
        case InstanceClass::monotone_chores: return "monotone_chores";
        case InstanceClass::objective_mixed: return "objective_mixed";
        case InstanceClass::subjective: return "subjective";
    }
    return "?";
}

InstanceClass parse_instance_class(std::string_view text) {
    for (auto c : {InstanceClass::monotone_goods, InstanceClass::monotone_chores, InstanceClass::objective_mixed,
                   InstanceClass::subjective})
        if (to_string(c) == text) return c;
    throw InputError("unknown instance class '" + std::string(text) + "'");
}

namespace {

Valuation random_monotone_table(SplitMix64& rng, std::size_t m, Value lo, Value hi, bool negate) {
    if (m > kMaxExplicitItems)
        throw InputError("explicit tables hold at most " + std::to_string(kMaxExplicitItems) + " items");
    std::vector<Value> table(std::size_t{1} << m, 0);
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
        Value v = rng.uniform(lo, hi);
        for (std::size_t x = 0; x < m; ++x)
            if ((mask >> x) & 1U) v = std::max(v, table[mask & ~(std::size_t{1} << x)]);
        table[mask] = v;
    }
    if (negate)
        for (auto& v : table) v = checked_neg(v);
    return Valuation::explicit_table(m, std::move(table));
}

Valuation random_partition_matroid(SplitMix64& rng, std::size_t m) {
    if (m == 0) return Valuation::partition_matroid_rank(0, {}, {});
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<Value>(m)));
    std::vector<std::vector<Item>> parts(k);
    for (Item x = 0; x < m; ++x) parts[static_cast<std::size_t>(rng.uniform(0, static_cast<Value>(k) - 1))].push_back(x);
    std::erase_if(parts, [](const auto& p) { return p.empty(); });
    std::vector<Value> caps;
    for (const auto& p : parts) caps.push_back(rng.uniform(0, static_cast<Value>(p.size())));
    return Valuation::partition_matroid_rank(m, std::move(parts), std::move(caps));
}

}  // namespace

Instance gen_random(const RandomParams& params, std::uint64_t seed) {
    if (params.agents == 0) throw InputError("at least one agent is required");
    if (params.items > kMaxItems) throw InputError("at most " + std::to_string(kMaxItems) + " items are supported");
    if (params.min_value < 0 || params.min_value > params.max_value)
        throw InputError("value range must satisfy 0 <= min <= max");

    const auto n = params.agents;
    const auto m = params.items;
    const auto kind = params.kind;
    const bool additive_only = params.cls == InstanceClass::objective_mixed || params.cls == InstanceClass::subjective;
    if (additive_only && kind != ValuationKind::additive)
        throw InputError(std::string(to_string(params.cls)) + " instances must be additive");
    if (params.cls == InstanceClass::monotone_chores && kind != ValuationKind::additive &&
        kind != ValuationKind::explicit_table)
        throw InputError("monotone_chores instances must be additive or explicit_table");

    SplitMix64 rng(seed);
    auto magnitude = [&] { return rng.uniform(params.min_value, params.max_value); };

    std::vector<bool> item_is_chore(m, false);
    if (params.cls == InstanceClass::objective_mixed)
        for (Item x = 0; x < m; ++x) item_is_chore[x] = rng.coin();

    std::vector<Valuation> vals;
    for (Agent i = 0; i < n; ++i) {
        switch (params.cls) {
            case InstanceClass::monotone_goods:
            case InstanceClass::monotone_chores: {
                const bool chores = params.cls == InstanceClass::monotone_chores;
                if (kind == ValuationKind::explicit_table) {
                    vals.push_back(random_monotone_table(rng, m, params.min_value, params.max_value, chores));
                    break;
                }
                if (kind == ValuationKind::partition_matroid_rank) {
                    vals.push_back(random_partition_matroid(rng, m));
                    break;
                }
                std::vector<Value> v(m);
                for (auto& x : v) x = chores ? checked_neg(magnitude()) : magnitude();
                if (kind == ValuationKind::budget_additive) {
                    Value total = 0;
                    for (Value x : v) total = checked_add(total, x);
                    const Value budget = rng.uniform(0, total);
                    vals.push_back(Valuation::budget_additive(std::move(v), budget));
                } else {
                    vals.push_back(Valuation::additive(std::move(v)));
                }
                break;
            }
            case InstanceClass::objective_mixed: {
                std::vector<Value> v(m);
                for (Item x = 0; x < m; ++x) v[x] = item_is_chore[x] ? checked_neg(magnitude()) : magnitude();
                vals.push_back(Valuation::additive(std::move(v)));
                break;
            }
            case InstanceClass::subjective: {
                std::vector<Value> v(m);
                for (Item x = 0; x < m; ++x) {
                    const Value mag = magnitude();
                    v[x] = rng.coin() ? checked_neg(mag) : mag;
                }
                vals.push_back(Valuation::additive(std::move(v)));
                break;
            }
        }
    }
    return Instance(m, std::move(vals));
}

Instance gen_partition_reduction(const std::vector<Value>& multiset) {
    std::vector<Value> first{1, -1};
    std::vector<Value> second{-1, 1};
    std::vector<std::string> names{"x1", "x2"};
    for (std::size_t k = 0; k < multiset.size(); ++k) {
        if (multiset[k] <= 0) throw InputError("partition entries must be positive");
        const Value doubled = checked_mul(2, multiset[k]);
        first.push_back(doubled);
        second.push_back(doubled);
        names.push_back("g" + std::to_string(k + 1));
    }
    return Instance::additive({first, second}, std::move(names));
}

Value default_delta(std::size_t n, Value target) {
    return checked_mul(20, checked_mul(10, checked_mul(static_cast<Value>(n), target)));
}

Instance gen_3partition_reduction(const std::vector<Value>& multiset, Value target, std::optional<Value> delta) {
    if (multiset.empty() || multiset.size() % 3 != 0)
        throw InputError("3-partition needs 3n integers with n >= 1, got " + std::to_string(multiset.size()));
    if (target <= 0) throw InputError("target must be positive");
    const auto n = multiset.size() / 3;
    Value total = 0;
    for (Value a : multiset) {
        if (a <= 0) throw InputError("3-partition entries must be positive");
        // T/4 < a < T/2 without division.
        if (!(checked_mul(4, a) > target && checked_mul(2, a) < target))
            throw InputError("entry " + std::to_string(a) + " is not strictly between T/4 and T/2");
        total = checked_add(total, a);
    }
    const Value nt = checked_mul(static_cast<Value>(n), target);
    if (total != nt)
        throw InputError("entries sum to " + std::to_string(total) + ", expected nT = " + std::to_string(nt));
    const Value d = delta.value_or(default_delta(n, target));
    if (d % 10 != 0) throw InputError("delta must be a multiple of 10");
    if (d <= checked_mul(10, nt)) throw InputError("delta must exceed 10nT");

    std::vector<std::vector<Value>> rows;
    std::vector<Value> original(multiset);
    original.push_back(d / 10);
    original.push_back(-(d / 10));
    for (std::size_t i = 0; i < n; ++i) rows.push_back(original);
    std::vector<Value> last(multiset.size(), checked_neg(d));
    last.push_back(target);
    last.push_back(1);
    rows.push_back(std::move(last));
    return Instance::additive(rows);
}

Instance canonical(std::string_view name) {
    if (name == "table2") return Instance::additive({{1, -1, 100}, {-1, 1, 100}}, {"x1", "x2", "x3"});
    if (name == "table4") return Instance::additive({{10, 1, -1}, {1, 100, -1000}}, {"g1", "g2", "c"});
    throw InputError("unknown canonical instance '" + std::string(name) + "' (expected table2 or table4)");
}

}  // namespace eqx
