#include "eqx/valuation.hpp"

#include <algorithm>
#include <string>

namespace eqx {

std::string_view to_string(ValuationKind kind) {
    switch (kind) {
        case ValuationKind::additive: return "additive";
        case ValuationKind::budget_additive: return "budget_additive";
        case ValuationKind::partition_matroid_rank: return "partition_matroid_rank";
        case ValuationKind::explicit_table: return "explicit_table";
    }
    return "?";
}

ValuationKind parse_valuation_kind(std::string_view text) {
    for (auto k : {ValuationKind::additive, ValuationKind::budget_additive,
                   ValuationKind::partition_matroid_rank, ValuationKind::explicit_table})
        if (to_string(k) == text) return k;
    throw InputError("unknown valuation kind '" + std::string(text) + "'");
}

Valuation::Valuation(std::size_t item_count, ValuationParams params)
    : item_count_(item_count), params_(std::move(params)) {
    if (item_count_ > kMaxItems)
        throw InputError("item count " + std::to_string(item_count_) + " exceeds capacity");
}

Valuation::Valuation(const Valuation& other)
    : item_count_(other.item_count_),
      params_(other.params_),
      part_of_(other.part_of_),
      calls_(other.calls_.load(std::memory_order_relaxed)) {}

Valuation& Valuation::operator=(const Valuation& other) {
    if (this != &other) {
        item_count_ = other.item_count_;
        params_ = other.params_;
        part_of_ = other.part_of_;
        calls_.store(other.calls_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    }
    return *this;
}

Valuation::Valuation(Valuation&& other) noexcept
    : item_count_(other.item_count_),
      params_(std::move(other.params_)),
      part_of_(std::move(other.part_of_)),
      calls_(other.calls_.load(std::memory_order_relaxed)) {}

Valuation& Valuation::operator=(Valuation&& other) noexcept {
    item_count_ = other.item_count_;
    params_ = std::move(other.params_);
    part_of_ = std::move(other.part_of_);
    calls_.store(other.calls_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
}

Valuation Valuation::additive(std::vector<Value> values) {
    const auto m = values.size();
    return Valuation(m, AdditiveParams{std::move(values)});
}

Valuation Valuation::budget_additive(std::vector<Value> values, Value budget) {
    if (budget < 0) throw InputError("budget must be nonnegative");
    for (Value v : values)
        if (v < 0) throw InputError("budget-additive item values must be nonnegative");
    const auto m = values.size();
    return Valuation(m, BudgetAdditiveParams{std::move(values), budget});
}

Valuation Valuation::partition_matroid_rank(std::size_t item_count,
                                            std::vector<std::vector<Item>> parts,
                                            std::vector<Value> capacities) {
    if (parts.size() != capacities.size())
        throw InputError("partition matroid needs one capacity per part");
    std::vector<std::int32_t> part_of(item_count, -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (capacities[p] < 0) throw InputError("partition capacities must be nonnegative");
        for (Item x : parts[p]) {
            if (x >= item_count) throw InputError("partition part refers to item " + std::to_string(x) + " out of range");
            if (part_of[x] != -1) throw InputError("item " + std::to_string(x) + " appears in two parts");
            part_of[x] = static_cast<std::int32_t>(p);
        }
    }
    if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end())
        throw InputError("partition parts must cover every item");
    Valuation v(item_count, PartitionMatroidParams{std::move(parts), std::move(capacities)});
    v.part_of_ = std::move(part_of);
    return v;
}

Valuation Valuation::explicit_table(std::size_t item_count, std::vector<Value> table) {
    if (item_count > kMaxExplicitItems)
        throw InputError("explicit tables are limited to " + std::to_string(kMaxExplicitItems) + " items");
    if (table.size() != (std::size_t{1} << item_count))
        throw InputError("explicit table must have 2^m entries");
    if (table[0] != 0) throw InputError("explicit table must give the empty set value 0");
    return Valuation(item_count, ExplicitTableParams{std::move(table)});
}

ValuationKind Valuation::kind() const noexcept { return static_cast<ValuationKind>(params_.index()); }

std::span<const Value> Valuation::additive_values() const noexcept {
    if (const auto* p = std::get_if<AdditiveParams>(&params_)) return p->values;
    return {};
}

Value Valuation::value(const ItemSet& subset) const {
    if (subset.has_item_at_or_above(item_count_))
        throw InputError("subset contains an item outside the ground set of " +
                         std::to_string(item_count_) + " items");
    calls_.fetch_add(1, std::memory_order_relaxed);
    return evaluate(subset);
}

Value Valuation::evaluate(const ItemSet& subset) const {
    return std::visit(
        [&](const auto& p) -> Value {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, AdditiveParams>) {
                Value sum = 0;
                subset.for_each([&](Item x) { sum = checked_add(sum, p.values[x]); });
                return sum;
            } else if constexpr (std::is_same_v<P, BudgetAdditiveParams>) {
                Value sum = 0;
                subset.for_each([&](Item x) { sum = checked_add(sum, p.values[x]); });
                return std::min(sum, p.budget);
            } else if constexpr (std::is_same_v<P, PartitionMatroidParams>) {
                std::vector<Value> used(p.parts.size(), 0);
                subset.for_each([&](Item x) { ++used[static_cast<std::size_t>(part_of_[x])]; });
                Value rank = 0;
                for (std::size_t k = 0; k < used.size(); ++k) rank += std::min(used[k], p.capacities[k]);
                return rank;
            } else {
                return p.table[subset.low_mask()];
            }
        },
        params_);
}

MarginalSigns Valuation::marginal_signs(Item x) const {
    if (x >= item_count_) throw InputError("item " + std::to_string(x) + " out of range");
    return std::visit(
        [&](const auto& p) -> MarginalSigns {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, AdditiveParams>) {
                return {p.values[x] > 0, p.values[x] < 0};
            } else if constexpr (std::is_same_v<P, BudgetAdditiveParams>) {
                return {p.values[x] > 0 && p.budget > 0, false};
            } else if constexpr (std::is_same_v<P, PartitionMatroidParams>) {
                return {p.capacities[static_cast<std::size_t>(part_of_[x])] > 0, false};
            } else {
                MarginalSigns s;
                const std::uint64_t bit = std::uint64_t{1} << x;
                for (std::uint64_t mask = 0; mask < p.table.size(); ++mask) {
                    if ((mask & bit) != 0) continue;
                    const Value d = checked_sub(p.table[mask | bit], p.table[mask]);
                    s.has_positive = s.has_positive || d > 0;
                    s.has_negative = s.has_negative || d < 0;
                    if (s.has_positive && s.has_negative) break;
                }
                return s;
            }
        },
        params_);
}

}  // namespace eqx
