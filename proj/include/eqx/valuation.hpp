#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "eqx/types.hpp"

namespace eqx {

enum class ValuationKind { additive, budget_additive, partition_matroid_rank, explicit_table };

std::string_view to_string(ValuationKind kind);
ValuationKind parse_valuation_kind(std::string_view text);

inline constexpr std::size_t kMaxExplicitItems = 20;

struct AdditiveParams {
    std::vector<Value> values;
    friend bool operator==(const AdditiveParams&, const AdditiveParams&) = default;
};

struct BudgetAdditiveParams {
    std::vector<Value> values;
    Value budget = 0;
    friend bool operator==(const BudgetAdditiveParams&, const BudgetAdditiveParams&) = default;
};

struct PartitionMatroidParams {
    std::vector<std::vector<Item>> parts;
    std::vector<Value> capacities;
    friend bool operator==(const PartitionMatroidParams&, const PartitionMatroidParams&) = default;
};

/// table[mask] = v(set with bit x set for each item x).
struct ExplicitTableParams {
    std::vector<Value> table;
    friend bool operator==(const ExplicitTableParams&, const ExplicitTableParams&) = default;
};

using ValuationParams =
    std::variant<AdditiveParams, BudgetAdditiveParams, PartitionMatroidParams, ExplicitTableParams>;

/// Whether an item's marginal value can be positive or negative somewhere.
struct MarginalSigns {
    bool has_positive = false;
    bool has_negative = false;
};

/// Integer set-function oracle over items {0, ..., m-1}.
///
/// Every evaluation through value() bumps an atomic call counter; this is
/// the only mutable state, so a Valuation may be shared read-only across
/// threads.
class Valuation {
public:
    static Valuation additive(std::vector<Value> values);
    static Valuation budget_additive(std::vector<Value> values, Value budget);
    static Valuation partition_matroid_rank(std::size_t item_count,
                                            std::vector<std::vector<Item>> parts,
                                            std::vector<Value> capacities);
    static Valuation explicit_table(std::size_t item_count, std::vector<Value> table);

    Valuation(const Valuation& other);
    Valuation& operator=(const Valuation& other);
    Valuation(Valuation&& other) noexcept;
    Valuation& operator=(Valuation&& other) noexcept;
    ~Valuation() = default;

    ValuationKind kind() const noexcept;
    std::size_t item_count() const noexcept { return item_count_; }
    const ValuationParams& params() const noexcept { return params_; }

    /// v(subset). Throws InputError if the subset leaves the ground set.
    Value value(const ItemSet& subset) const;
    Value operator()(const ItemSet& subset) const { return value(subset); }

    /// Per-item values of an additive valuation; empty for other kinds.
    std::span<const Value> additive_values() const noexcept;

    /// Sign structure of x's marginals over all subsets, read off the
    /// parameters. Does not count as oracle calls.
    MarginalSigns marginal_signs(Item x) const;

    std::uint64_t oracle_calls() const noexcept { return calls_.load(std::memory_order_relaxed); }
    void reset_oracle_calls() const noexcept { calls_.store(0, std::memory_order_relaxed); }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.item_count_ == b.item_count_ && a.params_ == b.params_;
    }

private:
    Valuation(std::size_t item_count, ValuationParams params);
    Value evaluate(const ItemSet& subset) const;

    std::size_t item_count_ = 0;
    ValuationParams params_;
    std::vector<std::int32_t> part_of_;  // partition matroid only
    mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace eqx
