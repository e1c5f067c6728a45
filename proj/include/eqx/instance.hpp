#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqx/types.hpp"
#include "eqx/valuation.hpp"

namespace eqx {

/// A fair division instance: n agents, m items, one valuation per agent.
class Instance {
public:
    /// Names may be empty, in which case items are named x1..xm.
    Instance(std::size_t item_count, std::vector<Valuation> valuations,
             std::vector<std::string> item_names = {});

    /// One additive valuation per row.
    static Instance additive(const std::vector<std::vector<Value>>& rows,
                             std::vector<std::string> item_names = {});

    std::size_t agent_count() const noexcept { return valuations_.size(); }
    std::size_t item_count() const noexcept { return item_count_; }
    ItemSet all_items() const { return ItemSet::range(item_count_); }

    const Valuation& valuation(Agent i) const { return valuations_.at(i); }
    std::span<const Valuation> valuations() const noexcept { return valuations_; }
    const std::vector<std::string>& item_names() const noexcept { return item_names_; }

    Value value(Agent i, const ItemSet& subset) const { return valuations_.at(i).value(subset); }

    bool all_additive() const noexcept;

    /// Total oracle calls across all agents.
    std::uint64_t oracle_calls() const noexcept;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::size_t item_count_;
    std::vector<Valuation> valuations_;
    std::vector<std::string> item_names_;
};

/// Partition of items into agent bundles plus a pool of unassigned items.
/// Every item is in exactly one of these sets at all times.
class Allocation {
public:
    /// n empty bundles, all m items unassigned.
    Allocation(std::size_t agent_count, std::size_t item_count);

    /// Bundles as given, remaining items unassigned. Throws on overlap.
    static Allocation from_bundles(std::size_t item_count, std::vector<ItemSet> bundles);

    /// Bundles and pool must partition {0, ..., k-1} for some k.
    static Allocation from_parts(std::vector<ItemSet> bundles, ItemSet unassigned);

    std::size_t agent_count() const noexcept { return bundles_.size(); }
    std::size_t item_count() const noexcept { return item_count_; }
    const ItemSet& bundle(Agent i) const { return bundles_.at(i); }
    std::span<const ItemSet> bundles() const noexcept { return bundles_; }
    const ItemSet& unassigned() const noexcept { return unassigned_; }
    bool complete() const noexcept { return unassigned_.empty(); }

    std::optional<Agent> owner(Item x) const;

    /// Moves x from the pool to agent i.
    void assign(Item x, Agent i);
    /// Moves x from its owner back to the pool.
    void release(Item x);
    /// Moves x (wherever it is) to agent i.
    void transfer(Item x, Agent i);

    friend bool operator==(const Allocation&, const Allocation&) = default;

private:
    std::size_t item_count_;
    std::vector<ItemSet> bundles_;
    ItemSet unassigned_;
};

/// Throws InputError when the allocation's agent or item count does not
/// match the instance.
void require_compatible(const Instance& instance, const Allocation& allocation);

/// Own-bundle values v_i(A_i).
std::vector<Value> bundle_values(const Instance& instance, const Allocation& allocation);

enum class ItemRole { good, chore, mixed };

std::string_view to_string(ItemRole role);

/// Per-item role across all agents.
///  good:  no agent ever has a negative marginal for it (all-zero items too)
///  chore: no agent has a positive marginal and some agent has a negative one
///  mixed: otherwise
struct ItemClassification {
    std::vector<ItemRole> roles;
    /// No agent can have a positive marginal.
    std::vector<bool> nonpositive;
    bool objective = true;

    ItemSet goods() const;
    ItemSet chores() const;
    std::size_t count(ItemRole role) const;
};

ItemClassification classify_items(const Instance& instance);

/// Role of item x for its owner holding `bundle`. Objective items keep
/// their instance-wide role; a mixed item is a good for the owner when
/// v(bundle) >= v(bundle \ x).
ItemRole role_for_owner(const Instance& instance, const ItemClassification& cls, Agent owner,
                        Item x, const ItemSet& bundle);

}  // namespace eqx
