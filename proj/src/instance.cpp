#include "eqx/instance.hpp"

#include <string>

namespace eqx {

Instance::Instance(std::size_t item_count, std::vector<Valuation> valuations,
                   std::vector<std::string> item_names)
    : item_count_(item_count), valuations_(std::move(valuations)), item_names_(std::move(item_names)) {
    if (valuations_.empty()) throw InputError("an instance needs at least one agent");
    if (item_count_ > kMaxItems)
        throw InputError("item count " + std::to_string(item_count_) + " exceeds capacity");
    for (std::size_t i = 0; i < valuations_.size(); ++i)
        if (valuations_[i].item_count() != item_count_)
            throw InputError("valuation of agent " + std::to_string(i) + " covers " +
                             std::to_string(valuations_[i].item_count()) + " items, expected " +
                             std::to_string(item_count_));
    if (item_names_.empty()) {
        for (std::size_t x = 0; x < item_count_; ++x) item_names_.push_back("x" + std::to_string(x + 1));
    } else if (item_names_.size() != item_count_) {
        throw InputError("item name list has the wrong length");
    }
}

Instance Instance::additive(const std::vector<std::vector<Value>>& rows, std::vector<std::string> item_names) {
    if (rows.empty()) throw InputError("an instance needs at least one agent");
    const auto m = rows.front().size();
    std::vector<Valuation> vals;
    vals.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != m) throw InputError("ragged additive value matrix");
        vals.push_back(Valuation::additive(row));
    }
    return Instance(m, std::move(vals), std::move(item_names));
}

bool Instance::all_additive() const noexcept {
    for (const auto& v : valuations_)
        if (v.kind() != ValuationKind::additive) return false;
    return true;
}

std::uint64_t Instance::oracle_calls() const noexcept {
    std::uint64_t total = 0;
    for (const auto& v : valuations_) total += v.oracle_calls();
    return total;
}

Allocation::Allocation(std::size_t agent_count, std::size_t item_count)
    : item_count_(item_count), bundles_(agent_count), unassigned_(ItemSet::range(item_count)) {
    if (agent_count == 0) throw InputError("an allocation needs at least one agent");
}

Allocation Allocation::from_bundles(std::size_t item_count, std::vector<ItemSet> bundles) {
    Allocation a(bundles.size(), item_count);
    for (std::size_t i = 0; i < bundles.size(); ++i)
        bundles[i].for_each([&](Item x) {
            if (x >= item_count) throw InputError("item " + std::to_string(x) + " out of range");
            if (!a.unassigned_.contains(x))
                throw InputError("item " + std::to_string(x) + " assigned to two bundles");
            a.assign(x, i);
        });
    return a;
}

Allocation Allocation::from_parts(std::vector<ItemSet> bundles, ItemSet unassigned) {
    ItemSet seen = unassigned;
    for (const auto& b : bundles) {
        if (b.intersects(seen)) throw InputError("an item appears in more than one place");
        seen |= b;
    }
    const auto m = seen.size();
    if (seen != ItemSet::range(m)) throw InputError("bundles and pool must cover items 0..m-1 exactly");
    Allocation a(bundles.size(), m);
    a.bundles_ = std::move(bundles);
    a.unassigned_ = unassigned;
    return a;
}

std::optional<Agent> Allocation::owner(Item x) const {
    for (std::size_t i = 0; i < bundles_.size(); ++i)
        if (bundles_[i].contains(x)) return i;
    return std::nullopt;
}

void Allocation::assign(Item x, Agent i) {
    if (!unassigned_.contains(x)) throw InputError("item " + std::to_string(x) + " is not unassigned");
    bundles_.at(i).insert(x);
    unassigned_.erase(x);
}

void Allocation::release(Item x) {
    const auto o = owner(x);
    if (!o) throw InputError("item " + std::to_string(x) + " is not assigned");
    bundles_[*o].erase(x);
    unassigned_.insert(x);
}

void Allocation::transfer(Item x, Agent i) {
    if (x >= item_count_) throw InputError("item " + std::to_string(x) + " out of range");
    if (i >= bundles_.size()) throw InputError("agent " + std::to_string(i) + " out of range");
    if (const auto o = owner(x))
        bundles_[*o].erase(x);
    else
        unassigned_.erase(x);
    bundles_[i].insert(x);
}

void require_compatible(const Instance& instance, const Allocation& allocation) {
    if (allocation.agent_count() != instance.agent_count())
        throw InputError("allocation has " + std::to_string(allocation.agent_count()) +
                         " bundles but the instance has " + std::to_string(instance.agent_count()) + " agents");
    if (allocation.item_count() != instance.item_count())
        throw InputError("allocation covers " + std::to_string(allocation.item_count()) +
                         " items but the instance has " + std::to_string(instance.item_count()));
}

std::vector<Value> bundle_values(const Instance& instance, const Allocation& allocation) {
    require_compatible(instance, allocation);
    std::vector<Value> out(instance.agent_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = instance.value(i, allocation.bundle(i));
    return out;
}

std::string_view to_string(ItemRole role) {
    switch (role) {
        case ItemRole::good: return "good";
        case ItemRole::chore: return "chore";
        case ItemRole::mixed: return "mixed";
    }
    return "?";
}

ItemSet ItemClassification::goods() const {
    ItemSet s;
    for (std::size_t x = 0; x < roles.size(); ++x)
        if (roles[x] == ItemRole::good) s.insert(x);
    return s;
}

ItemSet ItemClassification::chores() const {
    ItemSet s;
    for (std::size_t x = 0; x < roles.size(); ++x)
        if (roles[x] == ItemRole::chore) s.insert(x);
    return s;
}

std::size_t ItemClassification::count(ItemRole role) const {
    std::size_t n = 0;
    for (auto r : roles) n += r == role ? 1 : 0;
    return n;
}

ItemClassification classify_items(const Instance& instance) {
    const auto m = instance.item_count();
    ItemClassification cls;
    cls.roles.resize(m);
    cls.nonpositive.resize(m);
    for (Item x = 0; x < m; ++x) {
        bool any_positive = false;
        bool any_negative = false;
        for (const auto& v : instance.valuations()) {
            const auto s = v.marginal_signs(x);
            any_positive = any_positive || s.has_positive;
            any_negative = any_negative || s.has_negative;
        }
        cls.nonpositive[x] = !any_positive;
        if (!any_negative)
            cls.roles[x] = ItemRole::good;
        else if (!any_positive)
            cls.roles[x] = ItemRole::chore;
        else
            cls.roles[x] = ItemRole::mixed;
        if (cls.roles[x] == ItemRole::mixed) cls.objective = false;
    }
    return cls;
}

ItemRole role_for_owner(const Instance& instance, const ItemClassification& cls, Agent owner, Item x,
                        const ItemSet& bundle) {
    const auto role = cls.roles.at(x);
    if (role != ItemRole::mixed) return role;
    const auto& v = instance.valuation(owner);
    if (const auto vals = v.additive_values(); !vals.empty())
        return vals[x] >= 0 ? ItemRole::good : ItemRole::chore;
    return v.value(bundle) >= v.value(bundle.without(x)) ? ItemRole::good : ItemRole::chore;
}

}  // namespace eqx
