#include "eqx/verify.hpp"

#include <string>

namespace eqx {

namespace {

// Violation iff lhs * left > rhs * right (goods) or lhs * left < rhs * right (chores).
struct Scale {
    Value left = 1;
    Value right = 1;
};

ViolationReport scan(const Instance& instance, const Allocation& allocation, const ItemClassification& cls,
                     Scale goods_scale, Scale chores_scale) {
    require_compatible(instance, allocation);
    const auto n = instance.agent_count();
    const auto values = bundle_values(instance, allocation);

    ViolationReport report;
    if (n < 2) return report;

    for (Agent owner = 0; owner < n; ++owner) {
        // Extremal other agent, lowest index on ties.
        Agent poorest = owner == 0 ? 1 : 0;
        Agent richest = poorest;
        for (Agent k = 0; k < n; ++k) {
            if (k == owner) continue;
            if (values[k] < values[poorest]) poorest = k;
            if (values[k] > values[richest]) richest = k;
        }

        const auto& bundle = allocation.bundle(owner);
        bundle.for_each([&](Item x) {
            const auto role = role_for_owner(instance, cls, owner, x, bundle);
            const Value lhs = instance.value(owner, bundle.without(x));
            if (role == ItemRole::good) {
                const Value rhs = values[poorest];
                if (checked_mul(lhs, goods_scale.left) > checked_mul(rhs, goods_scale.right))
                    report.goods_violations.push_back({owner, x, poorest, lhs, rhs});
            } else {
                const Value rhs = values[richest];
                if (checked_mul(lhs, chores_scale.left) < checked_mul(rhs, chores_scale.right))
                    report.chores_violations.push_back({owner, x, richest, lhs, rhs});
            }
        });
    }
    report.is_eqx = report.goods_violations.empty() && report.chores_violations.empty();
    return report;
}

}  // namespace

ViolationReport check_eqx(const Instance& instance, const Allocation& allocation) {
    return check_eqx(instance, allocation, classify_items(instance));
}

ViolationReport check_eqx(const Instance& instance, const Allocation& allocation, const ItemClassification& cls) {
    return scan(instance, allocation, cls, {}, {});
}

ViolationReport check_eps_eqx(const Instance& instance, const Allocation& allocation, Epsilon eps,
                              Direction direction) {
    return check_eps_eqx(instance, allocation, eps, direction, classify_items(instance));
}

ViolationReport check_eps_eqx(const Instance& instance, const Allocation& allocation, Epsilon eps,
                              Direction direction, const ItemClassification& cls) {
    if (eps.is_zero()) return check_eqx(instance, allocation, cls);
    for (Item x = 0; x < cls.roles.size(); ++x) {
        const bool ok = direction == Direction::goods ? cls.roles[x] == ItemRole::good : bool(cls.nonpositive[x]);
        if (!ok)
            throw ContractError("item " + std::to_string(x) + " is not a " +
                                (direction == Direction::goods ? "good" : "chore") +
                                "; the approximate check needs a monotone instance");
    }
    const Value a = eps.num();
    const Value b = eps.den();
    if (direction == Direction::goods) return scan(instance, allocation, cls, {b - a, b}, {});
    return scan(instance, allocation, cls, {}, {b, checked_add(b, a)});
}

bool check_equitable(const Instance& instance, const Allocation& allocation) {
    const auto values = bundle_values(instance, allocation);
    for (Value v : values)
        if (v != values.front()) return false;
    return true;
}

ViolationReport check_efx(const Instance& instance, const Allocation& allocation) {
    require_compatible(instance, allocation);
    const auto n = instance.agent_count();
    const auto cls = classify_items(instance);
    ViolationReport report;
    if (n < 2) return report;

    // own[i] = v_i(A_i)
    const auto own = bundle_values(instance, allocation);

    for (Agent owner = 0; owner < n; ++owner) {
        const auto& bundle = allocation.bundle(owner);
        bundle.for_each([&](Item x) {
            // Goods side: another agent w looks at owner's bundle without x.
            std::optional<Violation> worst;
            Value worst_gap = 0;
            for (Agent w = 0; w < n; ++w) {
                if (w == owner) continue;
                if (role_for_owner(instance, cls, w, x, bundle) != ItemRole::good) continue;
                const Value lhs = instance.value(w, bundle.without(x));
                const Value gap = checked_sub(lhs, own[w]);
                if (gap > 0 && (!worst || gap > worst_gap)) {
                    worst = Violation{owner, x, w, lhs, own[w]};
                    worst_gap = gap;
                }
            }
            if (worst) report.goods_violations.push_back(*worst);

            // Chores side: owner compares its bundle without x to the others.
            if (role_for_owner(instance, cls, owner, x, bundle) == ItemRole::chore) {
                const Value lhs = instance.value(owner, bundle.without(x));
                std::optional<Violation> best;
                for (Agent w = 0; w < n; ++w) {
                    if (w == owner) continue;
                    const Value rhs = instance.value(owner, allocation.bundle(w));
                    if (lhs < rhs && (!best || rhs > best->rhs)) best = Violation{owner, x, w, lhs, rhs};
                }
                if (best) report.chores_violations.push_back(*best);
            }
        });
    }
    report.is_eqx = report.goods_violations.empty() && report.chores_violations.empty();
    return report;
}

}  // namespace eqx
