#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "eqx/instance.hpp"
#include "eqx/valuation.hpp"

namespace eqx {

/// SplitMix64 (Steele, Lea, Flood). Small, fast and fully specified, so
/// seeded instances come out the same on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] by rejection, no modulo bias.
    Value uniform(Value lo, Value hi);

    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

enum class InstanceClass { monotone_goods, monotone_chores, objective_mixed, subjective };

std::string_view to_string(InstanceClass c);
InstanceClass parse_instance_class(std::string_view text);

struct RandomParams {
    std::size_t agents = 2;
    std::size_t items = 4;
    /// Range of item magnitudes; the class decides signs.
    Value min_value = 0;
    Value max_value = 20;
    InstanceClass cls = InstanceClass::monotone_goods;
    ValuationKind kind = ValuationKind::additive;
};

/// Seeded random instance.
///  monotone_goods:  any kind. budget_additive draws a budget in [0, sum];
///                   partition_matroid_rank draws a random partition and
///                   capacities; explicit_table takes the running maximum
///                   over subsets of a random table so it is nondecreasing.
///  monotone_chores: additive or explicit_table, negated.
///  objective_mixed: additive; one sign per item shared by all agents.
///  subjective:      additive; independent sign per agent and item.
Instance gen_random(const RandomParams& params, std::uint64_t seed);

/// Two agents; x1 is worth +1 / -1, x2 is worth -1 / +1, and g_i is worth
/// 2 a_i to both. Admits EQx iff the multiset splits into equal halves.
Instance gen_partition_reduction(const std::vector<Value>& multiset);

/// 20 * 10nT, already a multiple of 10.
Value default_delta(std::size_t n, Value target);

/// n+1 agents over 3n+2 items. Agents 1..n value x_j at a_j, x_{3n+1} at
/// delta/10 and x_{3n+2} at -delta/10; agent n+1 values the x_j at -delta,
/// x_{3n+1} at T and x_{3n+2} at 1. Requires sum a = nT, T/4 < a_j < T/2,
/// delta a multiple of 10 and delta > 10nT.
Instance gen_3partition_reduction(const std::vector<Value>& multiset, Value target,
                                  std::optional<Value> delta = std::nullopt);

/// "table2" (no EQx allocation) or "table4" (leximin++ not EQx).
Instance canonical(std::string_view name);

}  // namespace eqx
