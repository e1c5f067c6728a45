#include <doctest.h>

#include <cmath>

#include "eqx/dp.hpp"
#include "eqx/gen.hpp"
#include "eqx/oracle.hpp"
#include "eqx/verify.hpp"
#include "support.hpp"

using namespace eqx;

TEST_CASE("table2 admits no EQx allocation") {
    const auto r = dp_exists(canonical("table2"), true);
    CHECK_FALSE(r.exists);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("partition reduction of 1,1,2 has an equitable witness") {
    const auto inst = gen_partition_reduction({1, 1, 2});
    const auto r = dp_exists(inst, true);
    REQUIRE(r.exists);
    REQUIRE(r.witness.has_value());
    CHECK(check_eqx(inst, *r.witness).is_eqx);
    CHECK(r.witness->complete());
    // Any EQx allocation here is equitable and splits the doubled goods 4 / 4.
    CHECK(check_equitable(inst, *r.witness));
    auto goods_value = [&](Agent i) {
        Value t = 0;
        for (Item x : r.witness->bundle(i).items())
            if (x >= 2) t += inst.valuation(i).additive_values()[x];
        return t;
    };
    CHECK(goods_value(0) == 4);
    CHECK(goods_value(1) == 4);
}

TEST_CASE("no items: the empty allocation is EQx") {
    const auto inst = Instance(0, {Valuation::additive({}), Valuation::additive({})});
    const auto r = dp_exists(inst, true);
    CHECK(r.exists);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->agent_count() == 2);
}

TEST_CASE("agent cap and additivity are enforced") {
    CHECK_THROWS_AS(dp_exists(Instance::additive({{1}, {1}, {1}, {1}, {1}})), ContractError);
    CHECK_NOTHROW(dp_exists(Instance::additive({{1}, {1}, {1}, {1}})));
    CHECK_THROWS_AS(dp_exists(Instance(1, {Valuation::budget_additive({1}, 1), Valuation::additive({1})})),
                    ContractError);
}

TEST_CASE("state budget") {
    testing::Rng rng(3);
    std::vector<std::vector<Value>> rows(2, std::vector<Value>(8));
    for (auto& r : rows)
        for (auto& v : r) v = testing::draw(rng, -50, 50);
    CHECK_THROWS_AS(dp_exists(Instance::additive(rows), false, 10), BudgetExceeded);
}

TEST_CASE("zero-valued items for the owner still count as goods or chores") {
    // Agent 0 holds a zero good and the positive good; removing the zero
    // good leaves 5 > 0, a violation that the state must remember.
    const auto inst = Instance::additive({{5, 0}, {-1, -1}});
    const bool brute = !brute_force_eqx(inst, SearchMode::any).empty();
    CHECK(dp_exists(inst).exists == brute);
    // Objective chore that one agent does not mind.
    const auto inst2 = Instance::additive({{0, 3}, {-4, 1}});
    CHECK(dp_exists(inst2).exists == !brute_force_eqx(inst2, SearchMode::any).empty());
}

TEST_CASE("dynamic program agrees with brute force on random subjective instances") {
    testing::Rng rng(99);
    for (int t = 0; t < 1000; ++t) {
        const auto n = static_cast<std::size_t>(testing::draw(rng, 1, 3));
        const auto m = static_cast<std::size_t>(testing::draw(rng, 0, 6));
        const Value h = testing::draw(rng, 1, 5);
        std::vector<std::vector<Value>> rows(n, std::vector<Value>(m));
        for (auto& r : rows)
            for (auto& v : r) v = testing::draw(rng, -h, h);
        const auto inst = Instance::additive(rows);
        const auto dp = dp_exists(inst, true);
        const bool brute = !brute_force_eqx(inst, SearchMode::any).empty();
        REQUIRE(dp.exists == brute);
        if (dp.exists) {
            REQUIRE(dp.witness.has_value());
            REQUIRE(check_eqx(inst, *dp.witness).is_eqx);
        }
        // Sanity bound on distinct states per layer.
        const double c = static_cast<double>(n);
        const double H = static_cast<double>(dp.max_abs_item_value);
        const double bound = std::pow(2.0 * static_cast<double>(m) * H + 1.0, c) * std::pow(H + 2.0, 2.0 * c);
        REQUIRE(static_cast<double>(dp.peak_states) <= bound);
    }
}

TEST_CASE("four agents stay in agreement with brute force") {
    testing::Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        const auto m = static_cast<std::size_t>(testing::draw(rng, 0, 5));
        std::vector<std::vector<Value>> rows(4, std::vector<Value>(m));
        for (auto& r : rows)
            for (auto& v : r) v = testing::draw(rng, -3, 3);
        const auto inst = Instance::additive(rows);
        REQUIRE(dp_exists(inst).exists == !brute_force_eqx(inst, SearchMode::any).empty());
    }
}
