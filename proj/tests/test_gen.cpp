#include <doctest.h>

#include "eqx/dp.hpp"
#include "eqx/gen.hpp"
#include "eqx/io.hpp"
#include "eqx/oracle.hpp"
#include "support.hpp"

using namespace eqx;

TEST_CASE("splitmix64 reference outputs") {
    // First outputs for seed 0 of the published reference implementation.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("uniform draws stay in range and hit both ends") {
    SplitMix64 rng(42);
    bool lo = false, hi = false;
    for (int k = 0; k < 2000; ++k) {
        const Value v = rng.uniform(-3, 3);
        REQUIRE(v >= -3);
        REQUIRE(v <= 3);
        lo |= v == -3;
        hi |= v == 3;
    }
    CHECK(lo);
    CHECK(hi);
    CHECK(rng.uniform(5, 5) == 5);
    CHECK_THROWS_AS(rng.uniform(2, 1), InputError);
}

TEST_CASE("same seed gives the same instance") {
    for (auto kind : {ValuationKind::additive, ValuationKind::budget_additive, ValuationKind::partition_matroid_rank,
                      ValuationKind::explicit_table}) {
        RandomParams p;
        p.agents = 3;
        p.items = 5;
        p.kind = kind;
        CHECK(save_instance(gen_random(p, 9)) == save_instance(gen_random(p, 9)));
        CHECK(save_instance(gen_random(p, 9)) != save_instance(gen_random(p, 10)));
    }
}

TEST_CASE("classes produce the advertised signs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomParams p;
        p.agents = 3;
        p.items = 6;
        p.kind = static_cast<ValuationKind>(seed % 4);
        const auto goods = classify_items(gen_random(p, seed));
        REQUIRE(goods.count(ItemRole::good) == 6);

        p.cls = InstanceClass::monotone_chores;
        p.kind = seed % 2 ? ValuationKind::additive : ValuationKind::explicit_table;
        p.min_value = 1;
        const auto chores = classify_items(gen_random(p, seed));
        REQUIRE(chores.count(ItemRole::chore) == 6);

        p.cls = InstanceClass::objective_mixed;
        p.kind = ValuationKind::additive;
        REQUIRE(classify_items(gen_random(p, seed)).objective);
    }
}

TEST_CASE("explicit tables are monotone") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        RandomParams p;
        p.agents = 1;
        p.items = 1 + seed % 6;
        p.kind = ValuationKind::explicit_table;
        const auto inst = gen_random(p, seed);
        std::vector<Value> table(std::size_t{1} << p.items);
        for (std::size_t s = 0; s < table.size(); ++s) table[s] = inst.valuation(0).value(ItemSet::from_mask(s));
        REQUIRE(testing::is_monotone_table(table, p.items));
    }
}

TEST_CASE("subjective class can produce mixed items") {
    RandomParams p;
    p.agents = 2;
    p.items = 8;
    p.min_value = 1;
    p.cls = InstanceClass::subjective;
    bool mixed = false;
    for (std::uint64_t seed = 0; seed < 20 && !mixed; ++seed) mixed = !classify_items(gen_random(p, seed)).objective;
    CHECK(mixed);
}

TEST_CASE("parameter validation") {
    RandomParams p;
    p.agents = 0;
    CHECK_THROWS_AS(gen_random(p, 0), InputError);
    p.agents = 2;
    p.min_value = 5;
    p.max_value = 4;
    CHECK_THROWS_AS(gen_random(p, 0), InputError);
    p.min_value = 0;
    p.cls = InstanceClass::subjective;
    p.kind = ValuationKind::budget_additive;
    CHECK_THROWS_AS(gen_random(p, 0), InputError);
    p.cls = InstanceClass::monotone_chores;
    p.kind = ValuationKind::partition_matroid_rank;
    CHECK_THROWS_AS(gen_random(p, 0), InputError);
    CHECK(to_string(parse_instance_class("objective_mixed")) == "objective_mixed");
    CHECK_THROWS_AS(parse_instance_class("lukewarm"), InputError);
}

TEST_CASE("partition reduction layout") {
    const auto inst = gen_partition_reduction({3, 5});
    CHECK(inst.agent_count() == 2);
    CHECK(inst.item_names() == std::vector<std::string>{"x1", "x2", "g1", "g2"});
    CHECK(testing::rows_of(inst) == std::vector<std::vector<Value>>{{1, -1, 6, 10}, {-1, 1, 6, 10}});
    CHECK_THROWS_AS(gen_partition_reduction({1, 0}), InputError);
}

TEST_CASE("partition reduction existence matches subset sum") {
    testing::Rng rng(55);
    for (int t = 0; t < 200; ++t) {
        const auto size = static_cast<std::size_t>(testing::draw(rng, 1, 6));
        std::vector<Value> a(size);
        for (auto& x : a) x = testing::draw(rng, 1, 8);
        const auto inst = gen_partition_reduction(a);
        const bool expected = testing::has_equal_bipartition(a);
        REQUIRE(!brute_force_eqx(inst, SearchMode::any).empty() == expected);
        REQUIRE(dp_exists(inst).exists == expected);
    }
}

TEST_CASE("small partition cases") {
    CHECK_FALSE(dp_exists(gen_partition_reduction({1, 1, 1})).exists);
    CHECK(dp_exists(gen_partition_reduction({})).exists);
    CHECK(dp_exists(gen_partition_reduction({2, 2})).exists);
}

TEST_CASE("3-partition reduction with one triple") {
    const auto inst = gen_3partition_reduction({4, 4, 4}, 12);
    CHECK(inst.agent_count() == 2);
    CHECK(inst.item_count() == 5);
    const Value d = default_delta(1, 12);
    CHECK(d == 2400);
    CHECK(testing::rows_of(inst) ==
          std::vector<std::vector<Value>>{{4, 4, 4, d / 10, -d / 10}, {-d, -d, -d, 12, 1}});
    CHECK_FALSE(classify_items(inst).objective);
    CHECK_FALSE(brute_force_eqx(inst, SearchMode::any).empty());
}

TEST_CASE("every valid single triple admits an EQx allocation") {
    for (Value target = 5; target <= 16; ++target)
        for (Value a = 1; a < target; ++a)
            for (Value b = a; b < target; ++b) {
                const Value c = target - a - b;
                if (c < b) continue;
                if (4 * a <= target || 2 * c >= target) continue;
                const auto inst = gen_3partition_reduction({a, b, c}, target);
                REQUIRE_FALSE(brute_force_eqx(inst, SearchMode::any).empty());
            }
}

TEST_CASE("3-partition validation") {
    CHECK_THROWS_AS(gen_3partition_reduction({4, 4, 5}, 12), InputError);
    CHECK_THROWS_AS(gen_3partition_reduction({4, 4}, 12), InputError);
    CHECK_THROWS_AS(gen_3partition_reduction({}, 12), InputError);
    CHECK_THROWS_AS(gen_3partition_reduction({2, 5, 5}, 12), InputError);  // 2 <= T/4
    CHECK_THROWS_AS(gen_3partition_reduction({4, 4, 4}, 12, 125), InputError);
    CHECK_THROWS_AS(gen_3partition_reduction({4, 4, 4}, 12, 120), InputError);
    CHECK_NOTHROW(gen_3partition_reduction({4, 4, 4}, 12, 130));
}

TEST_CASE("canonical instances") {
    CHECK(testing::rows_of(canonical("table2")) == std::vector<std::vector<Value>>{{1, -1, 100}, {-1, 1, 100}});
    const auto t4 = canonical("table4");
    CHECK(testing::rows_of(t4) == std::vector<std::vector<Value>>{{10, 1, -1}, {1, 100, -1000}});
    CHECK(t4.item_names() == std::vector<std::string>{"g1", "g2", "c"});
    CHECK_THROWS_AS(canonical("table9"), InputError);
}
