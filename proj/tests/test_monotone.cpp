#include <doctest.h>

#include "eqx/gen.hpp"
#include "eqx/monotone.hpp"
#include "eqx/verify.hpp"
#include "support.hpp"

using namespace eqx;

namespace {

SolveOptions checked() {
    SolveOptions o;
    o.check_invariants = true;
    return o;
}

}  // namespace

TEST_CASE("identical goods 3,2,1 split as {3} and {2,1}") {
    const auto inst = Instance::additive({{3, 2, 1}, {3, 2, 1}});
    const auto r = add_and_fix(inst, Direction::goods, checked());
    CHECK(r.allocation == Allocation::from_bundles(3, {{0}, {1, 2}}));
    CHECK(bundle_values(inst, r.allocation) == std::vector<Value>{3, 3});
    CHECK(check_eqx(inst, r.allocation).is_eqx);
    CHECK(r.stats.outer_iterations == 2);
    CHECK(r.stats.add_steps == 3);
    CHECK(r.stats.fix_steps == 0);
    CHECK(r.stats.v_max == 6);
}

TEST_CASE("no items means no iterations") {
    const auto inst = Instance(0, {Valuation::additive({}), Valuation::additive({})});
    const auto r = add_and_fix(inst, Direction::goods);
    CHECK(r.stats.outer_iterations == 0);
    CHECK(r.allocation.complete());
    CHECK(r.allocation.bundle(0).empty());
    CHECK(r.allocation.bundle(1).empty());
}

TEST_CASE("one agent takes everything") {
    const auto goods = Instance::additive({{4, 0, 7}});
    CHECK(add_and_fix(goods, Direction::goods).allocation.bundle(0) == ItemSet{0, 1, 2});
    const auto chores = Instance::additive({{-4, 0, -7}});
    CHECK(add_and_fix(chores, Direction::chores).allocation.bundle(0) == ItemSet{0, 1, 2});
}

TEST_CASE("budget additive pairs never run the fix phase") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        RandomParams p;
        p.agents = 2;
        p.items = 1 + seed % 8;
        p.kind = ValuationKind::budget_additive;
        const auto inst = gen_random(p, seed);
        const auto r = add_and_fix(inst, Direction::goods, checked());
        REQUIRE(check_eqx(inst, r.allocation).is_eqx);
        REQUIRE(r.stats.fix_steps == 0);
    }
}

TEST_CASE("chores direction mirrors goods") {
    const auto inst = Instance::additive({{-3, -2, -1}, {-3, -2, -1}});
    const auto r = add_and_fix(inst, Direction::chores, checked());
    CHECK(check_eqx(inst, r.allocation).is_eqx);
    CHECK(r.allocation.complete());
    CHECK(bundle_values(inst, r.allocation) == std::vector<Value>{-3, -3});
}

TEST_CASE("chores direction places zero items without breaking EQx") {
    // Item 1 is worth nothing to anyone, so it is a good by classification.
    const auto inst = Instance::additive({{-5, 0, -1}, {-2, 0, -4}});
    const auto r = add_and_fix(inst, Direction::chores, checked());
    CHECK(r.allocation.complete());
    CHECK(check_eqx(inst, r.allocation).is_eqx);
}

TEST_CASE("wrong direction is a contract error") {
    const auto t4 = canonical("table4");
    CHECK_THROWS_AS(add_and_fix(t4, Direction::goods), ContractError);
    CHECK_THROWS_AS(add_and_fix(t4, Direction::chores), ContractError);
    CHECK_THROWS_AS(add_and_fix(Instance::additive({{1, 2}, {3, 4}}), Direction::chores), ContractError);
    const auto bumpy = Instance(2, {Valuation::explicit_table(2, {0, 3, 3, 1}), Valuation::additive({1, 1})});
    CHECK_THROWS_AS(add_and_fix(bumpy, Direction::goods), ContractError);
}

TEST_CASE("step budget stops the run") {
    const auto inst = Instance::additive({{3, 2, 1, 5}, {3, 2, 1, 5}});
    SolveOptions o;
    o.step_budget = 1;
    const auto r = add_and_fix(inst, Direction::goods, o);
    CHECK(r.stats.terminated_by == Termination::budget_exceeded);
    CHECK_FALSE(r.allocation.complete());
}

TEST_CASE("half-approximation on goods 8 and 1") {
    const auto inst = Instance::additive({{8, 1}, {8, 1}});
    const auto r = add_and_fix_approx(inst, Epsilon(1, 2), Direction::goods, checked());
    CHECK(check_eps_eqx(inst, r.allocation, Epsilon(1, 2), Direction::goods).is_eqx);
    CHECK(r.allocation.complete());
}

TEST_CASE("eps = 0 reproduces the exact solver") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomParams p;
        p.agents = 2 + seed % 3;
        p.items = seed % 9;
        p.kind = static_cast<ValuationKind>(seed % 4);
        const auto inst = gen_random(p, seed);
        const auto exact = add_and_fix(inst, Direction::goods);
        const auto approx = add_and_fix_approx(inst, Epsilon{}, Direction::goods);
        REQUIRE(exact.allocation == approx.allocation);
        REQUIRE(exact.stats == approx.stats);
    }
}

TEST_CASE("approximate runs on random monotone instances pass the approximate check") {
    const Epsilon eps(1, 3);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        RandomParams p;
        p.agents = 2 + seed % 3;
        p.items = seed % 9;
        p.kind = static_cast<ValuationKind>(seed % 4);
        const bool chores = seed % 5 == 0;
        if (chores) {
            p.cls = InstanceClass::monotone_chores;
            p.kind = seed % 2 ? ValuationKind::additive : ValuationKind::explicit_table;
        }
        const auto dir = chores ? Direction::chores : Direction::goods;
        const auto inst = gen_random(p, seed);
        const auto r = add_and_fix_approx(inst, eps, dir, checked());
        REQUIRE(r.allocation.complete());
        REQUIRE(check_eps_eqx(inst, r.allocation, eps, dir).is_eqx);
    }
}

TEST_CASE("iteration bounds") {
    const auto inst = Instance::additive({{8, 0}, {1, 1}});
    CHECK(exact_outer_iteration_bound(inst) == 2 * 8 + 1);
    // log_2 8 = 3, log_2 2 = 1, plus n + 1.
    CHECK(approx_outer_iteration_bound(inst, Epsilon(1, 2), Direction::goods) == 3 + 1 + 3);
    // (3/2)^5 = 7.59 < 8 <= (3/2)^6 = 11.39; (3/2)^1 < 2 <= (3/2)^2.
    const auto chores = Instance::additive({{-8, 0}, {-1, -1}});
    CHECK(approx_outer_iteration_bound(chores, Epsilon(1, 2), Direction::chores) == 6 + 2 + 3);
    CHECK(approx_outer_iteration_bound(inst, Epsilon{}, Direction::goods) == exact_outer_iteration_bound(inst));
}

TEST_CASE("the fix phase does run on some non weakly well-layered tables") {
    // Explicit monotone tables are not weakly well-layered in general; the
    // output must still be EQx whenever removals happen.
    std::size_t with_fixes = 0;
    for (std::uint64_t seed = 0; seed < 3000 && with_fixes == 0; ++seed) {
        RandomParams p;
        p.agents = 2 + seed % 2;
        p.items = 3 + seed % 4;
        p.kind = ValuationKind::explicit_table;
        const auto inst = gen_random(p, seed);
        const auto r = add_and_fix(inst, Direction::goods, checked());
        REQUIRE(check_eqx(inst, r.allocation).is_eqx);
        if (r.stats.fix_steps > 0) ++with_fixes;
    }
    CHECK(with_fixes > 0);
}

TEST_CASE("oracle calls are reported") {
    const auto inst = Instance::additive({{3, 2, 1}, {1, 2, 3}});
    const auto before = inst.oracle_calls();
    const auto r = add_and_fix(inst, Direction::goods);
    CHECK(r.stats.oracle_calls == inst.oracle_calls() - before);
    CHECK(r.stats.oracle_calls > 0);
    // Invariant checks do not inflate the count.
    const auto r2 = add_and_fix(inst, Direction::goods, checked());
    CHECK(r2.stats.oracle_calls == r.stats.oracle_calls);
    CHECK(r2.stats.interim_checks > 0);
}
