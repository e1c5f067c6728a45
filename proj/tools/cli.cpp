#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "eqx/dp.hpp"
#include "eqx/gen.hpp"
#include "eqx/io.hpp"
#include "eqx/monotone.hpp"
#include "eqx/nonmonotone.hpp"
#include "eqx/oracle.hpp"
#include "eqx/verify.hpp"

namespace eqx::cli {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size() || text.empty())
        throw InputError(std::string(what) + " must be a nonnegative integer, got '" + std::string(text) + "'");
    return v;
}

std::vector<Value> parse_list(const std::string& text) {
    std::vector<Value> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        Value v = 0;
        const auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc{} || p != piece.data() + piece.size() || piece.empty())
            throw InputError("bad integer '" + std::string(piece) + "' in list");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// --budget wins, then EQX_BUDGET, then the library default.
std::uint64_t enumeration_budget(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("EQX_BUDGET")) return parse_u64(env, "EQX_BUDGET");
    return kDefaultEnumerationBudget;
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << dump(doc);
    else
        write_file(path, dump(doc));
}

struct SolveArgs {
    std::string instance;
    std::string algorithm;
    std::string epsilon = "0";
    std::optional<std::string> direction;
    std::optional<std::uint64_t> budget;
    std::string out;
    bool seedless = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const Instance inst = parse_instance(read_file(a.instance));
    const Epsilon eps = Epsilon::parse(a.epsilon);
    SolveOptions opts;
    opts.check_invariants = true;
    if (a.budget) opts.step_budget = *a.budget;

    std::optional<SolveResult> res;
    ViolationReport verification;
    const Direction dir = parse_direction(a.direction.value_or("goods"));

    if (a.algorithm == "add-fix") {
        res = add_and_fix(inst, dir, opts);
    } else if (a.algorithm == "add-fix-approx") {
        res = add_and_fix_approx(inst, eps, dir, opts);
    } else if (a.algorithm == "two-way") {
        res = two_way_greedy(inst, opts);
    } else if (a.algorithm == "single-chore") {
        res = single_special_local_search(inst, SpecialItem::chore, opts);
    } else if (a.algorithm == "single-good") {
        res = single_special_local_search(inst, SpecialItem::good, opts);
    } else if (a.algorithm == "leximin") {
        const auto order = parse_order_direction(a.direction.value_or("chores"));
        const auto before = inst.oracle_calls();
        Allocation best = leximin_pp(inst, order, enumeration_budget(a.budget));
        res = SolveResult{std::move(best), {}};
        res->stats.oracle_calls = inst.oracle_calls() - before;
    } else {
        const auto before = inst.oracle_calls();
        auto found = brute_force_eqx(inst, SearchMode::any, enumeration_budget(a.budget));
        if (found.empty()) {
            json doc{{"algorithm", a.algorithm}, {"allocation", nullptr}, {"found", false}};
            emit(doc, a.out, out);
            err << "brute: no EQx allocation exists\n";
            return kNotSatisfied;
        }
        res = SolveResult{std::move(found.front()), {}};
        res->stats.oracle_calls = inst.oracle_calls() - before;
    }

    const bool approx = a.algorithm == "add-fix-approx";
    verification = approx ? check_eps_eqx(inst, res->allocation, eps, dir) : check_eqx(inst, res->allocation);

    json doc{{"algorithm", a.algorithm},
             {"allocation", allocation_to_json(res->allocation)},
             {"values", bundle_values(inst, res->allocation)},
             {"stats", stats_to_json(res->stats)},
             {"verification", report_to_json(verification)}};
    if (approx) doc["epsilon"] = eps.to_string();
    emit(doc, a.out, out);

    if (res->stats.terminated_by == Termination::budget_exceeded) {
        err << a.algorithm << ": step budget exhausted before finishing\n";
        return kBudget;
    }
    err << a.algorithm << ": " << (verification.is_eqx ? "allocation verified" : "allocation FAILS verification")
        << " (" << verification.goods_violations.size() << " goods / " << verification.chores_violations.size()
        << " chores violations)\n";
    return verification.is_eqx ? kOk : kNotSatisfied;
}

struct CheckArgs {
    std::string instance;
    std::string allocation;
    std::string epsilon = "0";
    std::string direction = "goods";
    std::string notion = "eqx";
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
    const Instance inst = parse_instance(read_file(a.instance));
    const Allocation alloc = parse_allocation(read_file(a.allocation));
    require_compatible(inst, alloc);

    bool holds = false;
    json doc;
    if (a.notion == "equitable") {
        holds = check_equitable(inst, alloc);
        doc = {{"is_equitable", holds}, {"values", bundle_values(inst, alloc)}};
    } else if (a.notion == "efx") {
        const auto report = check_efx(inst, alloc);
        holds = report.is_eqx;
        doc = report_to_json(report, "is_efx");
    } else {
        const Epsilon eps = Epsilon::parse(a.epsilon);
        const auto report = eps.is_zero() ? check_eqx(inst, alloc)
                                          : check_eps_eqx(inst, alloc, eps, parse_direction(a.direction));
        holds = report.is_eqx;
        doc = report_to_json(report);
        if (!eps.is_zero()) doc["epsilon"] = eps.to_string();
    }
    out << dump(doc);
    err << a.notion << ": " << (holds ? "holds" : "does not hold") << "\n";
    return holds ? kOk : kNotSatisfied;
}

struct ExistsArgs {
    std::string instance;
    std::string method = "dp";
    bool witness = false;
    std::optional<std::uint64_t> budget;
};

int cmd_exists(const ExistsArgs& a, std::ostream& out, std::ostream& err) {
    const Instance inst = parse_instance(read_file(a.instance));
    json doc;
    if (a.method == "dp") {
        const auto r = dp_exists(inst, a.witness, a.budget.value_or(kDefaultDpStateBudget));
        doc = dp_to_json(r);
    } else {
        const auto found = brute_force_eqx(inst, SearchMode::any, enumeration_budget(a.budget));
        doc = {{"exists", !found.empty()}};
        if (a.witness && !found.empty()) doc["witness"] = allocation_to_json(found.front());
    }
    doc["method"] = a.method;
    out << dump(doc);
    err << a.method << ": an EQx allocation " << (doc["exists"].get<bool>() ? "exists" : "does not exist") << "\n";
    return kOk;
}

struct GenArgs {
    std::string kind = "random";
    std::uint64_t seed = 0;
    std::size_t agents = 2;
    std::size_t items = 4;
    Value min_value = 0;
    Value max_value = 20;
    std::string cls = "monotone_goods";
    std::string valuation = "additive";
    std::string values;
    Value target = 0;
    std::optional<Value> delta;
    std::string name;
    std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    std::optional<Instance> inst;
    if (a.kind == "random") {
        RandomParams p;
        p.agents = a.agents;
        p.items = a.items;
        p.min_value = a.min_value;
        p.max_value = a.max_value;
        p.cls = parse_instance_class(a.cls);
        p.kind = parse_valuation_kind(a.valuation);
        inst = gen_random(p, a.seed);
    } else if (a.kind == "partition") {
        inst = gen_partition_reduction(parse_list(a.values));
    } else if (a.kind == "3partition") {
        inst = gen_3partition_reduction(parse_list(a.values), a.target, a.delta);
    } else {
        inst = canonical(a.name);
    }
    emit(instance_to_json(*inst), a.out, out);
    err << "gen: " << inst->agent_count() << " agents, " << inst->item_count() << " items\n";
    return kOk;
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, std::function<bool()>>> checks{
        {"table2 has no EQx allocation",
         [] {
             const auto t = canonical("table2");
             return brute_force_eqx(t, SearchMode::any).empty() && !dp_exists(t).exists;
         }},
        {"table4 leximin++ allocation is not EQx",
         [] {
             const auto t = canonical("table4");
             const auto a = leximin_pp(t, OrderDirection::chores_identical);
             return a == Allocation::from_bundles(3, {{0, 2}, {1}}) && !check_eqx(t, a).is_eqx;
         }},
        {"table4 single-chore search finds EQx",
         [] {
             const auto t = canonical("table4");
             return check_eqx(t, single_special_local_search(t, SpecialItem::chore).allocation).is_eqx;
         }},
        {"add-and-fix on random goods",
         [] {
             for (std::uint64_t seed = 0; seed < 50; ++seed) {
                 RandomParams p;
                 p.agents = 3;
                 p.items = 6;
                 const auto t = gen_random(p, seed);
                 if (!check_eqx(t, add_and_fix(t, Direction::goods).allocation).is_eqx) return false;
             }
             return true;
         }},
        {"partition reduction {1,1,2}", [] { return dp_exists(gen_partition_reduction({1, 1, 2})).exists; }},
    };

    json results = json::array();
    bool all = true;
    for (const auto& [name, fn] : checks) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            err << "  " << name << ": " << e.what() << "\n";
        }
        all = all && ok;
        err << (ok ? "PASS " : "FAIL ") << name << "\n";
        results.push_back({{"name", name}, {"passed", ok}});
    }
    out << dump({{"checks", results}, {"passed", all}});
    return all ? kOk : kNotSatisfied;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"EQx fair division: solve, check, decide existence, generate instances"};
    app.name("eqx");
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Compute an allocation and verify it");
    solve->add_option("instance", sa.instance, "Instance JSON file")->required();
    solve->add_option("--algorithm", sa.algorithm, "Solver")
        ->required()
        ->check(CLI::IsMember({"add-fix", "add-fix-approx", "two-way", "single-chore", "single-good", "leximin", "brute"}));
    solve->add_option("--epsilon", sa.epsilon, "Approximation a/b for add-fix-approx");
    solve->add_option("--direction", sa.direction,
                      "goods|chores; monotone direction (default goods) or leximin key (default chores)")
        ->check(CLI::IsMember({"goods", "chores"}));
    solve->add_option("--budget", sa.budget, "Step budget, or enumeration budget for leximin/brute");
    solve->add_option("--out", sa.out, "Write JSON here instead of stdout");
    solve->add_flag("--seedless", sa.seedless, "Deterministic output (always the case; accepted for scripts)");

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Verify a fairness notion on an allocation");
    check->add_option("instance", ca.instance, "Instance JSON file")->required();
    check->add_option("allocation", ca.allocation, "Allocation JSON file")->required();
    check->add_option("--epsilon", ca.epsilon, "Approximate EQx a/b");
    check->add_option("--direction", ca.direction, "goods|chores for approximate EQx")
        ->check(CLI::IsMember({"goods", "chores"}));
    check->add_option("--notion", ca.notion, "eqx|efx|equitable")->check(CLI::IsMember({"eqx", "efx", "equitable"}));

    ExistsArgs ea;
    auto* exists = app.add_subcommand("exists", "Decide whether an EQx allocation exists");
    exists->add_option("instance", ea.instance, "Instance JSON file")->required();
    exists->add_option("--method", ea.method, "dp|brute")->check(CLI::IsMember({"dp", "brute"}));
    exists->add_flag("--witness", ea.witness, "Include an EQx allocation when one exists");
    exists->add_option("--budget", ea.budget, "State budget (dp) or enumeration budget (brute)");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--kind", ga.kind, "random|partition|3partition|canonical")
        ->check(CLI::IsMember({"random", "partition", "3partition", "canonical"}));
    gen->add_option("--seed", ga.seed, "PRNG seed (random)");
    gen->add_option("--agents", ga.agents, "Agents (random)");
    gen->add_option("--items", ga.items, "Items (random)");
    gen->add_option("--min", ga.min_value, "Smallest item magnitude (random)");
    gen->add_option("--max", ga.max_value, "Largest item magnitude (random)");
    gen->add_option("--class", ga.cls, "monotone_goods|monotone_chores|objective_mixed|subjective");
    gen->add_option("--valuation", ga.valuation, "additive|budget_additive|partition_matroid_rank|explicit_table");
    gen->add_option("--values", ga.values, "Comma-separated integers (partition, 3partition)");
    gen->add_option("--target", ga.target, "T (3partition)");
    gen->add_option("--delta", ga.delta, "Delta (3partition; default 200nT)");
    gen->add_option("--name", ga.name, "table2|table4 (canonical)");
    gen->add_option("--out", ga.out, "Write JSON here instead of stdout");

    auto* selftest = app.add_subcommand("selftest", "Run built-in sanity checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(sa, out, err);
        if (check->parsed()) return cmd_check(ca, out, err);
        if (exists->parsed()) return cmd_exists(ea, out, err);
        if (gen->parsed()) return cmd_gen(ga, out, err);
        if (selftest->parsed()) return cmd_selftest(out, err);
    } catch (const ContractError& e) {
        err << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        err << "parse error at " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        err << "input: " << e.what() << "\n";
        return kInputError;
    } catch (const ArithmeticError& e) {
        err << "arithmetic: " << e.what() << "\n";
        return kInputError;
    } catch (const InvariantError& e) {
        err << "internal invariant failed: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInputError;
}

}  // namespace eqx::cli
