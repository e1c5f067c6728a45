#include "eqx/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace eqx {

namespace {

std::string at(const std::string& ptr, std::string_view key) { return ptr + "/" + std::string(key); }
std::string at(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

const json& field(const json& obj, const std::string& ptr, std::string_view key) {
    if (!obj.is_object()) throw ParseError(ptr.empty() ? "/" : ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(ptr.empty() ? "/" : ptr, "missing field '" + std::string(key) + "'");
    return *it;
}

Value integer(const json& j, const std::string& ptr) {
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<Value>::max()))
            throw ParseError(ptr, "integer does not fit in 64 bits");
        return static_cast<Value>(u);
    }
    if (j.is_number_integer()) return j.get<Value>();
    throw ParseError(ptr, "expected an integer");
}

std::size_t index(const json& j, const std::string& ptr, std::size_t limit) {
    const Value v = integer(j, ptr);
    if (v < 0 || static_cast<std::uint64_t>(v) >= limit)
        throw ParseError(ptr, "index " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

const json& array(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw ParseError(ptr, "expected an array");
    return j;
}

std::vector<Value> integers(const json& j, const std::string& ptr) {
    std::vector<Value> out;
    for (std::size_t k = 0; k < array(j, ptr).size(); ++k) out.push_back(integer(j[k], at(ptr, k)));
    return out;
}

Valuation valuation_from_json(const json& doc, const std::string& ptr, std::size_t m) {
    const auto& kind_field = field(doc, ptr, "kind");
    if (!kind_field.is_string()) throw ParseError(at(ptr, "kind"), "expected a string");
    ValuationKind kind;
    try {
        kind = parse_valuation_kind(kind_field.get<std::string>());
    } catch (const InputError& e) {
        throw ParseError(at(ptr, "kind"), e.what());
    }

    auto sized_values = [&] {
        const auto p = at(ptr, "values");
        auto v = integers(field(doc, ptr, "values"), p);
        if (v.size() != m)
            throw ParseError(p, "expected " + std::to_string(m) + " values, got " + std::to_string(v.size()));
        return v;
    };

    try {
        switch (kind) {
            case ValuationKind::additive: return Valuation::additive(sized_values());
            case ValuationKind::budget_additive: {
                auto v = sized_values();
                return Valuation::budget_additive(std::move(v),
                                                  integer(field(doc, ptr, "budget"), at(ptr, "budget")));
            }
            case ValuationKind::partition_matroid_rank: {
                const auto pp = at(ptr, "parts");
                const auto& parts_json = array(field(doc, ptr, "parts"), pp);
                std::vector<std::vector<Item>> parts;
                for (std::size_t k = 0; k < parts_json.size(); ++k) {
                    const auto pk = at(pp, k);
                    std::vector<Item> part;
                    for (std::size_t t = 0; t < array(parts_json[k], pk).size(); ++t)
                        part.push_back(index(parts_json[k][t], at(pk, t), m));
                    parts.push_back(std::move(part));
                }
                auto caps = integers(field(doc, ptr, "capacities"), at(ptr, "capacities"));
                return Valuation::partition_matroid_rank(m, std::move(parts), std::move(caps));
            }
            case ValuationKind::explicit_table: {
                const auto tp = at(ptr, "table");
                const auto& table_json = field(doc, ptr, "table");
                if (!table_json.is_object()) throw ParseError(tp, "expected an object keyed by bitmask");
                if (m > kMaxExplicitItems)
                    throw ParseError(tp, "explicit tables hold at most " + std::to_string(kMaxExplicitItems) + " items");
                const std::size_t size = std::size_t{1} << m;
                std::vector<Value> table(size);
                std::vector<bool> present(size, false);
                for (const auto& [key, value] : table_json.items()) {
                    std::uint64_t mask = 0;
                    const auto* end = key.data() + key.size();
                    const auto [p, ec] = std::from_chars(key.data(), end, mask);
                    if (ec != std::errc{} || p != end || key.empty() || (key.size() > 1 && key[0] == '0'))
                        throw ParseError(at(tp, key), "key is not a canonical decimal bitmask");
                    if (mask >= size) throw ParseError(at(tp, key), "bitmask names an item outside the ground set");
                    table[mask] = integer(value, at(tp, key));
                    present[mask] = true;
                }
                for (std::size_t mask = 0; mask < size; ++mask)
                    if (!present[mask]) throw ParseError(tp, "missing entry for bitmask " + std::to_string(mask));
                return Valuation::explicit_table(m, std::move(table));
            }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(ptr, e.what());
    }
    throw ParseError(ptr, "unknown kind");
}

json valuation_to_json(const Valuation& v) {
    json out;
    out["kind"] = std::string(to_string(v.kind()));
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, AdditiveParams>) {
                out["values"] = p.values;
            } else if constexpr (std::is_same_v<T, BudgetAdditiveParams>) {
                out["values"] = p.values;
                out["budget"] = p.budget;
            } else if constexpr (std::is_same_v<T, PartitionMatroidParams>) {
                out["parts"] = p.parts;
                out["capacities"] = p.capacities;
            } else {
                json table = json::object();
                for (std::size_t mask = 0; mask < p.table.size(); ++mask) table[std::to_string(mask)] = p.table[mask];
                out["table"] = std::move(table);
            }
        },
        v.params());
    return out;
}

json items_json(const ItemSet& s) {
    json out = json::array();
    for (Item x : s.items()) out.push_back(x);
    return out;
}

json violation_json(const Violation& v) {
    return {{"owner", v.owner}, {"item", v.item}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

}  // namespace

json instance_to_json(const Instance& instance) {
    json out;
    out["agents"] = instance.agent_count();
    out["items"] = instance.item_names();
    json vals = json::array();
    for (const auto& v : instance.valuations()) vals.push_back(valuation_to_json(v));
    out["valuations"] = std::move(vals);
    return out;
}

Instance instance_from_json(const json& doc) {
    const std::string root;
    const Value n = integer(field(doc, root, "agents"), "/agents");
    if (n < 1) throw ParseError("/agents", "at least one agent is required");

    const auto& items = array(field(doc, root, "items"), "/items");
    if (items.size() > kMaxItems) throw ParseError("/items", "at most " + std::to_string(kMaxItems) + " items");
    std::vector<std::string> names;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (!items[k].is_string()) throw ParseError(at("/items", k), "item names must be strings");
        names.push_back(items[k].get<std::string>());
    }
    const auto m = names.size();

    const auto& vals = array(field(doc, root, "valuations"), "/valuations");
    if (vals.size() != static_cast<std::size_t>(n))
        throw ParseError("/valuations", "expected " + std::to_string(n) + " valuations, got " + std::to_string(vals.size()));
    std::vector<Valuation> valuations;
    for (std::size_t i = 0; i < vals.size(); ++i) valuations.push_back(valuation_from_json(vals[i], at("/valuations", i), m));
    return Instance(m, std::move(valuations), std::move(names));
}

json allocation_to_json(const Allocation& allocation) {
    json bundles = json::array();
    for (const auto& b : allocation.bundles()) bundles.push_back(items_json(b));
    return {{"bundles", std::move(bundles)}, {"unassigned", items_json(allocation.unassigned())}};
}

Allocation allocation_from_json(const json& doc) {
    const std::string root;
    const auto& bundles_json = array(field(doc, root, "bundles"), "/bundles");
    if (bundles_json.empty()) throw ParseError("/bundles", "at least one bundle is required");

    std::set<Item> seen;
    auto read_set = [&](const json& j, const std::string& ptr) {
        ItemSet s;
        for (std::size_t t = 0; t < array(j, ptr).size(); ++t) {
            const auto p = at(ptr, t);
            const Item x = index(j[t], p, kMaxItems);
            if (!seen.insert(x).second) throw ParseError(p, "item " + std::to_string(x) + " appears more than once");
            s.insert(x);
        }
        return s;
    };

    std::vector<ItemSet> bundles;
    for (std::size_t k = 0; k < bundles_json.size(); ++k) bundles.push_back(read_set(bundles_json[k], at("/bundles", k)));
    ItemSet pool;
    if (doc.contains("unassigned")) pool = read_set(doc["unassigned"], "/unassigned");

    if (!seen.empty() && *seen.rbegin() + 1 != seen.size())
        throw ParseError("/", "items must be exactly 0.." + std::to_string(*seen.rbegin()) + " with none missing");
    return Allocation::from_parts(std::move(bundles), pool);
}

json report_to_json(const ViolationReport& report, std::string_view flag) {
    json goods = json::array();
    for (const auto& v : report.goods_violations) goods.push_back(violation_json(v));
    json chores = json::array();
    for (const auto& v : report.chores_violations) chores.push_back(violation_json(v));
    json out{{"goods_violations", std::move(goods)}, {"chores_violations", std::move(chores)}};
    out[std::string(flag)] = report.is_eqx;
    return out;
}

json stats_to_json(const SolveStats& s) {
    return {{"outer_iterations", s.outer_iterations},
            {"add_steps", s.add_steps},
            {"fix_steps", s.fix_steps},
            {"oracle_calls", s.oracle_calls},
            {"v_max", s.v_max},
            {"v_min", s.v_min},
            {"transfers", s.transfers},
            {"special_transfers", s.special_transfers},
            {"cutoff_trace", s.cutoff_trace},
            {"interim_checks", s.interim_checks},
            {"terminated_by", std::string(to_string(s.terminated_by))}};
}

json dp_to_json(const DpResult& r) {
    json out{{"exists", r.exists}, {"peak_states", r.peak_states}, {"max_abs_item_value", r.max_abs_item_value}};
    if (r.witness) out["witness"] = allocation_to_json(*r.witness);
    return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
    }
}

Instance parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }
Allocation parse_allocation(std::string_view text) { return allocation_from_json(parse_json(text)); }

std::string save_instance(const Instance& instance) { return dump(instance_to_json(instance)); }
std::string save_allocation(const Allocation& allocation) { return dump(allocation_to_json(allocation)); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace eqx
