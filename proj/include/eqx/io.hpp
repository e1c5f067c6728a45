#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "eqx/dp.hpp"
#include "eqx/instance.hpp"
#include "eqx/solve.hpp"
#include "eqx/verify.hpp"

namespace eqx {

using json = nlohmann::json;

// Instance: {"agents": n, "items": [names], "valuations": [{"kind": ..., params}]}
// Allocation: {"bundles": [[idx...]...], "unassigned": [idx...]}
//
// Loaders throw ParseError whose where() is a JSON pointer into the
// document, or "byte N" for syntax errors.

json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& doc);

json allocation_to_json(const Allocation& allocation);
Allocation allocation_from_json(const json& doc);

/// `flag` names the verdict field ("is_eqx", "is_efx").
json report_to_json(const ViolationReport& report, std::string_view flag = "is_eqx");
json stats_to_json(const SolveStats& stats);
json dp_to_json(const DpResult& result);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& doc);

json parse_json(std::string_view text);
Instance parse_instance(std::string_view text);
Allocation parse_allocation(std::string_view text);

std::string save_instance(const Instance& instance);
std::string save_allocation(const Allocation& allocation);

/// Whole file as a string; InputError when it cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace eqx
