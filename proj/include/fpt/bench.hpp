#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fpt::bench {

inline constexpr int schema_version = 1;

using record = nlohmann::ordered_json;

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// One record per (instance, algorithm), in canonical order. Every field except
// wall_ms is a function of (suite, seed). Throws parameter_error on an
// unknown suite.
std::vector<record> run_suite(const std::string& suite, std::uint64_t seed);

// Copy without wall_ms, for determinism comparisons.
record without_timing(const record& r);

std::string to_lines(const std::vector<record>& records);

}  // namespace fpt::bench
