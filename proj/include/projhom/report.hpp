#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "projhom/algfile.hpp"
#include "projhom/resolution.hpp"
#include "projhom/theorem.hpp"

namespace projhom {

inline constexpr const char* kVersion = "1.0.0";

/* Result of one CLI command. The JSON document has exactly the top-level
 * keys algebra, command, seed, results, passed; everything command-specific
 * lives under results. Byte-identical for identical inputs. */
struct RunReport {
    std::string command;
    std::string algebra_summary;
    std::uint64_t seed = 0;
    bool passed = false;
    nlohmann::json results;
    std::string text; // human rendering, newline-terminated

    nlohmann::json to_json() const;
    std::string json_text() const; // dumped with 2-space indent + newline
};

nlohmann::json dim_value_json(const DimValue& v, std::size_t cutoff);

RunReport run_gldim(const AlgebraPtr& alg, std::size_t cutoff);

RunReport run_check_theorem(const AlgebraPtr& alg, std::size_t n, std::size_t trials,
                            std::uint64_t seed, bool want_trace);

// vertex = -1 resolves every simple
RunReport run_resolve(const AlgebraPtr& alg, int vertex, std::size_t cutoff);

RunReport run_demo(std::size_t trials, std::uint64_t seed, std::size_t cutoff);

} // namespace projhom
