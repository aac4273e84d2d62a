#ifndef MONOGEN_CONFIG_HPP
#define MONOGEN_CONFIG_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "monogen/factor.hpp"

namespace monogen {

// Tunable effort knobs shared by the CLI and the test harness. Defaults are
// part of the output contract: a fixed config must reproduce identical bytes.
struct RunConfig {
    FactorBudget budget;                   // trial_bound 10^6, rho_iterations 6*10^6
    std::uint64_t search_limit = 100;      // upper bound for admissible-prime scans
    std::uint64_t table_cap = 256;         // largest Stirling/Bernoulli table row
    std::string output_format = "json";    // "json" | "text"
    std::string corpus_path = "corpus";    // directory of stored certificates

    void validate() const {
        if (budget.trial_bound == 0 || budget.rho_iterations == 0 || search_limit == 0 ||
            table_cap == 0)
            throw std::invalid_argument("config: all bounds must be positive");
        if (output_format != "json" && output_format != "text")
            throw std::invalid_argument("config: output_format must be \"json\" or \"text\"");
    }
};

namespace detail {

inline std::uint64_t config_uint(const nlohmann::json& value, const char* key) {
    if (!value.is_number_unsigned())
        throw std::invalid_argument(std::string("config: key \"") + key +
                                    "\" must be an unsigned integer");
    return value.get<std::uint64_t>();
}

inline std::string config_string(const nlohmann::json& value, const char* key) {
    if (!value.is_string())
        throw std::invalid_argument(std::string("config: key \"") + key + "\" must be a string");
    return value.get<std::string>();
}

} // namespace detail

// Config file lookup order: explicit --config path, then $MONOGEN_CONFIG,
// then built-in defaults. Unknown keys are rejected so typos surface.
inline RunConfig load_config(const std::optional<std::string>& explicit_path = std::nullopt) {
    RunConfig config;
    std::string path;
    if (explicit_path) {
        path = *explicit_path;
    } else if (const char* env = std::getenv("MONOGEN_CONFIG")) {
        path = env;
    }
    if (path.empty()) return config;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config: " + path + ": " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: " + path + ": top level must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "trial_bound") config.budget.trial_bound = detail::config_uint(value, "trial_bound");
        else if (key == "rho_iterations")
            config.budget.rho_iterations = detail::config_uint(value, "rho_iterations");
        else if (key == "search_limit") config.search_limit = detail::config_uint(value, "search_limit");
        else if (key == "table_cap") config.table_cap = detail::config_uint(value, "table_cap");
        else if (key == "output_format")
            config.output_format = detail::config_string(value, "output_format");
        else if (key == "corpus_path") config.corpus_path = detail::config_string(value, "corpus_path");
        else throw std::invalid_argument("config: unknown key \"" + key + "\" in " + path);
    }
    config.validate();
    return config;
}

} // namespace monogen

#endif
