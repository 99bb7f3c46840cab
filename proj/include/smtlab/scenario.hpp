#pragma once

#include "smtlab/nevanlinna.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace smtlab::cli {

// Parsed scenario file (schema_version "1"). Commands pick the sections
// they need and reject scenarios missing them.
struct Scenario {
    std::vector<std::string> variables;
    Ideal variety;                     // zero ideal when no generators given
    std::optional<HypersurfaceFamily> family;
    std::optional<CurveSpec> curve;
    SamplingConfig sampling;

    std::optional<int> l;
    std::optional<int> u;
    std::optional<std::vector<Rational>> weights;
    std::optional<std::vector<int>> coord_set;
    std::optional<Rational> epsilon;
    std::optional<double> r_min, r_max;
    std::optional<int> samples;
    std::optional<std::vector<double>> r_grid;
    std::optional<int> retry_budget;
    std::optional<int> truncation_q;
    std::optional<double> min_fraction;
    std::optional<std::vector<int>> thresholds;
    std::optional<std::vector<Rational>> lemma_weights;
    std::optional<bool> run_oracle;
    QuadratureConfig quad;

    nlohmann::json raw;
    std::string digest;
    std::string path;
};

Scenario load_scenario(const std::string& path);

// parses a scenario from already-loaded text (path is only for messages)
Scenario parse_scenario(const std::string& text, const std::string& path);

std::string fnv1a_digest(const std::string& bytes);

std::string rational_str(const Rational& r);
nlohmann::json rational_list(const std::vector<Rational>& v);

} // namespace smtlab::cli
