#ifndef SCHURLAB_IO_HPP
#define SCHURLAB_IO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "schurlab/bounds.hpp"
#include "schurlab/colouring_hypergraph.hpp"
#include "schurlab/montecarlo.hpp"
#include "schurlab/solver.hpp"

namespace schurlab {

using Json = nlohmann::ordered_json;

/// Malformed configuration or record; the CLI maps it to a usage error.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed 12 significant digit rendering.
std::string format_number(double x);

/// Constants the formulas need but no operation derives. Unset ones are written as null.
struct ModelConstants {
    double classifier_delta = kDefaultClassifierDelta;
    double classifier_epsilon = kDefaultClassifierEpsilon;
    double container_epsilon = 1e-3;
    std::optional<double> zeta;
    std::optional<double> xi;
    double container_c = 1.0;
    double wicket_C = 1.0;

    /// Equal at the 12 significant digits records are written with.
    friend bool operator==(const ModelConstants&, const ModelConstants&);
};

Json to_json(const ModelConstants& c);
ModelConstants constants_from_json(const Json& j);

struct SweepConfig {
    Element n = 0;
    std::string base;
    /// Absent means the default grid around the base's theoretical threshold.
    std::optional<std::vector<double>> p_grid;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;

    friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/**
 * Strict: keys n, base and trials are required; p_grid is an ascending
 * array in [0, 1] or "auto"; budget is optional; any other key is rejected.
 * The seed comes from the file or from seed_override; when both are present
 * they must agree, and when neither is the config is rejected.
 */
SweepConfig parse_sweep_config(const Json& j, std::optional<std::uint64_t> seed_override = std::nullopt);
Json to_json(const SweepConfig& c);

/// The grid actually swept: explicit, or default_grid(grid_centre_for(base, n)).
std::vector<double> resolved_grid(const SweepConfig& c);

struct SweepRecord {
    SweepConfig config;            ///< with p_grid resolved
    ModelConstants constants;
    SweepCurve curve;
    std::optional<ThresholdEstimate> threshold;

    /// Reals compare at 12 significant digits, so a record equals its parsed output.
    friend bool operator==(const SweepRecord&, const SweepRecord&);
};

Json to_json(const SweepCurve& c);
SweepCurve curve_from_json(const Json& j);
Json to_json(const SweepRecord& r);
SweepRecord sweep_record_from_json(const Json& j);

/// Runs the sweep of a config and fits the threshold where the curve brackets 1/2.
SweepRecord run_sweep(const SweepConfig& config, const ModelConstants& constants, unsigned workers);

/// Two-space indented JSON with a trailing newline.
std::string dump_json(const Json& j);
Json parse_json_text(const std::string& text, const std::string& origin);

/// Header plus one row per grid point.
std::string sweep_csv(const SweepCurve& c);
/// One "p schur_fraction wilson_half_width" line per grid point.
std::string plot_data(const SweepCurve& c);

/// Half-width of the 95% Wilson score interval; 0 when trials is 0.
double wilson_half_width(std::uint64_t successes, std::uint64_t trials);

/// Throws std::runtime_error naming the path on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

Json colouring_to_json(const Colouring& c);

/// {"red": "<set>", "blue": "<set>"} with optional "n"; both sides regrounded to n.
ContainerLike container_from_json(const Json& j);

/**
 * Set literal: "a-b,c,d-e", "{}" or "" for the empty set, or
 * "construct:<name>" for a named construction (n applies to names that need it).
 */
IntSet parse_set_literal(const std::string& text, Element n = 0);

}  // namespace schurlab

#endif  // SCHURLAB_IO_HPP
