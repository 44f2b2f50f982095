#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "obslab/inequalities.hpp"
#include "obslab/serialization.hpp"

namespace obslab {

/// Observation terms, energy weight, estimate parameters and symmetry mask for one T.
struct ExperimentSetup {
    std::optional<Scenario> scenario;
    std::vector<ObservationSpec> terms;
    EnergyWeight weight;
    ScenarioParams params;
    int p_x1 = 0;  ///< 0 when unconstrained
    int q_x2 = 0;
};

/// Parsed common part of an experiment config.
struct ExperimentConfig {
    Json raw;
    RectangleGeometry geometry{std::numbers::pi, std::numbers::pi};
    int K1 = 8;
    int K2 = 8;
    std::uint64_t seed = 1;
    int samples = 100;
    double decay = 0.0;

    static ExperimentConfig parse(const Json& config);

    /// Observation setup at horizon T (ignored by time windows that carry their own interval).
    ExperimentSetup setup(double T) const;
    /// T from "T": a number, an expression, or {"threshold_factor": f}.
    double horizon() const;
    ModeSetPtr modes() const { return build_mode_set(geometry, K1, K2); }
    /// Random states for sample i, projected onto the setup's symmetry class.
    std::vector<SpectralState> sample_states(const ExperimentSetup& setup, const ModeSetPtr& modes) const;
};

struct CommandResult {
    bool pass = false;
    Json report;
    std::optional<std::string> csv;
};

const std::vector<std::string>& experiment_commands();

/// Runs one subcommand. Throws ConfigError / InvalidArgument for bad input and
/// PreconditionError when a hypothesis of the estimate fails.
CommandResult run_experiment(const std::string& command, const Json& config,
                             std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace obslab
