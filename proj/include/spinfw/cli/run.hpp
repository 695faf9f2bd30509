#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spinfw/cli/checks.hpp"
#include "spinfw/cli/config.hpp"

namespace spinfw::cli
{

//! Process exit codes.
enum ExitCode : int
{
    exit_pass = 0,
    exit_verification_failure = 1,
    exit_configuration_error = 2,
    exit_internal_error = 3
};

struct ResultRecord
{
    std::string run_id;
    std::string config_hash;
    RunConfig config;
    std::vector<Check> checks;
    std::vector<std::string> artifacts;
    //! Metadata, kept out of the deterministic results.
    double wall_time_seconds{0};
    std::string started_at;

    //! Conjunction of every check.
    bool pass() const;
    //! Byte-stable for identical config and seed.
    nlohmann::json results_json() const;
    nlohmann::json metadata_json() const;
};

/*!
 * Runs one mode and writes its artifacts (results.json, metadata.json,
 * report.txt, plus trajectory.json/.csv, algebra.json or fw.json) into
 * config.out_dir. Report mode re-renders an existing results.json.
 * Configuration problems throw ConfigurationError.
 */
ResultRecord run(RunConfig const& config);

ExitCode exit_code_for(ResultRecord const& record);

//! Largest |Delta(s . pi_hat)| along a trajectory.
double pitch_drift(classical::Trajectory const& traj, FieldModel const& model,
                   ParticleParams const& params);

}  // namespace spinfw::cli
