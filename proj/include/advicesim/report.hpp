#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <json.hpp>

#include "advicesim/stats.hpp"

namespace advicesim {

inline constexpr const char* kVersion = "0.1.0";

/// Outcome of a seeded multi-trial experiment. The canonical JSON form
/// (to_json) is byte-identical for fixed inputs: keys are sorted and
/// wall_ms is excluded, so reports can be diffed across runs.
struct ExperimentReport {
  std::string experiment;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  int trials = 0;
  nlohmann::json outcomes = nlohmann::json::array();  // one entry per trial
  nlohmann::json aggregate = nlohmann::json::object();
  std::string version = kVersion;
  double wall_ms = 0.0;  // informational only, not serialized

  nlohmann::json to_json() const;
  std::string to_json_string(int indent = -1) const;
};

/// Writes the canonical JSON to path and appends one line to index.csv
/// in the same directory (experiment, params, seed, trials, aggregate).
void write_report(const ExperimentReport& report, const std::string& path);

using TrialFn =
    std::function<nlohmann::json(int trial_index, std::uint64_t trial_seed)>;

/// Runs `trials` independent trials with per-trial derived seeds,
/// optionally in parallel (jobs <= 0 picks the hardware default), and
/// aggregates in trial-index order so the report does not depend on
/// scheduling. Outcomes may carry a bool "success" and/or numeric
/// "value"; the aggregate summarizes whichever are present.
ExperimentReport run_trials(const std::string& name,
                            const nlohmann::json& params, std::uint64_t seed,
                            int trials, int jobs, const TrialFn& fn);

/// Index-parallel loop used by run_trials; deterministic given fn.
void parallel_for(int count, int jobs, const std::function<void(int)>& body);

}  // namespace advicesim
