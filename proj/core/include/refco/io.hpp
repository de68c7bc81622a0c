#pragma once

#include <string>

#include "refco/analysis.hpp"
#include "refco/engine.hpp"

namespace refco {

/// One 0/1 row per line, initial row first.
std::string trajectory_rows_text(const Trajectory& traj);

/// Trajectory document: machine_id, n, policy descriptor, initial row,
/// per-step records (t, input, output, direction, row after the step),
/// and no_preimage_at when a reverse run stopped early.
std::string trajectory_to_json(const RunResult& result,
                               const std::string& policy);

std::string to_json(const EquivalenceReport& report);
std::string to_json(const ReversalReport& report);
std::string to_json(const ShiftReport& report);
std::string to_json(const ReversibilityReport& report);

/// One-line human-readable summaries of the same reports.
std::string summarize(const EquivalenceReport& report);
std::string summarize(const ReversalReport& report);
std::string summarize(const ShiftReport& report);
std::string summarize(const ReversibilityReport& report);

/// Per-machine atlas summary (id, class, blank); trajectories omitted.
std::string atlas_summary_json(const std::vector<AtlasEntry>& entries);

std::string_view to_string(Direction d);

}  // namespace refco
