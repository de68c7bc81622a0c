#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "refco/eca.hpp"
#include "refco/engine.hpp"
#include "refco/machine.hpp"

namespace refco {

/// All-S0 lattice with a single S1 cell at width/2.
LatticeState centered_one(std::size_t width);

/// Lattice row as CA cells. State-reporting machines are read through
/// their reporting outputs O_q; all others through S0 -> 0, S1 -> 1.
EcaRow to_eca_row(const Machine& m, const LatticeState& lattice,
                  EcaBoundary boundary = EcaBoundary::null);

struct EquivalenceReport {
    int machine_id = 45;
    std::uint8_t rule = 90;
    std::size_t width = 0;
    std::size_t steps = 0;
    std::size_t rows_checked = 0;
    /// (trajectory row index, cell index) of the first mismatch.
    std::optional<std::pair<std::size_t, std::size_t>> first_divergence;
    bool passed = false;
};

/// Runs the machine from a single centered S1 cell (or `initial`) under
/// the forward-R90 boundary policy and checks every even row against the
/// synchronous CA oracle: row 2k must equal oracle row k.
EquivalenceReport verify_forward_r90(
    std::size_t width, std::size_t steps, std::uint8_t rule = 90,
    int machine_id = 45, std::optional<LatticeState> initial = std::nullopt);

struct ReversalReport {
    int machine_id = 54;
    std::size_t width = 0;
    std::size_t depth_requested = 0;
    std::size_t pairs_checked = 0;
    std::vector<std::size_t> violations;  // even row indices that fail
    std::optional<std::size_t> no_preimage_at;
    std::vector<Symbol> committed_inputs;
    bool passed = false;  // no violations among committed pairs
};

/// Runs the reverse trial algorithm and checks that each committed pair of
/// even rows satisfies the forward Rule-90 step relation:
/// eca_step(row[2k+2]) == row[2k]. The constraint schedule is chosen from
/// the machine's transition structure (output-feedback for the M54 family,
/// zero-input for the M60 family).
ReversalReport verify_reverse_r90(int machine_id, const LatticeState& initial,
                                  std::size_t depth,
                                  Direction start = Direction::left_to_right);

struct ShiftReport {
    std::size_t width = 0;
    std::size_t steps = 0;
    std::size_t odd_rows_compared = 0;
    bool even_rows_equal = false;
    /// +1: machine-60 odd rows sit one cell to the left of machine-54's.
    std::optional<int> odd_shift;
    bool passed = false;
};

/// Runs M54 with the given boundary inputs and M60 with the matching
/// boundary-consistent inputs (equal at even steps; at odd steps M60 takes
/// the M54 input xor the previous step's output, which is what holding the
/// virtual boundary cells to S0 demands of each machine). Compares rows.
ShiftReport compare_m54_m60(const LatticeState& initial,
                            const std::vector<Symbol>& m54_inputs,
                            Direction start = Direction::left_to_right);

/// Same comparison with M54's inputs taken from its reverse trial run.
ShiftReport compare_m54_m60_reverse(const LatticeState& initial,
                                    std::size_t depth,
                                    Direction start = Direction::left_to_right);

struct ReversibilityReport {
    int machine_id = 0;
    std::size_t width = 0;
    std::size_t steps = 0;
    bool exhaustive = false;
    std::size_t configs_tested = 0;
    std::size_t recovered = 0;
    double pass_rate = 0.0;
    bool passed = false;  // pass_rate == 1.0
};

/// For each tested configuration under constant-0 input: run T steps,
/// reverse the lattice, run T further steps (resuming the direction
/// sequence), and check that the reversed initial configuration comes
/// back. Exhaustive mode enumerates all 2^width configurations and
/// requires width <= 10; sampled mode draws seeded random configurations.
/// Configurations are independent; `jobs` = 0 uses all hardware threads.
ReversibilityReport check_reversibility(int machine_id, std::size_t width,
                                        std::size_t steps, bool exhaustive,
                                        std::size_t samples = 64,
                                        std::uint64_t seed = 1,
                                        unsigned jobs = 1);

struct AtlasEntry {
    int machine_id = 0;
    MachineClass machine_class = MachineClass::constant_non_reporting;
    bool blank = false;  // every row after the initial one is uniform
    Trajectory trajectory;
};

/// Trajectories of all 256 machines from a single centered S1 cell under
/// constant-0 inputs. Entries are in id order; `jobs` = 0 uses all
/// available hardware threads.
std::vector<AtlasEntry> atlas(std::size_t width = 19, std::size_t steps = 38,
                              unsigned jobs = 0);

}  // namespace refco
