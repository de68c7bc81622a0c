#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refco/machine.hpp"

namespace refco {

/// Which end of the lattice the boundary input enters at a given step.
/// Directionality alternates every step.
enum class Direction : std::uint8_t { left_to_right, right_to_left };

constexpr Direction opposite(Direction d) {
    return d == Direction::left_to_right ? Direction::right_to_left
                                         : Direction::left_to_right;
}

/// Direction of step t when step 0 runs in `start`.
constexpr Direction direction_at(std::size_t t, Direction start) {
    return (t % 2 == 0) ? start : opposite(start);
}

/// Configuration of the lattice at one time step.
using LatticeState = std::vector<State>;

LatticeState lattice_from_bits(std::string_view bits);
LatticeState lattice_from_symbols(const std::vector<Symbol>& bits);
std::string bits_from_lattice(const LatticeState& lattice);

struct StepOutcome {
    LatticeState lattice;
    Symbol output;
};

/// One sweep of reflexive composition over the lattice, in fixed-position
/// (folded) coordinates: cells are visited in sweep order, each consumes
/// the carried message, transitions in place, and emits the next message.
/// The final carried message is the step output.
///
/// Equivalent to composing the output functions across the lattice and
/// assigning each cell's transition to the opposite end, then flipping the
/// result back into display order.
StepOutcome step(const LatticeState& lattice, const Machine& m, Symbol input,
                 Direction dir);

struct StepRecord {
    std::size_t t;
    Symbol input;
    Symbol output;
    Direction direction;
    const LatticeState& before;
    const LatticeState& after;
};

struct Trajectory {
    int machine_id = 0;
    Direction start_direction = Direction::left_to_right;
    std::vector<LatticeState> rows;  // rows[t] = configuration before step t
    std::vector<Symbol> inputs;      // inputs[t] = i(t)
    std::vector<Symbol> outputs;     // outputs[t] = o(t)

    std::size_t step_count() const { return inputs.size(); }
    std::size_t width() const { return rows.empty() ? 0 : rows.front().size(); }
    StepRecord record(std::size_t k) const {
        return {k,       inputs[k],  outputs[k], direction_at(k, start_direction),
                rows[k], rows[k + 1]};
    }
};

/// Constraint schedule used by the reverse trial algorithm. The virtual
/// boundary cells must read as S0 on every even row; what that demands of
/// the odd-step input and output depends on the machine's transitions.
enum class ReverseVariant : std::uint8_t {
    /// i(odd) = o(previous step); commit requires o(odd) = 0.
    /// Correct for machines that turn their input into the destination
    /// state (M54 and kin).
    output_feedback,
    /// i(odd) = 0; commit requires o(odd) = i(previous step).
    /// Correct for machines that turn their own output into the
    /// destination state (M60 and kin).
    zero_input,
};

/// Picks the reverse constraint schedule a machine's transition table
/// calls for, when one applies: output_feedback if delta(q, i) = state-of(i)
/// for all q, zero_input if delta(q, i) = state-of(phi(q, i)) for all q.
std::optional<ReverseVariant> reverse_variant_for(const Machine& m);

struct BoundaryPolicy {
    enum class Kind : std::uint8_t {
        constant,
        scripted,
        forward_r90,
        reverse_r90_trial,
    };

    Kind kind = Kind::constant;
    Symbol constant_value = Symbol::zero;
    std::vector<Symbol> script;
    ReverseVariant reverse_variant = ReverseVariant::output_feedback;

    static BoundaryPolicy constant0() { return {}; }
    static BoundaryPolicy constant1() {
        BoundaryPolicy p;
        p.constant_value = Symbol::one;
        return p;
    }
    static BoundaryPolicy constant(Symbol s) {
        BoundaryPolicy p;
        p.constant_value = s;
        return p;
    }
    static BoundaryPolicy scripted(std::vector<Symbol> inputs) {
        BoundaryPolicy p;
        p.kind = Kind::scripted;
        p.script = std::move(inputs);
        return p;
    }
    static BoundaryPolicy forward_r90() {
        BoundaryPolicy p;
        p.kind = Kind::forward_r90;
        return p;
    }
    static BoundaryPolicy reverse_r90(
        ReverseVariant v = ReverseVariant::output_feedback) {
        BoundaryPolicy p;
        p.kind = Kind::reverse_r90_trial;
        p.reverse_variant = v;
        return p;
    }

    std::string describe() const;
};

/// Boundary input that keeps even rows on null CA boundaries for a
/// state-reporting machine run forward: 0 at even steps, the previous
/// output at odd steps.
constexpr Symbol forward_r90_input(std::size_t t, Symbol previous_output) {
    return (t % 2 == 0) ? Symbol::zero : previous_output;
}

struct RunResult {
    Trajectory trajectory;
    /// Set when the reverse trial algorithm found no admissible input at
    /// an even step; the trajectory holds the committed prefix.
    std::optional<std::size_t> no_preimage_at;

    bool completed() const { return !no_preimage_at.has_value(); }
};

/// Executes `steps` steps with directions alternating from `start`.
/// Scripted policies must script at least `steps` inputs (domain error
/// otherwise); the reverse policy may stop early (see RunResult).
RunResult run(const Machine& m, LatticeState initial,
              const BoundaryPolicy& policy, std::size_t steps,
              Direction start = Direction::left_to_right);

/// The reverse trial algorithm: for each even step, tentatively feed 0,
/// derive the constrained odd-step input, and commit the pair if the odd
/// step satisfies its boundary constraint; otherwise retry with 1, and
/// stop with no_preimage_at if neither works. `steps` must be even.
RunResult run_reverse(const Machine& m, LatticeState initial,
                      std::size_t steps,
                      ReverseVariant variant = ReverseVariant::output_feedback,
                      Direction start = Direction::left_to_right);

/// Deterministic seeded random configuration (splitmix64 bits).
LatticeState random_lattice(std::size_t width, std::uint64_t seed);

}  // namespace refco
