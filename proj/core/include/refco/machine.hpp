#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace refco {

/// One of the two message values carried between cells.
enum class Symbol : std::uint8_t { zero = 0, one = 1 };

/// One of the two machine states.
enum class State : std::uint8_t { s0 = 0, s1 = 1 };

constexpr Symbol complement(Symbol s) {
    return s == Symbol::zero ? Symbol::one : Symbol::zero;
}

constexpr State mirror(State q) {
    return q == State::s0 ? State::s1 : State::s0;
}

constexpr int bit_of(Symbol s) { return static_cast<int>(s); }
constexpr int bit_of(State q) { return static_cast<int>(q); }

constexpr Symbol symbol_from_bit(int b) {
    return b ? Symbol::one : Symbol::zero;
}
constexpr State state_from_bit(int b) { return b ? State::s1 : State::s0; }

/// The state a symbol identifies with (0 <-> S0, 1 <-> S1), and back.
constexpr State as_state(Symbol s) { return state_from_bit(bit_of(s)); }
constexpr Symbol as_symbol(State q) { return symbol_from_bit(bit_of(q)); }

/// A two-state, two-symbol transducer: transition table delta and output
/// table phi, both total over (state, input).
///
/// The 8-bit identifier packs the tables as
///   bit 7 = delta(S0,0)  bit 6 = phi(S0,0)
///   bit 5 = delta(S0,1)  bit 4 = phi(S0,1)
///   bit 3 = delta(S1,0)  bit 2 = phi(S1,0)
///   bit 1 = delta(S1,1)  bit 0 = phi(S1,1)
/// with S0 -> 0 and S1 -> 1.
struct Machine {
    std::array<std::array<State, 2>, 2> delta;  // [state][input]
    std::array<std::array<Symbol, 2>, 2> phi;   // [state][input]

    State next_state(State q, Symbol i) const {
        return delta[bit_of(q)][bit_of(i)];
    }
    Symbol output(State q, Symbol i) const { return phi[bit_of(q)][bit_of(i)]; }

    bool operator==(const Machine&) const = default;
};

/// Numeric id -> machine. Throws std::domain_error outside [0, 255].
Machine decode(int id);

/// Machine -> numeric id; inverse of decode.
int encode(const Machine& m);

/// Relabel the two message values (0 <-> 1) on inputs and outputs.
Machine complement(const Machine& m);

/// Relabel the two states (S0 <-> S1).
Machine mirror(const Machine& m);

/// Exchange the roles of states and messages: inputs/outputs become
/// source/destination states and vice versa, under S0 <-> 0, S1 <-> 1.
Machine transpose(const Machine& m);

/// Orbit of id under {identity, complement, mirror, complement*mirror},
/// as a sorted set of ids (duplicates collapse).
std::vector<int> equivalence_class(int id);

/// Smallest id in the orbit of id.
int canonical(int id);

/// All 76 canonical ids, ascending.
std::vector<int> canonical_ids();

enum class MachineClass : std::uint8_t {
    state_reporting,        // phi constant per state, distinct per state
    message_propagating,    // some state maps different inputs to different outputs
    constant_non_reporting, // phi constant and identical in both states
};

MachineClass classify(const Machine& m);

std::string_view to_string(MachineClass c);

/// Id as an 8-character binary string, e.g. 45 -> "00101101".
std::string to_binary_string(int id);

/// Multi-line transition table, round-trippable through parse_machine().
std::string transition_table(int id);

/// Accepts a decimal id ("45"), an 8-bit binary string ("00101101"),
/// or transition-table text as printed by transition_table().
/// Throws std::domain_error on malformed input.
int parse_machine(std::string_view text);

}  // namespace refco
