#include "refco/engine.hpp"

#include <stdexcept>

namespace refco {

LatticeState lattice_from_bits(std::string_view bits) {
    if (bits.empty()) throw std::domain_error("empty lattice");
    LatticeState cells;
    cells.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::domain_error("lattice must be 0/1 characters");
        cells.push_back(state_from_bit(c - '0'));
    }
    return cells;
}

LatticeState lattice_from_symbols(const std::vector<Symbol>& bits) {
    if (bits.empty()) throw std::domain_error("empty lattice");
    LatticeState cells;
    cells.reserve(bits.size());
    for (Symbol s : bits) cells.push_back(as_state(s));
    return cells;
}

std::string bits_from_lattice(const LatticeState& lattice) {
    std::string s;
    s.reserve(lattice.size());
    for (State q : lattice) s.push_back(bit_of(q) ? '1' : '0');
    return s;
}

namespace {

// In-place sweep; returns the outgoing message.
Symbol sweep(LatticeState& cells, const Machine& m, Symbol input,
             Direction dir) {
    Symbol s = input;
    if (dir == Direction::left_to_right) {
        for (auto& q : cells) {
            Symbol out = m.output(q, s);
            q = m.next_state(q, s);
            s = out;
        }
    } else {
        for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
            Symbol out = m.output(*it, s);
            *it = m.next_state(*it, s);
            s = out;
        }
    }
    return s;
}

}  // namespace

StepOutcome step(const LatticeState& lattice, const Machine& m, Symbol input,
                 Direction dir) {
    if (lattice.empty()) throw std::domain_error("empty lattice");
    StepOutcome out{lattice, Symbol::zero};
    out.output = sweep(out.lattice, m, input, dir);
    return out;
}

std::string BoundaryPolicy::describe() const {
    switch (kind) {
        case Kind::constant:
            return constant_value == Symbol::zero ? "const0" : "const1";
        case Kind::scripted: {
            std::string s = "scripted:";
            for (Symbol b : script) s.push_back(bit_of(b) ? '1' : '0');
            return s;
        }
        case Kind::forward_r90:
            return "forward-r90";
        case Kind::reverse_r90_trial:
            return reverse_variant == ReverseVariant::output_feedback
                       ? "reverse-r90"
                       : "reverse-r90-zi";
    }
    return "unknown";
}

std::optional<ReverseVariant> reverse_variant_for(const Machine& m) {
    bool input_to_state = true;   // delta(q, i) == state-of(i)
    bool output_to_state = true;  // delta(q, i) == state-of(phi(q, i))
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            if (m.delta[q][i] != as_state(symbol_from_bit(i)))
                input_to_state = false;
            if (m.delta[q][i] != as_state(m.phi[q][i])) output_to_state = false;
        }
    }
    if (input_to_state) return ReverseVariant::output_feedback;
    if (output_to_state) return ReverseVariant::zero_input;
    return std::nullopt;
}

RunResult run(const Machine& m, LatticeState initial,
              const BoundaryPolicy& policy, std::size_t steps,
              Direction start) {
    if (initial.empty()) throw std::domain_error("empty lattice");
    if (policy.kind == BoundaryPolicy::Kind::reverse_r90_trial)
        return run_reverse(m, std::move(initial), steps,
                           policy.reverse_variant, start);
    if (policy.kind == BoundaryPolicy::Kind::scripted &&
        policy.script.size() < steps)
        throw std::domain_error("scripted policy shorter than requested run");

    RunResult result;
    Trajectory& traj = result.trajectory;
    traj.machine_id = encode(m);
    traj.start_direction = start;
    traj.rows.reserve(steps + 1);
    traj.rows.push_back(std::move(initial));
    traj.inputs.reserve(steps);
    traj.outputs.reserve(steps);

    for (std::size_t t = 0; t < steps; ++t) {
        Symbol in;
        switch (policy.kind) {
            case BoundaryPolicy::Kind::constant:
                in = policy.constant_value;
                break;
            case BoundaryPolicy::Kind::scripted:
                in = policy.script[t];
                break;
            case BoundaryPolicy::Kind::forward_r90:
                in = forward_r90_input(t, t > 0 ? traj.outputs[t - 1]
                                                : Symbol::zero);
                break;
            default:
                in = Symbol::zero;
        }
        auto [lattice, out] = step(traj.rows.back(), m, in,
                                   direction_at(t, start));
        traj.rows.push_back(std::move(lattice));
        traj.inputs.push_back(in);
        traj.outputs.push_back(out);
    }
    return result;
}

RunResult run_reverse(const Machine& m, LatticeState initial,
                      std::size_t steps, ReverseVariant variant,
                      Direction start) {
    if (initial.empty()) throw std::domain_error("empty lattice");
    if (steps % 2 != 0)
        throw std::domain_error("reverse runs take an even step count");

    RunResult result;
    Trajectory& traj = result.trajectory;
    traj.machine_id = encode(m);
    traj.start_direction = start;
    traj.rows.reserve(steps + 1);
    traj.rows.push_back(std::move(initial));
    traj.inputs.reserve(steps);
    traj.outputs.reserve(steps);

    for (std::size_t t = 0; t < steps; t += 2) {
        bool committed = false;
        for (Symbol trial : {Symbol::zero, Symbol::one}) {
            auto even = step(traj.rows.back(), m, trial,
                             direction_at(t, start));
            Symbol odd_in = variant == ReverseVariant::output_feedback
                                ? even.output
                                : Symbol::zero;
            auto odd = step(even.lattice, m, odd_in,
                            direction_at(t + 1, start));
            Symbol required = variant == ReverseVariant::output_feedback
                                  ? Symbol::zero
                                  : trial;
            if (odd.output != required) continue;

            traj.rows.push_back(std::move(even.lattice));
            traj.rows.push_back(std::move(odd.lattice));
            traj.inputs.push_back(trial);
            traj.inputs.push_back(odd_in);
            traj.outputs.push_back(even.output);
            traj.outputs.push_back(odd.output);
            committed = true;
            break;
        }
        if (!committed) {
            result.no_preimage_at = t;
            break;
        }
    }
    return result;
}

namespace {

// splitmix64: fixed, portable mixing for seeded initial conditions.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

LatticeState random_lattice(std::size_t width, std::uint64_t seed) {
    if (width == 0) throw std::domain_error("empty lattice");
    LatticeState cells;
    cells.reserve(width);
    std::uint64_t s = seed;
    for (std::size_t k = 0; k < width; ++k)
        cells.push_back(state_from_bit(splitmix64(s) & 1));
    return cells;
}

}  // namespace refco
