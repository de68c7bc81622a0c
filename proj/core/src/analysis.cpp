#include "refco/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace refco {

namespace {

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace

LatticeState centered_one(std::size_t width) {
    if (width == 0) throw std::domain_error("empty lattice");
    LatticeState cells(width, State::s0);
    cells[width / 2] = State::s1;
    return cells;
}

EcaRow to_eca_row(const Machine& m, const LatticeState& lattice,
                  EcaBoundary boundary) {
    EcaRow row;
    row.boundary = boundary;
    row.cells.reserve(lattice.size());
    if (classify(m) == MachineClass::state_reporting) {
        for (State q : lattice)
            row.cells.push_back(
                static_cast<std::uint8_t>(bit_of(m.output(q, Symbol::zero))));
    } else {
        for (State q : lattice)
            row.cells.push_back(static_cast<std::uint8_t>(bit_of(q)));
    }
    return row;
}

EquivalenceReport verify_forward_r90(std::size_t width, std::size_t steps,
                                     std::uint8_t rule, int machine_id,
                                     std::optional<LatticeState> initial) {
    const Machine m = decode(machine_id);
    LatticeState init = initial ? std::move(*initial) : centered_one(width);

    EquivalenceReport report;
    report.machine_id = machine_id;
    report.rule = rule;
    report.width = init.size();
    report.steps = steps;

    auto result = run(m, init, BoundaryPolicy::forward_r90(), steps);
    const auto& rows = result.trajectory.rows;

    auto oracle = eca_run(to_eca_row(m, rows.front()), EcaRule{rule},
                          steps / 2);
    for (std::size_t k = 0; 2 * k < rows.size(); ++k) {
        EcaRow got = to_eca_row(m, rows[2 * k]);
        ++report.rows_checked;
        if (got.cells != oracle[k].cells) {
            auto mismatch = std::mismatch(got.cells.begin(), got.cells.end(),
                                          oracle[k].cells.begin());
            report.first_divergence = {
                2 * k, static_cast<std::size_t>(mismatch.first -
                                                got.cells.begin())};
            break;
        }
    }
    report.passed = !report.first_divergence.has_value();
    return report;
}

ReversalReport verify_reverse_r90(int machine_id, const LatticeState& initial,
                                  std::size_t depth, Direction start) {
    const Machine m = decode(machine_id);
    const ReverseVariant variant =
        reverse_variant_for(m).value_or(ReverseVariant::output_feedback);

    ReversalReport report;
    report.machine_id = machine_id;
    report.width = initial.size();
    report.depth_requested = depth;

    auto result = run_reverse(m, initial, depth, variant, start);
    report.no_preimage_at = result.no_preimage_at;
    report.committed_inputs = result.trajectory.inputs;

    const auto& rows = result.trajectory.rows;
    for (std::size_t k = 0; 2 * k + 2 < rows.size(); ++k) {
        ++report.pairs_checked;
        EcaRow later = to_eca_row(m, rows[2 * k + 2]);
        if (eca_step(later, EcaRule{90}).cells !=
            to_eca_row(m, rows[2 * k]).cells)
            report.violations.push_back(2 * k);
    }
    report.passed = report.violations.empty();
    return report;
}

namespace {

// M60's boundary-consistent input schedule for a run that M54 makes with
// `inputs`: identical at even steps; xor-adjusted by the previous output
// at odd steps.
std::vector<Symbol> m60_inputs_for(const std::vector<Symbol>& m54_inputs,
                                   const std::vector<Symbol>& m54_outputs) {
    std::vector<Symbol> out(m54_inputs);
    for (std::size_t t = 1; t < out.size(); t += 2)
        out[t] = symbol_from_bit(bit_of(out[t]) ^ bit_of(m54_outputs[t - 1]));
    return out;
}

bool rows_shifted(const LatticeState& m60, const LatticeState& m54,
                  int shift) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(m54.size());
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        std::ptrdiff_t j = k + shift;
        if (j < 0 || j >= n) continue;  // boundary cell exempt
        if (m60[k] != m54[j]) return false;
    }
    return true;
}

ShiftReport compare_trajectories(const Trajectory& t54, const Trajectory& t60) {
    ShiftReport report;
    report.width = t54.width();
    report.steps = t54.step_count();

    const std::size_t rows = std::min(t54.rows.size(), t60.rows.size());
    report.even_rows_equal = true;
    for (std::size_t t = 0; t < rows; t += 2) {
        if (t54.rows[t] != t60.rows[t]) {
            report.even_rows_equal = false;
            break;
        }
    }

    for (int shift : {+1, -1}) {
        bool all = true;
        std::size_t compared = 0;
        for (std::size_t t = 1; t < rows; t += 2) {
            ++compared;
            if (!rows_shifted(t60.rows[t], t54.rows[t], shift)) {
                all = false;
                break;
            }
        }
        if (all) {
            report.odd_shift = shift;
            report.odd_rows_compared = compared;
            break;
        }
    }
    report.passed = report.even_rows_equal && report.odd_shift.has_value();
    return report;
}

}  // namespace

ShiftReport compare_m54_m60(const LatticeState& initial,
                            const std::vector<Symbol>& m54_inputs,
                            Direction start) {
    auto r54 = run(decode(54), initial, BoundaryPolicy::scripted(m54_inputs),
                   m54_inputs.size(), start);
    auto script60 =
        m60_inputs_for(m54_inputs, r54.trajectory.outputs);
    auto r60 = run(decode(60), initial, BoundaryPolicy::scripted(script60),
                   script60.size(), start);
    return compare_trajectories(r54.trajectory, r60.trajectory);
}

ShiftReport compare_m54_m60_reverse(const LatticeState& initial,
                                    std::size_t depth, Direction start) {
    auto r54 = run_reverse(decode(54), initial, depth,
                           ReverseVariant::output_feedback, start);
    return compare_m54_m60(initial, r54.trajectory.inputs, start);
}

ReversibilityReport check_reversibility(int machine_id, std::size_t width,
                                        std::size_t steps, bool exhaustive,
                                        std::size_t samples,
                                        std::uint64_t seed, unsigned jobs) {
    if (width == 0) throw std::domain_error("empty lattice");
    if (exhaustive && width > 10)
        throw std::domain_error("exhaustive reversibility check limited to width <= 10");

    const Machine m = decode(machine_id);
    ReversibilityReport report;
    report.machine_id = machine_id;
    report.width = width;
    report.steps = steps;
    report.exhaustive = exhaustive;

    auto check_one = [&](const LatticeState& x) {
        auto forward = run(m, x, BoundaryPolicy::constant0(), steps);
        LatticeState flipped(forward.trajectory.rows.back().rbegin(),
                             forward.trajectory.rows.back().rend());
        // Resume the direction sequence where the first leg stopped.
        auto back = run(m, flipped, BoundaryPolicy::constant0(), steps,
                        direction_at(steps, Direction::left_to_right));
        LatticeState expected(x.rbegin(), x.rend());
        return back.trajectory.rows.back() == expected;
    };

    std::atomic<std::size_t> recovered{0};
    if (exhaustive) {
        report.configs_tested = std::size_t{1} << width;
        parallel_for(report.configs_tested, jobs, [&](std::size_t bits) {
            LatticeState x(width, State::s0);
            for (std::size_t k = 0; k < width; ++k)
                if ((bits >> k) & 1) x[k] = State::s1;
            if (check_one(x)) recovered.fetch_add(1);
        });
    } else {
        report.configs_tested = samples;
        parallel_for(samples, jobs, [&](std::size_t i) {
            if (check_one(random_lattice(width, seed + i)))
                recovered.fetch_add(1);
        });
    }
    report.recovered = recovered.load();
    report.pass_rate = report.configs_tested == 0
                           ? 0.0
                           : static_cast<double>(report.recovered) /
                                 static_cast<double>(report.configs_tested);
    report.passed = report.recovered == report.configs_tested;
    return report;
}

namespace {

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body) {
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned workers = std::min<std::size_t>(jobs, count);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1))
                body(i);
        });
    }
    for (auto& t : pool) t.join();
}

bool is_blank(const Trajectory& traj) {
    for (std::size_t t = 1; t < traj.rows.size(); ++t) {
        const auto& row = traj.rows[t];
        if (std::adjacent_find(row.begin(), row.end(),
                               std::not_equal_to<>{}) != row.end())
            return false;
    }
    return true;
}

}  // namespace

std::vector<AtlasEntry> atlas(std::size_t width, std::size_t steps,
                              unsigned jobs) {
    std::vector<AtlasEntry> entries(256);
    const LatticeState init = centered_one(width);
    parallel_for(256, jobs, [&](std::size_t id) {
        const Machine m = decode(static_cast<int>(id));
        AtlasEntry& e = entries[id];
        e.machine_id = static_cast<int>(id);
        e.machine_class = classify(m);
        e.trajectory =
            run(m, init, BoundaryPolicy::constant0(), steps).trajectory;
        e.blank = is_blank(e.trajectory);
    });
    return entries;
}

}  // namespace refco
