// refco: simulate and verify one-dimensional lattices of two-state,
// two-symbol machines updated by reflexive composition.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "refco/analysis.hpp"
#include "refco/engine.hpp"
#include "refco/io.hpp"
#include "refco/machine.hpp"
#include "refco/render.hpp"

namespace {

using namespace refco;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoPreimage = 3;

int machine_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::domain_error("cannot read " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_machine(buf.str());
    }
    return parse_machine(arg);
}

// Initial-configuration selectors:
//   centered-one | all-zero | bits:<0/1...> | random:<seed> | r90-row:<t>
LatticeState initial_from_arg(const std::string& arg, std::size_t width) {
    if (arg == "centered-one") return centered_one(width);
    if (arg == "all-zero") return LatticeState(width, State::s0);
    if (arg.rfind("bits:", 0) == 0) {
        auto lattice = lattice_from_bits(arg.substr(5));
        if (width != 0 && lattice.size() != width)
            throw std::domain_error("--width disagrees with bits: length");
        return lattice;
    }
    if (arg.rfind("random:", 0) == 0) {
        std::uint64_t seed = std::stoull(arg.substr(7));
        return random_lattice(width, seed);
    }
    if (arg.rfind("r90-row:", 0) == 0) {
        // Rule-90 row t evolved from a single centered 1 at this width.
        std::size_t t = std::stoull(arg.substr(8));
        auto rows = eca_run(to_eca_row(decode(45), centered_one(width)),
                            EcaRule{90}, t);
        return lattice_from_bits(bits_from_eca_row(rows.back()));
    }
    throw std::domain_error("unrecognized init selector: " + arg);
}

BoundaryPolicy policy_from_arg(const std::string& arg) {
    if (arg == "const0") return BoundaryPolicy::constant0();
    if (arg == "const1") return BoundaryPolicy::constant1();
    if (arg == "forward-r90") return BoundaryPolicy::forward_r90();
    if (arg == "reverse-r90")
        return BoundaryPolicy::reverse_r90(ReverseVariant::output_feedback);
    if (arg == "reverse-r90-zi")
        return BoundaryPolicy::reverse_r90(ReverseVariant::zero_input);
    if (arg.rfind("scripted:", 0) == 0) {
        std::vector<Symbol> script;
        for (char c : arg.substr(9)) {
            if (c != '0' && c != '1')
                throw std::domain_error("script must be 0/1 characters");
            script.push_back(symbol_from_bit(c - '0'));
        }
        return BoundaryPolicy::scripted(std::move(script));
    }
    throw std::domain_error("unrecognized policy: " + arg);
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::domain_error("cannot write " + path);
    out << bytes;
}

void emit_report(const std::string& json, const std::string& out_path) {
    if (out_path.empty())
        std::cout << json;
    else
        write_file(out_path, json);
}

RowFilter row_filter_from_arg(const std::string& arg) {
    if (arg == "all") return RowFilter::all;
    if (arg == "even") return RowFilter::even;
    if (arg == "odd") return RowFilter::odd;
    if (arg == "split") return RowFilter::split_even_odd;
    throw std::domain_error("unrecognized row filter: " + arg);
}

struct SimulateOptions {
    std::string machine;
    std::size_t width = 0;
    std::string init = "centered-one";
    std::string policy = "const0";
    std::size_t steps = 0;
    std::string start_direction = "ltr";
    std::string out_json, out_rows, out_pbm;
    std::string row_filter = "all";
    unsigned scale = 1;
    bool p4 = false;
    bool s1_black = false;
};

int cmd_simulate(const SimulateOptions& opt) {
    const Machine m = decode(machine_from_arg(opt.machine));
    LatticeState init = initial_from_arg(opt.init, opt.width);
    BoundaryPolicy policy = policy_from_arg(opt.policy);
    Direction start = opt.start_direction == "rtl"
                          ? Direction::right_to_left
                          : Direction::left_to_right;

    auto result = run(m, std::move(init), policy, opt.steps, start);

    if (!opt.out_json.empty())
        write_file(opt.out_json,
                   trajectory_to_json(result, policy.describe()));
    if (!opt.out_rows.empty())
        write_file(opt.out_rows, trajectory_rows_text(result.trajectory));
    if (!opt.out_pbm.empty()) {
        RasterSpec spec;
        spec.row_filter = row_filter_from_arg(opt.row_filter);
        spec.scale = opt.scale;
        spec.binary = opt.p4;
        spec.s0_black = !opt.s1_black;
        write_file(opt.out_pbm, render_trajectory(result.trajectory, spec));
    }

    std::cout << "machine " << result.trajectory.machine_id << " width "
              << result.trajectory.width() << " policy " << policy.describe()
              << ": ran " << result.trajectory.step_count() << "/"
              << opt.steps << " steps\n";
    if (result.no_preimage_at) {
        std::cout << "no admissible boundary input at step "
                  << *result.no_preimage_at << "; partial trajectory kept\n";
        return kExitNoPreimage;
    }
    return kExitPass;
}

struct AtlasOptions {
    std::size_t width = 19;
    std::size_t steps = 38;
    unsigned columns = 16;
    unsigned jobs = 0;
    unsigned scale = 1;
    bool p4 = false;
    std::string out = "atlas.pbm";
    std::string summary;
};

int cmd_atlas(const AtlasOptions& opt) {
    auto entries = atlas(opt.width, opt.steps, opt.jobs);
    RasterSpec spec;
    spec.scale = opt.scale;
    spec.binary = opt.p4;
    write_file(opt.out, render_atlas(entries, opt.columns, spec));
    if (!opt.summary.empty())
        write_file(opt.summary, atlas_summary_json(entries));
    std::cout << "rendered 256 tiles (" << opt.width << "x" << opt.steps
              << " steps, even rows) to " << opt.out << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "refco: lattices of elementary state machines under reflexive "
        "composition"};
    app.require_subcommand(1);
    int exit_code = kExitPass;

    // simulate ------------------------------------------------------------
    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Run one trajectory");
    simulate->add_option("--machine", sim.machine, "Machine id, bit string, or @table-file")
        ->required();
    simulate->add_option("--width", sim.width, "Lattice width");
    simulate->add_option("--init", sim.init,
                         "centered-one | all-zero | bits:<0/1> | random:<seed> | r90-row:<t>");
    simulate->add_option("--policy", sim.policy,
                         "const0 | const1 | scripted:<0/1> | forward-r90 | reverse-r90 | reverse-r90-zi");
    simulate->add_option("--steps", sim.steps, "Step count")->required();
    simulate->add_option("--start-direction", sim.start_direction, "ltr | rtl")
        ->check(CLI::IsMember({"ltr", "rtl"}));
    simulate->add_option("--out-json", sim.out_json, "Trajectory JSON path");
    simulate->add_option("--out-rows", sim.out_rows, "Row-per-line text path");
    simulate->add_option("--out-pbm", sim.out_pbm, "PBM raster path");
    simulate->add_option("--row-filter", sim.row_filter,
                         "all | even | odd | split");
    simulate->add_option("--scale", sim.scale, "Pixels per cell");
    simulate->add_flag("--p4", sim.p4, "Binary PBM instead of plain");
    simulate->add_flag("--s1-black", sim.s1_black,
                       "Render S1 black (default renders S0 black)");
    simulate->callback([&] { exit_code = cmd_simulate(sim); });

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Machine-check a claim");
    verify->require_subcommand(1);
    std::string verify_out;
    verify->add_option("--out", verify_out, "Write the JSON report here");

    struct {
        std::size_t width = 129, steps = 128;
        unsigned rule = 90;
        std::string machine = "45";
    } vf;
    auto* vforward = verify->add_subcommand(
        "r90-forward", "Even rows of the forward run equal rule 90");
    vforward->add_option("--width", vf.width);
    vforward->add_option("--steps", vf.steps);
    vforward->add_option("--rule", vf.rule);
    vforward->add_option("--machine", vf.machine);
    vforward->callback([&] {
        auto report = verify_forward_r90(vf.width, vf.steps,
                                         static_cast<std::uint8_t>(vf.rule),
                                         machine_from_arg(vf.machine));
        emit_report(to_json(report), verify_out);
        std::cerr << summarize(report);
        exit_code = report.passed ? kExitPass : kExitVerifyFail;
    });

    struct {
        std::string machine = "54";
        std::size_t width = 8, depth = 8;
        std::string init = "bits:00011000";
    } vr;
    auto* vreverse = verify->add_subcommand(
        "r90-reverse", "Committed even rows step forward under rule 90");
    vreverse->add_option("--machine", vr.machine);
    vreverse->add_option("--width", vr.width);
    vreverse->add_option("--depth", vr.depth);
    vreverse->add_option("--init", vr.init);
    vreverse->callback([&] {
        auto report = verify_reverse_r90(machine_from_arg(vr.machine),
                                         initial_from_arg(vr.init, vr.width),
                                         vr.depth);
        emit_report(to_json(report), verify_out);
        std::cerr << summarize(report);
        exit_code = report.passed ? kExitPass : kExitVerifyFail;
    });

    struct {
        std::string machine = "44";
        std::size_t width = 8, steps = 16, samples = 64;
        std::uint64_t seed = 1;
        unsigned jobs = 0;
        bool exhaustive = false;
    } vv;
    auto* vflip = verify->add_subcommand(
        "reversibility", "Flip the lattice, run again, recover the start");
    vflip->add_option("--machine", vv.machine);
    vflip->add_option("--width", vv.width);
    vflip->add_option("--steps", vv.steps);
    vflip->add_flag("--exhaustive", vv.exhaustive);
    vflip->add_option("--samples", vv.samples);
    vflip->add_option("--seed", vv.seed);
    vflip->add_option("--jobs", vv.jobs, "Worker threads (0 = all)");
    vflip->callback([&] {
        auto report = check_reversibility(machine_from_arg(vv.machine),
                                          vv.width, vv.steps, vv.exhaustive,
                                          vv.samples, vv.seed, vv.jobs);
        emit_report(to_json(report), verify_out);
        std::cerr << summarize(report);
        exit_code = report.passed ? kExitPass : kExitVerifyFail;
    });

    struct {
        std::string init;
        std::size_t width = 8, depth = 8, steps = 16, sweep_max = 0;
        std::uint64_t seed = 1;
    } vs;
    auto* vshift = verify->add_subcommand(
        "m54-m60-shift",
        "Even rows of machines 54 and 60 agree; odd rows shift one cell");
    vshift->add_option("--init", vs.init,
                       "Run the reverse-driven comparison from this configuration");
    vshift->add_option("--width", vs.width);
    vshift->add_option("--depth", vs.depth);
    vshift->add_option("--steps", vs.steps, "Steps per sweep configuration");
    vshift->add_option("--sweep-max", vs.sweep_max,
                       "Also sweep every configuration up to this width");
    vshift->add_option("--seed", vs.seed);
    vshift->callback([&] {
        bool all_passed = true;
        std::string out;
        if (!vs.init.empty()) {
            auto report = compare_m54_m60_reverse(
                initial_from_arg(vs.init, vs.width), vs.depth);
            out += to_json(report);
            std::cerr << summarize(report);
            all_passed = all_passed && report.passed;
        }
        if (vs.sweep_max > 0) {
            ShiftReport worst;
            worst.passed = true;
            std::size_t configs = 0;
            for (std::size_t n = 1; n <= vs.sweep_max && all_passed; ++n) {
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n);
                     ++bits) {
                    LatticeState init(n);
                    for (std::size_t k = 0; k < n; ++k)
                        init[k] = state_from_bit((bits >> k) & 1);
                    std::vector<Symbol> script;
                    for (State q : random_lattice(vs.steps, vs.seed + bits))
                        script.push_back(as_symbol(q));
                    auto report = compare_m54_m60(init, script);
                    ++configs;
                    if (!report.passed) {
                        worst = report;
                        all_passed = false;
                        break;
                    }
                }
            }
            if (all_passed) {
                std::ostringstream note;
                note << "{\n  \"kind\": \"m54-m60-sweep\",\n  \"configs\": "
                     << configs << ",\n  \"passed\": true\n}\n";
                out += note.str();
                std::cerr << "m54-m60-sweep: " << configs
                          << " configurations: PASS\n";
            } else {
                out += to_json(worst);
                std::cerr << summarize(worst);
            }
        }
        if (vs.init.empty() && vs.sweep_max == 0)
            throw CLI::ValidationError(
                "m54-m60-shift needs --init and/or --sweep-max");
        emit_report(out, verify_out);
        exit_code = all_passed ? kExitPass : kExitVerifyFail;
    });

    // machine ---------------------------------------------------------------
    auto* machine_cmd =
        app.add_subcommand("machine", "Inspect and transform machines");
    machine_cmd->require_subcommand(1);
    std::string machine_arg;
    bool count_only = false;

    auto* mshow = machine_cmd->add_subcommand("show", "Transition table");
    mshow->add_option("machine", machine_arg)->required();
    mshow->callback([&] {
        std::cout << transition_table(machine_from_arg(machine_arg));
    });

    auto* mclassify =
        machine_cmd->add_subcommand("classify", "Output-behavior class");
    mclassify->add_option("machine", machine_arg)->required();
    mclassify->callback([&] {
        std::cout << to_string(classify(decode(machine_from_arg(machine_arg))))
                  << "\n";
    });

    auto* mclass = machine_cmd->add_subcommand(
        "class", "Equivalent machines under relabeling");
    mclass->add_option("machine", machine_arg)->required();
    mclass->callback([&] {
        bool first = true;
        for (int id : equivalence_class(machine_from_arg(machine_arg))) {
            std::cout << (first ? "" : " ") << id;
            first = false;
        }
        std::cout << "\n";
    });

    auto* mtranspose = machine_cmd->add_subcommand(
        "transpose", "Exchange state and message roles");
    mtranspose->add_option("machine", machine_arg)->required();
    mtranspose->callback([&] {
        std::cout << encode(transpose(decode(machine_from_arg(machine_arg))))
                  << "\n";
    });

    auto* mlist =
        machine_cmd->add_subcommand("list", "Canonical class representatives");
    mlist->add_flag("--count-only", count_only);
    mlist->callback([&] {
        auto ids = canonical_ids();
        if (count_only) {
            std::cout << ids.size() << "\n";
            return;
        }
        for (int id : ids) {
            std::cout << id << " (" << to_binary_string(id) << ") "
                      << to_string(classify(decode(id))) << " class:";
            for (int member : equivalence_class(id))
                std::cout << " " << member;
            std::cout << "\n";
        }
    });

    // atlas -------------------------------------------------------------
    AtlasOptions at;
    auto* atlas_cmd = app.add_subcommand(
        "atlas", "Render all 256 machines from a centered seed");
    atlas_cmd->add_option("--width", at.width);
    atlas_cmd->add_option("--steps", at.steps);
    atlas_cmd->add_option("--columns", at.columns);
    atlas_cmd->add_option("--jobs", at.jobs, "Worker threads (0 = all)");
    atlas_cmd->add_option("--scale", at.scale);
    atlas_cmd->add_flag("--p4", at.p4);
    atlas_cmd->add_option("--out", at.out)->required();
    atlas_cmd->add_option("--summary", at.summary, "Summary JSON path");
    atlas_cmd->callback([&] { exit_code = cmd_atlas(at); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
