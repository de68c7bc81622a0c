#include "refco/io.hpp"

#include <json.hpp>

namespace refco {

using nlohmann::json;

std::string_view to_string(Direction d) {
    return d == Direction::left_to_right ? "ltr" : "rtl";
}

std::string trajectory_rows_text(const Trajectory& traj) {
    std::string out;
    for (const auto& row : traj.rows) {
        out += bits_from_lattice(row);
        out.push_back('\n');
    }
    return out;
}

std::string trajectory_to_json(const RunResult& result,
                               const std::string& policy) {
    const Trajectory& traj = result.trajectory;
    json doc;
    doc["machine_id"] = traj.machine_id;
    doc["n"] = traj.width();
    doc["policy"] = policy;
    doc["start_direction"] = to_string(traj.start_direction);
    doc["initial_row"] = bits_from_lattice(traj.rows.front());
    if (result.no_preimage_at)
        doc["no_preimage_at"] = *result.no_preimage_at;
    else
        doc["no_preimage_at"] = nullptr;

    json steps = json::array();
    for (std::size_t t = 0; t < traj.step_count(); ++t) {
        auto rec = traj.record(t);
        steps.push_back({{"t", rec.t},
                         {"input", bit_of(rec.input)},
                         {"output", bit_of(rec.output)},
                         {"direction", to_string(rec.direction)},
                         {"row", bits_from_lattice(rec.after)}});
    }
    doc["steps"] = std::move(steps);
    return doc.dump(2) + "\n";
}

std::string to_json(const EquivalenceReport& report) {
    json doc;
    doc["kind"] = "r90-forward";
    doc["machine_id"] = report.machine_id;
    doc["rule"] = report.rule;
    doc["width"] = report.width;
    doc["steps"] = report.steps;
    doc["rows_checked"] = report.rows_checked;
    if (report.first_divergence)
        doc["first_divergence"] = {{"row", report.first_divergence->first},
                                   {"cell", report.first_divergence->second}};
    else
        doc["first_divergence"] = nullptr;
    doc["passed"] = report.passed;
    return doc.dump(2) + "\n";
}

std::string to_json(const ReversalReport& report) {
    json doc;
    doc["kind"] = "r90-reverse";
    doc["machine_id"] = report.machine_id;
    doc["width"] = report.width;
    doc["depth_requested"] = report.depth_requested;
    doc["pairs_checked"] = report.pairs_checked;
    doc["violations"] = report.violations;
    if (report.no_preimage_at)
        doc["no_preimage_at"] = *report.no_preimage_at;
    else
        doc["no_preimage_at"] = nullptr;
    std::string inputs;
    for (Symbol s : report.committed_inputs)
        inputs.push_back(bit_of(s) ? '1' : '0');
    doc["committed_inputs"] = inputs;
    doc["passed"] = report.passed;
    return doc.dump(2) + "\n";
}

std::string to_json(const ShiftReport& report) {
    json doc;
    doc["kind"] = "m54-m60-shift";
    doc["width"] = report.width;
    doc["steps"] = report.steps;
    doc["odd_rows_compared"] = report.odd_rows_compared;
    doc["even_rows_equal"] = report.even_rows_equal;
    if (report.odd_shift)
        doc["odd_shift"] = *report.odd_shift;
    else
        doc["odd_shift"] = nullptr;
    doc["passed"] = report.passed;
    return doc.dump(2) + "\n";
}

std::string to_json(const ReversibilityReport& report) {
    json doc;
    doc["kind"] = "reversibility";
    doc["machine_id"] = report.machine_id;
    doc["width"] = report.width;
    doc["steps"] = report.steps;
    doc["exhaustive"] = report.exhaustive;
    doc["configs_tested"] = report.configs_tested;
    doc["recovered"] = report.recovered;
    doc["pass_rate"] = report.pass_rate;
    doc["passed"] = report.passed;
    return doc.dump(2) + "\n";
}

std::string summarize(const EquivalenceReport& report) {
    std::string s = "r90-forward: machine " + std::to_string(report.machine_id) +
                    " vs rule " + std::to_string(report.rule) + ", width " +
                    std::to_string(report.width) + ", " +
                    std::to_string(report.rows_checked) + " even rows: ";
    if (report.passed) return s + "PASS\n";
    return s + "FAIL (first divergence at row " +
           std::to_string(report.first_divergence->first) + ", cell " +
           std::to_string(report.first_divergence->second) + ")\n";
}

std::string summarize(const ReversalReport& report) {
    std::string s = "r90-reverse: machine " + std::to_string(report.machine_id) +
                    ", width " + std::to_string(report.width) + ", " +
                    std::to_string(report.pairs_checked) + "/" +
                    std::to_string(report.depth_requested / 2) +
                    " pairs checked";
    if (report.no_preimage_at)
        s += ", stopped at step " + std::to_string(*report.no_preimage_at) +
             " (no preimage)";
    s += report.passed ? ": PASS\n"
                       : ": FAIL (" + std::to_string(report.violations.size()) +
                             " violated pairs)\n";
    return s;
}

std::string summarize(const ShiftReport& report) {
    std::string s = "m54-m60-shift: width " + std::to_string(report.width) +
                    ", even rows " +
                    (report.even_rows_equal ? "equal" : "DIFFER") +
                    ", odd shift ";
    s += report.odd_shift ? std::to_string(*report.odd_shift) : "none";
    return s + (report.passed ? ": PASS\n" : ": FAIL\n");
}

std::string summarize(const ReversibilityReport& report) {
    std::string s = "reversibility: machine " +
                    std::to_string(report.machine_id) + ", width " +
                    std::to_string(report.width) + ", " +
                    std::to_string(report.recovered) + "/" +
                    std::to_string(report.configs_tested) +
                    " configurations recovered";
    return s + (report.passed ? ": PASS\n" : ": FAIL\n");
}

std::string atlas_summary_json(const std::vector<AtlasEntry>& entries) {
    json doc = json::array();
    for (const auto& e : entries)
        doc.push_back({{"machine_id", e.machine_id},
                       {"class", std::string(to_string(e.machine_class))},
                       {"blank", e.blank}});
    return doc.dump(2) + "\n";
}

}  // namespace refco
